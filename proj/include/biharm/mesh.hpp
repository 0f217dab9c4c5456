// Conforming triangle meshes with newest-vertex bisection refinement.
//
// Triangles are stored as vertex index triples (v0,v1,v2), positively
// oriented, with the refinement edge always being (v1,v2). Bisection at the
// midpoint m of (v1,v2) produces children (m,v2,v0) and (m,v0,v1); the new
// vertex is the newest vertex of both children and the parent's remaining
// edges become the children's refinement edges. A marked-edge closure pass
// keeps the output conforming; with longest-edge initial assignment each
// triangle is bisected at most twice per refine() call.
#pragma once

#include "biharm/geometry.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace biharm {

struct Triangle {
    std::array<int, 3> v{};
    int generation = 0;
};

struct MeshEdge {
    int a = -1, b = -1;      // endpoint vertex indices
    int t_plus = -1;         // incident triangle with smaller index
    int t_minus = -1;        // second incident triangle, -1 on the boundary
    Vec2 normal;             // unit, points from t_plus into t_minus (outward on boundary)
    double length = 0.0;     // h_F
    bool boundary = false;
};

// set of triangle indices selected for refinement
using MarkSet = std::vector<int>;

class Mesh {
public:
    std::vector<Vec2> vertices;
    std::vector<Triangle> triangles;
    std::vector<MeshEdge> edges;
    std::vector<std::array<int, 3>> tri_edges; // edge index opposite local vertex i
    std::vector<std::uint8_t> vertex_boundary;
    double initial_shape_ratio = 0.0; // worst h/inradius of the generating mesh

    int n_vertices() const { return static_cast<int>(vertices.size()); }
    int n_triangles() const { return static_cast<int>(triangles.size()); }
    int n_edges() const { return static_cast<int>(edges.size()); }

    const Vec2& vertex(int t, int local) const { return vertices[triangles[t].v[local]]; }

    double signed_area(int t) const {
        const Vec2 &a = vertex(t, 0), &b = vertex(t, 1), &c = vertex(t, 2);
        return 0.5 * (b - a).cross(c - a);
    }
    double area(int t) const { return signed_area(t); }

    double diameter(int t) const {
        const Vec2 &a = vertex(t, 0), &b = vertex(t, 1), &c = vertex(t, 2);
        double d = (b - a).norm();
        d = std::max(d, (c - b).norm());
        return std::max(d, (a - c).norm());
    }

    Vec2 centroid(int t) const {
        return (vertex(t, 0) + vertex(t, 1) + vertex(t, 2)) / 3.0;
    }

    double inradius(int t) const {
        const Vec2 &a = vertex(t, 0), &b = vertex(t, 1), &c = vertex(t, 2);
        const double per = (b - a).norm() + (c - b).norm() + (a - c).norm();
        return 2.0 * area(t) / per;
    }

    double shape_ratio(int t) const { return diameter(t) / inradius(t); }

    double h_max() const {
        double h = 0.0;
        for (int t = 0; t < n_triangles(); ++t) h = std::max(h, diameter(t));
        return h;
    }

    double total_area() const {
        double s = 0.0;
        for (int t = 0; t < n_triangles(); ++t) s += area(t);
        return s;
    }

    // plain-text dump: "v x y" per vertex, "t i j k" per triangle
    void dump(std::ostream& os) const {
        for (const Vec2& p : vertices) os << "v " << p.x << " " << p.y << "\n";
        for (const Triangle& tri : triangles)
            os << "t " << tri.v[0] << " " << tri.v[1] << " " << tri.v[2] << "\n";
    }
};

namespace detail {

inline std::pair<int, int> edge_key(int a, int b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

// Builds edge incidence, normals and boundary flags; validates conformity
// and orientation. Throws on degenerate input.
inline void finalize_mesh(Mesh& mesh) {
    std::map<std::pair<int, int>, int> edge_of;
    mesh.edges.clear();
    mesh.tri_edges.assign(mesh.triangles.size(), {-1, -1, -1});

    for (int t = 0; t < mesh.n_triangles(); ++t) {
        if (mesh.signed_area(t) <= 0.0)
            throw std::runtime_error("mesh: triangle " + std::to_string(t) +
                                     " not positively oriented");
        for (int i = 0; i < 3; ++i) {
            const int a = mesh.triangles[t].v[(i + 1) % 3];
            const int b = mesh.triangles[t].v[(i + 2) % 3];
            const auto key = edge_key(a, b);
            auto it = edge_of.find(key);
            if (it == edge_of.end()) {
                MeshEdge e;
                e.a = key.first;
                e.b = key.second;
                e.t_plus = t;
                e.length = (mesh.vertices[e.b] - mesh.vertices[e.a]).norm();
                edge_of.emplace(key, mesh.n_edges());
                mesh.tri_edges[t][i] = mesh.n_edges();
                mesh.edges.push_back(e);
            } else {
                MeshEdge& e = mesh.edges[it->second];
                if (e.t_minus != -1)
                    throw std::runtime_error("mesh: edge shared by more than two triangles");
                e.t_minus = t; // t > e.t_plus since triangles are visited in order
                mesh.tri_edges[t][i] = it->second;
            }
        }
    }

    mesh.vertex_boundary.assign(mesh.vertices.size(), 0);
    for (MeshEdge& e : mesh.edges) {
        e.boundary = (e.t_minus == -1);
        if (e.boundary) {
            mesh.vertex_boundary[e.a] = 1;
            mesh.vertex_boundary[e.b] = 1;
        }
        // unit normal pointing out of t_plus
        const Vec2 d = mesh.vertices[e.b] - mesh.vertices[e.a];
        Vec2 n = d.perp_cw().normalized();
        const int tp = e.t_plus;
        Vec2 mid = (mesh.vertices[e.a] + mesh.vertices[e.b]) * 0.5;
        Vec2 to_opposite = mesh.centroid(tp) - mid;
        if (n.dot(to_opposite) > 0) n = n * -1.0;
        e.normal = n;
    }
}

inline double worst_shape_ratio(const Mesh& mesh) {
    double r = 0.0;
    for (int t = 0; t < mesh.n_triangles(); ++t) r = std::max(r, mesh.shape_ratio(t));
    return r;
}

// Longest edge of (v0,v1,v2) moved into refinement position (v1,v2),
// preserving orientation by cyclic rotation.
inline Triangle with_longest_refinement_edge(const Mesh& mesh, Triangle tri) {
    double best = -1.0;
    int best_i = 0;
    for (int i = 0; i < 3; ++i) {
        const double len =
            (mesh.vertices[tri.v[(i + 2) % 3]] - mesh.vertices[tri.v[(i + 1) % 3]]).norm();
        if (len > best) {
            best = len;
            best_i = i;
        }
    }
    Triangle out = tri;
    for (int i = 0; i < 3; ++i) out.v[i] = tri.v[(best_i + i) % 3];
    return out;
}

} // namespace detail

inline Mesh generate_square_mesh(int n) {
    if (n < 1) throw std::invalid_argument("generate_square_mesh: n must be >= 1");
    Mesh mesh;
    const auto vid = [n](int i, int j) { return j * (n + 1) + i; };
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i)
            mesh.vertices.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n});
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const int a = vid(i, j), b = vid(i + 1, j), c = vid(i + 1, j + 1), d = vid(i, j + 1);
            // split along the diagonal a-c; hypotenuse is the refinement edge
            mesh.triangles.push_back({{b, c, a}, 0});
            mesh.triangles.push_back({{d, a, c}, 0});
        }
    detail::finalize_mesh(mesh);
    mesh.initial_shape_ratio = detail::worst_shape_ratio(mesh);
    return mesh;
}

// coarsest mesh of (-1,1)^2 minus [0,1]x[-1,0]; all diagonals meet the
// reentrant corner at the origin
inline Mesh generate_lshape_mesh() {
    Mesh mesh;
    mesh.vertices = {{0.0, 0.0},  {1.0, 0.0},  {1.0, 1.0}, {0.0, 1.0},
                     {-1.0, 1.0}, {-1.0, 0.0}, {-1.0, -1.0}, {0.0, -1.0}};
    const int O = 0;
    auto add_square = [&](int p, int q, int r) {
        // square (O, p, q, r) in CCW order, diagonal O-q as refinement edge
        mesh.triangles.push_back({{p, q, O}, 0});
        mesh.triangles.push_back({{r, O, q}, 0});
    };
    add_square(1, 2, 3); // [0,1] x [0,1]
    add_square(3, 4, 5); // [-1,0] x [0,1]
    add_square(5, 6, 7); // [-1,0] x [-1,0]
    detail::finalize_mesh(mesh);
    mesh.initial_shape_ratio = detail::worst_shape_ratio(mesh);
    return mesh;
}

namespace detail {

// Bisects every triangle whose edges carry marks, recursively, producing a
// conforming mesh. `edge_marked` must already be closed under the rule
// "any marked edge in a triangle implies its refinement edge is marked".
inline Mesh bisect_marked_edges(const Mesh& mesh, const std::vector<std::uint8_t>& edge_marked) {
    Mesh out;
    out.vertices = mesh.vertices;
    out.initial_shape_ratio = mesh.initial_shape_ratio;

    std::map<std::pair<int, int>, int> edge_index;
    for (int e = 0; e < mesh.n_edges(); ++e)
        edge_index.emplace(edge_key(mesh.edges[e].a, mesh.edges[e].b), e);

    std::vector<int> midpoint(mesh.n_edges(), -1);
    for (int e = 0; e < mesh.n_edges(); ++e) {
        if (!edge_marked[e]) continue;
        midpoint[e] = out.n_vertices();
        out.vertices.push_back((mesh.vertices[mesh.edges[e].a] + mesh.vertices[mesh.edges[e].b]) * 0.5);
    }

    // marked original edge carrying the triangle's refinement edge, or -1
    auto marked_ref_edge = [&](const Triangle& tri) {
        auto it = edge_index.find(edge_key(tri.v[1], tri.v[2]));
        if (it == edge_index.end()) return -1; // edge created by this pass
        return edge_marked[it->second] ? it->second : -1;
    };

    // recursion depth is at most two: children refine only original edges
    auto emit = [&](auto&& self, const Triangle& tri) -> void {
        const int e = marked_ref_edge(tri);
        if (e < 0) {
            out.triangles.push_back(tri);
            return;
        }
        const int m = midpoint[e];
        self(self, Triangle{{m, tri.v[2], tri.v[0]}, tri.generation + 1});
        self(self, Triangle{{m, tri.v[0], tri.v[1]}, tri.generation + 1});
    };
    for (const Triangle& tri : mesh.triangles) emit(emit, tri);

    finalize_mesh(out);
    const double worst = worst_shape_ratio(out);
    if (worst > 10.0 * mesh.initial_shape_ratio)
        throw std::runtime_error("refine: shape regularity degraded beyond the NVB bound");
    return out;
}

} // namespace detail

// Newest-vertex bisection of every marked triangle with conforming closure.
inline Mesh refine(const Mesh& mesh, const MarkSet& marked) {
    if (marked.empty()) return mesh;
    std::vector<std::uint8_t> edge_marked(mesh.n_edges(), 0);
    for (int t : marked) {
        if (t < 0 || t >= mesh.n_triangles())
            throw std::invalid_argument("refine: marked triangle index out of range");
        edge_marked[mesh.tri_edges[t][0]] = 1; // refinement edge is opposite v0
    }
    // closure: a triangle with any marked edge must have its refinement edge marked
    bool changed = true;
    while (changed) {
        changed = false;
        for (int t = 0; t < mesh.n_triangles(); ++t) {
            const auto& te = mesh.tri_edges[t];
            if ((edge_marked[te[0]] | edge_marked[te[1]] | edge_marked[te[2]]) &&
                !edge_marked[te[0]]) {
                edge_marked[te[0]] = 1;
                changed = true;
            }
        }
    }
    return detail::bisect_marked_edges(mesh, edge_marked);
}

// Two NVB generations for every triangle: all edges are bisected and each
// input triangle is replaced by four similar children.
inline Mesh uniform_refine(const Mesh& mesh) {
    std::vector<std::uint8_t> all(mesh.n_edges(), 1);
    return detail::bisect_marked_edges(mesh, all);
}

} // namespace biharm
