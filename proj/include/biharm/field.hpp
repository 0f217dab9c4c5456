// Piecewise-polynomial finite element fields over a mesh.
#pragma once

#include "biharm/dofmap.hpp"
#include "biharm/element.hpp"
#include "biharm/mesh.hpp"
#include "biharm/parallel.hpp"

#include <Eigen/Dense>

#include <random>
#include <vector>

namespace biharm {

// local nodal bases for all triangles, built in parallel
inline std::vector<LocalBasis> build_all_bases(const Mesh& mesh, const ElementDef& elem) {
    std::vector<LocalBasis> bases(mesh.n_triangles());
    parallel_for(mesh.n_triangles(),
                 [&](int t) { bases[t] = build_local_basis(elem, mesh, t); });
    return bases;
}

// per-triangle polynomial for a global coefficient vector
inline std::vector<Poly2> combine_tri_polys(const Mesh& mesh, const ElementDef& elem,
                                            const DofMap& dofmap, const Eigen::VectorXd& coeffs,
                                            const std::vector<LocalBasis>* bases = nullptr) {
    std::vector<Poly2> polys(mesh.n_triangles());
    parallel_for(mesh.n_triangles(), [&](int t) {
        const LocalBasis local = bases ? (*bases)[t] : build_local_basis(elem, mesh, t);
        Poly2 p(mesh.centroid(t), mesh.diameter(t), elem.shape_degree);
        for (int i = 0; i < elem.ndof_local; ++i) {
            const double c = coeffs[dofmap.tri_dofs[t][i]] * dofmap.tri_sign[t][i];
            if (c != 0.0) p.add_scaled(local.phi[i], c);
        }
        polys[t] = std::move(p);
    });
    return polys;
}

// A solved (or interpolated) discrete function: global coefficients plus the
// per-triangle polynomial cache used for evaluation.
struct DiscreteField {
    const Mesh* mesh = nullptr;
    ElementDef elem = ElementDef::morley();
    Eigen::VectorXd coeffs;      // all DOFs; constrained entries are zero
    std::vector<Poly2> tri_poly; // evaluation cache

    double value(int t, const Vec2& p) const { return tri_poly[t].value(p); }
    Vec2 gradient(int t, const Vec2& p) const { return tri_poly[t].gradient(p); }
    Mat2 hessian(int t, const Vec2& p) const { return tri_poly[t].hessian(p); }
};

inline DiscreteField make_field(const Mesh& mesh, const ElementDef& elem, const DofMap& dofmap,
                                Eigen::VectorXd coeffs,
                                const std::vector<LocalBasis>* bases = nullptr) {
    DiscreteField f;
    f.mesh = &mesh;
    f.elem = elem;
    f.tri_poly = combine_tri_polys(mesh, elem, dofmap, coeffs, bases);
    f.coeffs = std::move(coeffs);
    return f;
}

// DOF interpolation of a smooth function given by value/gradient callables
template <class ValueFn, class GradFn>
DiscreteField interpolate(const Mesh& mesh, const ElementDef& elem, const DofMap& dofmap,
                          const ValueFn& value, const GradFn& grad) {
    Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(dofmap.n_total);
    const int nv = mesh.n_vertices();
    for (int v = 0; v < nv; ++v) coeffs[v] = value(mesh.vertices[v]);
    const EdgeQuadRule edge_q = edge_rule(8);
    for (int e = 0; e < mesh.n_edges(); ++e) {
        const MeshEdge& edge = mesh.edges[e];
        const Vec2 pa = mesh.vertices[edge.a], pb = mesh.vertices[edge.b];
        double avg = 0.0;
        for (std::size_t q = 0; q < edge_q.points.size(); ++q) {
            const Vec2 p = pa + (pb - pa) * edge_q.points[q];
            avg += edge_q.weights[q] * grad(p).dot(edge.normal);
        }
        if (elem.type == ElementType::ntw) {
            coeffs[nv + 2 * e] = value((pa + pb) * 0.5);
            coeffs[nv + 2 * e + 1] = avg;
        } else {
            coeffs[nv + e] = avg;
        }
    }
    return make_field(mesh, elem, dofmap, std::move(coeffs));
}

// Certifies the element's weak-continuity conditions numerically: gradient
// jump moments against P_{ell-2}(F) on every interior edge (and, for C0
// elements, pointwise value jumps) over random global coefficient vectors.
inline CertifyReport certify_assumption(const ElementDef& elem, const Mesh& mesh, int trials,
                                        unsigned seed = 12345) {
    CertifyReport report;
    report.c0_element = elem.c0;
    const DofMap dofmap = build_dofmap(mesh, elem);
    const std::vector<LocalBasis> bases = build_all_bases(mesh, elem);
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int trial = 0; trial < trials; ++trial) {
        Eigen::VectorXd coeffs(dofmap.n_total);
        for (int i = 0; i < dofmap.n_total; ++i) coeffs[i] = uni(rng);
        const std::vector<Poly2> polys = combine_tri_polys(mesh, elem, dofmap, coeffs, &bases);
        const JumpMoments jm = measure_jump_moments(mesh, elem.full_degree, polys);
        report.moment_residual = std::max(report.moment_residual, jm.moment_max);
        report.value_moment_residual =
            std::max(report.value_moment_residual, jm.eq_value_moment_max);
        report.value_jump_max = std::max(report.value_jump_max, jm.value_jump_max);
    }
    return report;
}

} // namespace biharm
