// Nonconforming plate elements: Morley and Nilssen-Tai-Winther (NTW).
//
// Morley: quadratic shape space; DOFs are the three vertex values and the
// three edge averages of the normal derivative. Discontinuous across edges.
//
// NTW: P2 enriched with the three products of the cubic volume bubble
// b_T = lambda_1 lambda_2 lambda_3 with a barycentric coordinate (quartics);
// DOFs are vertex values, edge-midpoint values, and edge averages of the
// normal derivative. The edge traces are quadratic, so the element is C0.
//
// Nodal bases are built per physical triangle by inverting the DOF matrix
// in the centroid-centered, h_T-scaled monomial frame; edge-normal DOFs use
// the edge's global normal n_F, which makes the local->global sign +1 on
// both sides of an interior edge.
#pragma once

#include "biharm/mesh.hpp"
#include "biharm/polynomial.hpp"
#include "biharm/quadrature.hpp"

#include <Eigen/Dense>

#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace biharm {

enum class ElementType { morley, ntw };

struct ElementDef {
    ElementType type;
    int shape_degree;   // L: maximal polynomial degree of the shape space
    int full_degree;    // ell: largest p with P_p(T) contained in the shape space
    bool c0;            // globally continuous traces
    int ndof_local;

    const char* name() const { return type == ElementType::morley ? "morley" : "ntw"; }

    static const ElementDef& morley() {
        static const ElementDef def{ElementType::morley, 2, 2, false, 6};
        return def;
    }
    static const ElementDef& ntw() {
        static const ElementDef def{ElementType::ntw, 4, 2, true, 9};
        return def;
    }
    static const ElementDef& by_name(const std::string& name) {
        if (name == "morley") return morley();
        if (name == "ntw") return ntw();
        throw std::invalid_argument("unknown element '" + name + "'");
    }
};

// Admissible parameter combinations. Morley is restricted to the pure plate
// case alpha=0; the limit eps=0 needs a C0 element and alpha=1.
inline bool admissible(const ElementDef& elem, double eps, int alpha, std::string* why = nullptr) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (alpha != 0 && alpha != 1) return fail("alpha must be 0 or 1");
    if (eps < 0.0 || eps > 1.0) return fail("epsilon must lie in [0,1]");
    if (alpha == 1 && !elem.c0) return fail("alpha=1 requires a C0 element (use ntw)");
    if (eps == 0.0 && !(alpha == 1 && elem.c0))
        return fail("epsilon=0 requires alpha=1 and a C0 element");
    return true;
}

inline void require_admissible(const ElementDef& elem, double eps, int alpha) {
    std::string why;
    if (!admissible(elem, eps, alpha, &why))
        throw std::invalid_argument("inadmissible configuration (" + std::string(elem.name()) +
                                    ", eps=" + std::to_string(eps) +
                                    ", alpha=" + std::to_string(alpha) + "): " + why);
}

struct LocalBasis {
    std::vector<Poly2> phi; // Kronecker basis w.r.t. the local DOF ordering
    double condition = 0.0;
};

namespace detail {

// barycentric coordinate lambda_i as a polynomial in the triangle's frame
inline Poly2 barycentric_poly(const Mesh& mesh, int t, int i) {
    const Vec2 vj = mesh.vertex(t, (i + 1) % 3);
    const Vec2 vk = mesh.vertex(t, (i + 2) % 3);
    const double twice_area = 2.0 * mesh.area(t);
    const double a = vj.x * vk.y - vk.x * vj.y;
    const double b = vj.y - vk.y;
    const double c = vk.x - vj.x;
    const Vec2 ctr = mesh.centroid(t);
    const double h = mesh.diameter(t);
    Poly2 lam(ctr, h, 1);
    lam.coef(0, 0) = (a + b * ctr.x + c * ctr.y) / twice_area;
    lam.coef(1, 0) = b * h / twice_area;
    lam.coef(0, 1) = c * h / twice_area;
    return lam;
}

// raw shape basis in the local frame (monomials, plus bubbles for NTW)
inline std::vector<Poly2> shape_basis(const ElementDef& elem, const Mesh& mesh, int t) {
    const Vec2 ctr = mesh.centroid(t);
    const double h = mesh.diameter(t);
    std::vector<Poly2> shapes;
    for (int k = 0; k <= 2; ++k)
        for (int b = 0; b <= k; ++b) {
            Poly2 mono(ctr, h, 2);
            mono.coef(k - b, b) = 1.0;
            shapes.push_back(mono);
        }
    if (elem.type == ElementType::ntw) {
        const Poly2 l0 = barycentric_poly(mesh, t, 0);
        const Poly2 l1 = barycentric_poly(mesh, t, 1);
        const Poly2 l2 = barycentric_poly(mesh, t, 2);
        const Poly2 bubble = l0.multiply(l1).multiply(l2);
        shapes.push_back(bubble.multiply(l0));
        shapes.push_back(bubble.multiply(l1));
        shapes.push_back(bubble.multiply(l2));
    }
    return shapes;
}

// evaluates all local DOF functionals of triangle t on a function given by
// value/gradient callables (used for both Poly2 shapes and smooth data)
template <class ValueFn, class GradFn>
Eigen::VectorXd apply_local_dofs(const ElementDef& elem, const Mesh& mesh, int t,
                                 const ValueFn& value, const GradFn& grad) {
    Eigen::VectorXd out(elem.ndof_local);
    for (int i = 0; i < 3; ++i) out[i] = value(mesh.vertex(t, i));
    static const EdgeQuadRule edge_q = edge_rule(8);
    const int normal_offset = (elem.type == ElementType::ntw) ? 6 : 3;
    for (int i = 0; i < 3; ++i) {
        const MeshEdge& e = mesh.edges[mesh.tri_edges[t][i]];
        const Vec2 pa = mesh.vertices[e.a], pb = mesh.vertices[e.b];
        if (elem.type == ElementType::ntw)
            out[3 + i] = value((pa + pb) * 0.5);
        double avg = 0.0;
        for (std::size_t q = 0; q < edge_q.points.size(); ++q) {
            const Vec2 p = pa + (pb - pa) * edge_q.points[q];
            avg += edge_q.weights[q] * grad(p).dot(e.normal);
        }
        out[normal_offset + i] = avg; // weights sum to 1: mean over the edge
    }
    return out;
}

inline Eigen::VectorXd apply_local_dofs(const ElementDef& elem, const Mesh& mesh, int t,
                                        const Poly2& p) {
    return apply_local_dofs(
        elem, mesh, t, [&](const Vec2& x) { return p.value(x); },
        [&](const Vec2& x) { return p.gradient(x); });
}

} // namespace detail

inline LocalBasis build_local_basis(const ElementDef& elem, const Mesh& mesh, int t) {
    const std::vector<Poly2> shapes = detail::shape_basis(elem, mesh, t);
    const int n = elem.ndof_local;
    Eigen::MatrixXd dof_matrix(n, n);
    for (int j = 0; j < n; ++j)
        dof_matrix.col(j) = detail::apply_local_dofs(elem, mesh, t, shapes[j]);

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(dof_matrix,
                                          Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double cond = svd.singularValues()(0) / svd.singularValues()(n - 1);
    if (!std::isfinite(cond) || svd.singularValues()(n - 1) <= 0.0)
        throw std::runtime_error("build_local_basis: singular DOF matrix on triangle " +
                                 std::to_string(t));

    Eigen::MatrixXd coeffs = dof_matrix.fullPivLu().solve(Eigen::MatrixXd::Identity(n, n));
    LocalBasis basis;
    basis.condition = cond;
    basis.phi.reserve(n);
    for (int k = 0; k < n; ++k) {
        Poly2 phi(mesh.centroid(t), mesh.diameter(t), elem.shape_degree);
        for (int j = 0; j < n; ++j)
            if (coeffs(j, k) != 0.0) phi.add_scaled(shapes[j], coeffs(j, k));
        basis.phi.push_back(std::move(phi));
    }
    return basis;
}

// L2(T)-orthogonal projection of a polynomial onto P_ell(T)
inline Poly2 l2_project(const Mesh& mesh, int t, const Poly2& p, int ell) {
    const int n = Poly2::n_coeffs(ell);
    const Vec2 ctr = mesh.centroid(t);
    const double h = mesh.diameter(t);
    static const TriQuadRule quad = triangle_rule(8);

    std::vector<Poly2> monos;
    for (int k = 0; k <= ell; ++k)
        for (int b = 0; b <= k; ++b) {
            Poly2 mono(ctr, h, ell);
            mono.coef(k - b, b) = 1.0;
            monos.push_back(mono);
        }

    const Vec2 a = mesh.vertex(t, 0), bb = mesh.vertex(t, 1), c = mesh.vertex(t, 2);
    const double jac = 2.0 * mesh.area(t);
    Eigen::MatrixXd mass = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    for (std::size_t q = 0; q < quad.points.size(); ++q) {
        const Vec2 x = bary_to_point(a, bb, c, quad.points[q]);
        const double w = quad.weights[q] * jac;
        Eigen::VectorXd m(n);
        for (int i = 0; i < n; ++i) m[i] = monos[i].value(x);
        mass.noalias() += w * m * m.transpose();
        rhs.noalias() += (w * p.value(x)) * m;
    }
    const Eigen::VectorXd coeff = mass.ldlt().solve(rhs);
    Poly2 out(ctr, h, ell);
    for (int i = 0; i < n; ++i) out.add_scaled(monos[i], coeff[i]);
    return out;
}

// ---------------------------------------------------------------------------
// weak-continuity certification
// ---------------------------------------------------------------------------

struct JumpMoments {
    double moment_max = 0.0;     // edge moments of [grad v] against P_{ell-2}(F)
    double value_jump_max = 0.0; // sup of |[v]| at edge quadrature points
    double eq_value_moment_max = 0.0; // moments of [v] against P_{ell-3}(F); 0 if vacuous
};

// Measures inter-element jump moments of a piecewise polynomial field given
// per-triangle polynomials. Used by certify_assumption and as a negative
// control with deliberately broken fields.
inline JumpMoments measure_jump_moments(const Mesh& mesh, int ell,
                                        const std::vector<Poly2>& tri_poly) {
    static const EdgeQuadRule edge_q = edge_rule(8);
    JumpMoments jm;
    const int n_grad_moments = ell - 1;  // basis of P_{ell-2}(F)
    const int n_value_moments = ell - 2; // basis of P_{ell-3}(F), may be zero
    for (const MeshEdge& e : mesh.edges) {
        if (e.boundary) continue;
        const Vec2 pa = mesh.vertices[e.a], pb = mesh.vertices[e.b];
        const Vec2 tangent = (pb - pa).normalized();
        std::vector<double> mom_n(std::max(n_grad_moments, 0), 0.0);
        std::vector<double> mom_t(std::max(n_grad_moments, 0), 0.0);
        std::vector<double> mom_v(std::max(n_value_moments, 0), 0.0);
        for (std::size_t q = 0; q < edge_q.points.size(); ++q) {
            const double tq = edge_q.points[q];
            const Vec2 p = pa + (pb - pa) * tq;
            const double w = edge_q.weights[q] * e.length;
            const Vec2 gjump = tri_poly[e.t_plus].gradient(p) - tri_poly[e.t_minus].gradient(p);
            const double vjump = tri_poly[e.t_plus].value(p) - tri_poly[e.t_minus].value(p);
            jm.value_jump_max = std::max(jm.value_jump_max, std::abs(vjump));
            double qk = 1.0;
            for (int k = 0; k < n_grad_moments; ++k) {
                mom_n[k] += w * gjump.dot(e.normal) * qk;
                mom_t[k] += w * gjump.dot(tangent) * qk;
                if (k < n_value_moments) mom_v[k] += w * vjump * qk;
                qk *= (tq - 0.5);
            }
        }
        for (double m : mom_n) jm.moment_max = std::max(jm.moment_max, std::abs(m));
        for (double m : mom_t) jm.moment_max = std::max(jm.moment_max, std::abs(m));
        for (double m : mom_v) jm.eq_value_moment_max = std::max(jm.eq_value_moment_max, std::abs(m));
    }
    return jm;
}

struct CertifyReport {
    double moment_residual = 0.0;       // gradient-jump moments (must vanish)
    double value_moment_residual = 0.0; // value-jump moments (vacuous for ell=2)
    double value_jump_max = 0.0;        // informational for discontinuous elements
    bool c0_element = false;

    // residual that must vanish for the element to be certified
    double certified_max() const {
        double r = std::max(moment_residual, value_moment_residual);
        if (c0_element) r = std::max(r, value_jump_max);
        return r;
    }
};

// certify_assumption lives in field.hpp; it needs the global DOF map

} // namespace biharm
