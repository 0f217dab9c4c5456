// Global assembly of the piecewise bilinear form
//     a_h(u,v) = eps^2 (D2_h u, D2_h v) + alpha (grad_h u, grad_h v)
// with clamped boundary conditions imposed by row/column elimination, and a
// sparse SPD solve (Cholesky with iterative refinement).
//
// Local element matrices are computed in parallel; the global scatter runs
// sequentially in triangle order so assembled matrices are bit-reproducible
// for any worker count.
#pragma once

#include "biharm/dofmap.hpp"
#include "biharm/element.hpp"
#include "biharm/field.hpp"
#include "biharm/mesh.hpp"
#include "biharm/parallel.hpp"
#include "biharm/quadrature.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace biharm {

using SpaceFn = std::function<double(const Vec2&)>;

namespace detail {

struct LocalSystem {
    Eigen::MatrixXd stiffness;
    Eigen::VectorXd load;
};

inline std::vector<LocalSystem> local_systems(const Mesh& mesh, const ElementDef& elem,
                                              const std::vector<LocalBasis>& bases, double eps,
                                              int alpha, const SpaceFn& f, int quad_degree) {
    const TriQuadRule quad = triangle_rule(quad_degree);
    const double eps2 = eps * eps;
    std::vector<LocalSystem> locals(mesh.n_triangles());
    parallel_for(mesh.n_triangles(), [&](int t) {
        const int n = elem.ndof_local;
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
        Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
        const Vec2 va = mesh.vertex(t, 0), vb = mesh.vertex(t, 1), vc = mesh.vertex(t, 2);
        const double jac = 2.0 * mesh.area(t);
        std::vector<Vec2> grads(n);
        std::vector<Mat2> hessians(n);
        std::vector<double> values(n);
        for (std::size_t q = 0; q < quad.points.size(); ++q) {
            const Vec2 x = bary_to_point(va, vb, vc, quad.points[q]);
            const double w = quad.weights[q] * jac;
            for (int i = 0; i < n; ++i) {
                const Poly2& phi = bases[t].phi[i];
                values[i] = phi.value(x);
                grads[i] = phi.gradient(x);
                hessians[i] = phi.hessian(x);
            }
            const double fx = f ? f(x) : 0.0;
            for (int i = 0; i < n; ++i) {
                for (int j = i; j < n; ++j) {
                    double entry = 0.0;
                    if (eps2 != 0.0) entry += eps2 * hessians[i].ddot(hessians[j]);
                    if (alpha != 0) entry += grads[i].dot(grads[j]);
                    A(i, j) += w * entry;
                }
                b[i] += w * fx * values[i];
            }
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) A(i, j) = A(j, i);
        locals[t] = {std::move(A), std::move(b)};
    });
    return locals;
}

} // namespace detail

// pre-BC stiffness matrix over all DOFs (for kernel/symmetry tests)
inline Eigen::SparseMatrix<double> assemble_matrix_full(const Mesh& mesh, const ElementDef& elem,
                                                        const DofMap& dofmap, double eps,
                                                        int alpha, int quad_degree = 8) {
    const std::vector<LocalBasis> bases = build_all_bases(mesh, elem);
    const auto locals = detail::local_systems(mesh, elem, bases, eps, alpha, nullptr, quad_degree);
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(mesh.n_triangles() * elem.ndof_local * elem.ndof_local);
    for (int t = 0; t < mesh.n_triangles(); ++t)
        for (int i = 0; i < elem.ndof_local; ++i)
            for (int j = 0; j < elem.ndof_local; ++j) {
                const double v = locals[t].stiffness(i, j) * dofmap.tri_sign[t][i] *
                                 dofmap.tri_sign[t][j];
                trip.emplace_back(dofmap.tri_dofs[t][i], dofmap.tri_dofs[t][j], v);
            }
    Eigen::SparseMatrix<double> A(dofmap.n_total, dofmap.n_total);
    A.setFromTriplets(trip.begin(), trip.end());
    return A;
}

struct AssembledSystem {
    Eigen::SparseMatrix<double> matrix; // free x free, symmetric positive definite
    Eigen::VectorXd rhs;                // free DOFs
};

inline AssembledSystem assemble(const Mesh& mesh, const ElementDef& elem, const DofMap& dofmap,
                                double eps, int alpha, const SpaceFn& f, int quad_degree = 8,
                                const std::vector<LocalBasis>* bases_in = nullptr) {
    require_admissible(elem, eps, alpha);
    std::vector<LocalBasis> bases_local;
    if (!bases_in) {
        bases_local = build_all_bases(mesh, elem);
        bases_in = &bases_local;
    }
    const auto locals = detail::local_systems(mesh, elem, *bases_in, eps, alpha, f, quad_degree);

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(mesh.n_triangles() * elem.ndof_local * elem.ndof_local);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(dofmap.n_free);
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        const auto& dofs = dofmap.tri_dofs[t];
        const auto& sign = dofmap.tri_sign[t];
        for (int i = 0; i < elem.ndof_local; ++i) {
            const int fi = dofmap.free_index[dofs[i]];
            if (fi < 0) continue;
            rhs[fi] += locals[t].load[i] * sign[i];
            for (int j = 0; j < elem.ndof_local; ++j) {
                const int fj = dofmap.free_index[dofs[j]];
                if (fj < 0) continue;
                trip.emplace_back(fi, fj, locals[t].stiffness(i, j) * sign[i] * sign[j]);
            }
        }
    }
    AssembledSystem sys;
    sys.matrix.resize(dofmap.n_free, dofmap.n_free);
    sys.matrix.setFromTriplets(trip.begin(), trip.end());
    sys.rhs = std::move(rhs);
    return sys;
}

// Sparse SPD solve: Cholesky factorization plus iterative refinement until
// ||Ax-b|| <= 1e-12 max(1, ||b||); fails hard above 1e-10.
inline Eigen::VectorXd solve_spd(const Eigen::SparseMatrix<double>& A, const Eigen::VectorXd& b) {
    if (A.rows() == 0) return Eigen::VectorXd(0);
    Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt(A);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("solve_spd: Cholesky factorization failed (matrix not SPD?)");
    Eigen::VectorXd x = llt.solve(b);
    const double target = 1e-12 * std::max(1.0, b.norm());
    for (int it = 0; it < 6; ++it) {
        const Eigen::VectorXd r = b - A * x;
        if (r.norm() <= target) break;
        x += llt.solve(r);
    }
    const double residual = (b - A * x).norm();
    if (!(residual <= 1e-10 * std::max(1.0, b.norm())))
        throw std::runtime_error("solve_spd: residual tolerance not reached");
    return x;
}

inline DiscreteField solve_problem(const Mesh& mesh, const ElementDef& elem, double eps,
                                   int alpha, const SpaceFn& f, int quad_degree = 8) {
    require_admissible(elem, eps, alpha);
    const DofMap dofmap = build_dofmap(mesh, elem);
    const std::vector<LocalBasis> bases = build_all_bases(mesh, elem);
    const AssembledSystem sys = assemble(mesh, elem, dofmap, eps, alpha, f, quad_degree, &bases);
    const Eigen::VectorXd x = solve_spd(sys.matrix, sys.rhs);
    Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(dofmap.n_total);
    for (int g = 0; g < dofmap.n_total; ++g)
        if (dofmap.free_index[g] >= 0) coeffs[g] = x[dofmap.free_index[g]];
    return make_field(mesh, elem, dofmap, std::move(coeffs), &bases);
}

} // namespace biharm
