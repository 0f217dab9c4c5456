// Global degree-of-freedom numbering and clamped boundary conditions.
//
// Morley: one value DOF per vertex, one normal-average DOF per edge.
// NTW: one value DOF per vertex, one midpoint-value and one normal-average
// DOF per edge (interleaved). Edge-normal DOFs are defined against the
// edge's global normal n_F, so both incident triangles see the same
// functional and every local->global sign is +1; the sign array is kept so
// assembly code stays correct for elements with per-triangle normals.
//
// Clamped conditions u = du/dn = 0 constrain every DOF whose functional
// lives on the boundary: vertex values at boundary vertices, midpoint and
// normal-average DOFs on boundary edges.
#pragma once

#include "biharm/element.hpp"
#include "biharm/mesh.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace biharm {

struct DofMap {
    int n_total = 0;
    int n_free = 0;
    int ndof_local = 0;
    std::vector<std::array<int, 9>> tri_dofs;      // local -> global
    std::vector<std::array<std::int8_t, 9>> tri_sign;
    std::vector<std::uint8_t> on_boundary;         // per global DOF
    std::vector<int> free_index;                   // global -> [0,n_free) or -1
};

inline DofMap build_dofmap(const Mesh& mesh, const ElementDef& elem) {
    DofMap dm;
    dm.ndof_local = elem.ndof_local;
    const int nv = mesh.n_vertices();
    const int ne = mesh.n_edges();
    const bool ntw = (elem.type == ElementType::ntw);
    dm.n_total = ntw ? nv + 2 * ne : nv + ne;

    dm.tri_dofs.assign(mesh.n_triangles(), {});
    dm.tri_sign.assign(mesh.n_triangles(), {});
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        auto& dofs = dm.tri_dofs[t];
        auto& sign = dm.tri_sign[t];
        sign.fill(1);
        for (int i = 0; i < 3; ++i) dofs[i] = mesh.triangles[t].v[i];
        for (int i = 0; i < 3; ++i) {
            const int e = mesh.tri_edges[t][i];
            if (ntw) {
                dofs[3 + i] = nv + 2 * e;     // midpoint value
                dofs[6 + i] = nv + 2 * e + 1; // normal average
            } else {
                dofs[3 + i] = nv + e;
            }
        }
    }

    dm.on_boundary.assign(dm.n_total, 0);
    for (int v = 0; v < nv; ++v) dm.on_boundary[v] = mesh.vertex_boundary[v];
    for (int e = 0; e < ne; ++e) {
        if (!mesh.edges[e].boundary) continue;
        if (ntw) {
            dm.on_boundary[nv + 2 * e] = 1;
            dm.on_boundary[nv + 2 * e + 1] = 1;
        } else {
            dm.on_boundary[nv + e] = 1;
        }
    }

    dm.free_index.assign(dm.n_total, -1);
    for (int i = 0; i < dm.n_total; ++i)
        if (!dm.on_boundary[i]) dm.free_index[i] = dm.n_free++;
    return dm;
}

} // namespace biharm
