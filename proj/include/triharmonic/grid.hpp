#ifndef TRIHARMONIC_GRID_HPP
#define TRIHARMONIC_GRID_HPP

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "cr.hpp"
#include "errors.hpp"
#include "parallel.hpp"
#include "vecmat.hpp"

namespace triharmonic {

struct GridSpec {
    Vec3<double> min{-1.0, -1.0, -1.0};
    Vec3<double> max{1.0, 1.0, 1.0};
    std::array<int, 3> n{11, 11, 11}; // node count per axis
};

/// Flat sample table in deterministic row order (x index fastest, then y,
/// then z). Columns: x, y, z, F1, F2, F3 and, when stencils are requested,
/// div, curl1..3, lap1..3 (NaN on non-interior nodes).
struct SampleTable {
    bool with_stencils = false;
    std::array<int, 3> n{};
    Vec3<double> origin{};
    Vec3<double> spacing{};
    std::vector<std::array<double, 13>> rows;
    std::size_t singular_rows = 0; // evaluations that hit a singular point

    std::size_t ncols() const { return with_stencils ? 13 : 6; }
    std::size_t index(int ix, int iy, int iz) const {
        return static_cast<std::size_t>(ix) +
               static_cast<std::size_t>(n[0]) *
                   (static_cast<std::size_t>(iy) + static_cast<std::size_t>(n[1]) * iz);
    }
};

/// Evaluate a field over the grid; optionally append second-order central
/// stencil columns computed from the stored node values.
inline SampleTable sample_grid(const FieldSampler& F, const GridSpec& spec,
                               bool with_stencils = false) {
    for (int axis = 0; axis < 3; ++axis)
        if (spec.n[axis] <= 0) throw EmptyGrid("grid: node count must be positive on every axis");

    SampleTable t;
    t.with_stencils = with_stencils;
    t.n = spec.n;
    t.origin = spec.min;
    for (int axis = 0; axis < 3; ++axis)
        t.spacing[axis] =
            spec.n[axis] > 1 ? (spec.max[axis] - spec.min[axis]) / (spec.n[axis] - 1) : 0.0;

    const std::size_t total = static_cast<std::size_t>(spec.n[0]) * spec.n[1] * spec.n[2];
    t.rows.assign(total, {});
    std::vector<char> singular(total, 0);
    const double nan = std::numeric_limits<double>::quiet_NaN();

    parallel_for(total, [&](std::size_t idx) {
        const int ix = static_cast<int>(idx % spec.n[0]);
        const int iy = static_cast<int>((idx / spec.n[0]) % spec.n[1]);
        const int iz = static_cast<int>(idx / (static_cast<std::size_t>(spec.n[0]) * spec.n[1]));
        const Vec3<double> q{t.origin[0] + ix * t.spacing[0], t.origin[1] + iy * t.spacing[1],
                             t.origin[2] + iz * t.spacing[2]};
        auto& row = t.rows[idx];
        row[0] = q[0];
        row[1] = q[1];
        row[2] = q[2];
        try {
            const Element<double> v = F(q);
            row[3] = v[0];
            row[4] = v[1];
            row[5] = v[2];
        } catch (const SingularDenominator&) {
            row[3] = row[4] = row[5] = nan;
            singular[idx] = 1;
        }
        for (std::size_t cidx = 6; cidx < 13; ++cidx) row[cidx] = nan;
    });
    for (char s : singular) t.singular_rows += s;

    if (with_stencils) {
        parallel_for(total, [&](std::size_t idx) {
            const int ix = static_cast<int>(idx % spec.n[0]);
            const int iy = static_cast<int>((idx / spec.n[0]) % spec.n[1]);
            const int iz =
                static_cast<int>(idx / (static_cast<std::size_t>(spec.n[0]) * spec.n[1]));
            if (ix == 0 || iy == 0 || iz == 0 || ix == spec.n[0] - 1 || iy == spec.n[1] - 1 ||
                iz == spec.n[2] - 1)
                return; // boundary: stencil cells stay NaN
            auto& row = t.rows[idx];
            // Neighbor row indices along each axis.
            const std::size_t xp = t.index(ix + 1, iy, iz), xm = t.index(ix - 1, iy, iz);
            const std::size_t yp = t.index(ix, iy + 1, iz), ym = t.index(ix, iy - 1, iz);
            const std::size_t zp = t.index(ix, iy, iz + 1), zm = t.index(ix, iy, iz - 1);
            const auto d = [&](std::size_t plus, std::size_t minus, int comp, double h) {
                return (t.rows[plus][3 + comp] - t.rows[minus][3 + comp]) / (2.0 * h);
            };
            const double h0 = t.spacing[0], h1 = t.spacing[1], h2 = t.spacing[2];
            row[6] = d(xp, xm, 0, h0) + d(yp, ym, 1, h1) + d(zp, zm, 2, h2);      // div
            row[7] = d(yp, ym, 2, h1) - d(zp, zm, 1, h2);                          // curl1
            row[8] = d(zp, zm, 0, h2) - d(xp, xm, 2, h0);                          // curl2
            row[9] = d(xp, xm, 1, h0) - d(yp, ym, 0, h1);                          // curl3
            for (int comp = 0; comp < 3; ++comp) {
                const double center = row[3 + comp];
                row[10 + comp] =
                    (t.rows[xp][3 + comp] - 2.0 * center + t.rows[xm][3 + comp]) / (h0 * h0) +
                    (t.rows[yp][3 + comp] - 2.0 * center + t.rows[ym][3 + comp]) / (h1 * h1) +
                    (t.rows[zp][3 + comp] - 2.0 * center + t.rows[zm][3 + comp]) / (h2 * h2);
            }
        });
    }
    return t;
}

/// Largest finite magnitude in a stencil column family over the table.
/// which: 0 = div, 1 = curl (3 columns), 2 = laplacian (3 columns).
inline double table_stencil_max(const SampleTable& t, int which) {
    double m = 0.0;
    for (const auto& row : t.rows) {
        const int lo = which == 0 ? 6 : (which == 1 ? 7 : 10);
        const int hi = which == 0 ? 7 : (which == 1 ? 10 : 13);
        for (int cidx = lo; cidx < hi; ++cidx)
            if (std::isfinite(row[cidx])) m = std::max(m, std::abs(row[cidx]));
    }
    return m;
}

// Free-standing second-order stencils at an arbitrary point (six or seven
// evaluations per component), for probe-based checks.

inline Element<double> stencil_laplacian(const FieldSampler& F, const Vec3<double>& q, double h) {
    const Element<double> center = F(q);
    Element<double> acc = -6.0 * center;
    for (int axis = 0; axis < 3; ++axis) {
        Vec3<double> qp = q, qm = q;
        qp[axis] += h;
        qm[axis] -= h;
        acc = acc + F(qp) + F(qm);
    }
    return (1.0 / (h * h)) * acc;
}

inline double stencil_divergence(const FieldSampler& F, const Vec3<double>& q, double h) {
    double acc = 0.0;
    for (int axis = 0; axis < 3; ++axis) {
        Vec3<double> qp = q, qm = q;
        qp[axis] += h;
        qm[axis] -= h;
        acc += (F(qp)[axis] - F(qm)[axis]) / (2.0 * h);
    }
    return acc;
}

inline Element<double> stencil_curl(const FieldSampler& F, const Vec3<double>& q, double h) {
    std::array<Element<double>, 3> d;
    for (int axis = 0; axis < 3; ++axis) {
        Vec3<double> qp = q, qm = q;
        qp[axis] += h;
        qm[axis] -= h;
        d[axis] = (1.0 / (2.0 * h)) * (F(qp) - F(qm));
    }
    return {d[1][2] - d[2][1], d[2][0] - d[0][2], d[0][1] - d[1][0]};
}

inline double stencil_scalar_laplacian(const std::function<double(const Vec3<double>&)>& f,
                                       const Vec3<double>& q, double h) {
    double acc = -6.0 * f(q);
    for (int axis = 0; axis < 3; ++axis) {
        Vec3<double> qp = q, qm = q;
        qp[axis] += h;
        qm[axis] -= h;
        acc += f(qp) + f(qm);
    }
    return acc / (h * h);
}

} // namespace triharmonic

#endif // TRIHARMONIC_GRID_HPP
