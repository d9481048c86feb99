#ifndef TRIHARMONIC_CR_HPP
#define TRIHARMONIC_CR_HPP

#include <array>
#include <functional>
#include <vector>

#include "affine.hpp"
#include "algebra.hpp"
#include "parallel.hpp"
#include "tripoly.hpp"
#include "vecmat.hpp"

namespace triharmonic {

using FieldSampler = std::function<Element<double>(const Vec3<double>&)>;

/// Residuals of the nine first-order compatibility rows plus the four reduced
/// rows. For the exact polynomial path a row's residual is the largest
/// coefficient magnitude of its residual polynomial (zero iff the row is the
/// zero polynomial); for the sampled path it is the largest magnitude over
/// the probe set.
struct CrReport {
    std::array<double, 9> rows9{};
    std::array<double, 4> rows4{};
    double max_abs = 0.0;
    bool exact = true;
    bool pass = false;
    // On every probe (or exactly, on polynomials): if the four reduced rows
    // vanish then all nine rows vanish.
    bool rank_consistent = true;
};

namespace detail {

template <class T>
double poly_max_abs_coeff(const TriPoly<T>& p) {
    double m = 0.0;
    for (const auto& [k, c] : p.terms) m = std::max(m, std::abs(to_double(c)));
    return m;
}

/// The four reduced rows as combinations of first partials; fa = dF/dx etc.
template <class V>
std::array<V, 4> reduced_rows(const std::array<V, 3>& fx, const std::array<V, 3>& fy,
                              const std::array<V, 3>& fz) {
    return {fx[0] - fy[0] - fx[1] + fy[2],
            -fx[0] + fy[1] + fx[2] - fy[2],
            -fz[0] - fx[1] + fx[2] + fz[2],
            fx[0] + fz[0] - fz[1] - fx[2]};
}

} // namespace detail

/// Exact compatibility check for polynomial fields: the nine rows are the
/// components of phi_x * F_y - phi_y * F_x, phi_x * F_z - phi_z * F_x and
/// phi_y * F_z - phi_z * F_y (algebra products), the four reduced rows are
/// fixed linear combinations of component partials. All thirteen must be
/// zero polynomials for a differentiable field.
template <class T>
CrReport cr_residual(const PolyField<T>& F, const AlgebraParams<T>& P, const AffineMap<T>& phi,
                     double tol = 0.0) {
    const PolyField<T> fx = partial(F, 0), fy = partial(F, 1), fz = partial(F, 2);
    const auto c = phi_partials(phi);
    const PolyField<T> ca = constant_field(c[0]), cb = constant_field(c[1]),
                       cc = constant_field(c[2]);
    const PolyField<T> block[3] = {
        field_multiply(ca, fy, P) - field_multiply(cb, fx, P),
        field_multiply(ca, fz, P) - field_multiply(cc, fx, P),
        field_multiply(cb, fz, P) - field_multiply(cc, fy, P)};

    CrReport rep;
    rep.exact = ScalarTraits<T>::exact;
    for (int b = 0; b < 3; ++b)
        for (int m = 0; m < 3; ++m)
            rep.rows9[3 * b + m] = detail::poly_max_abs_coeff(block[b][m]);

    const std::array<TriPoly<T>, 3> px{fx.f1, fx.f2, fx.f3}, py{fy.f1, fy.f2, fy.f3},
        pz{fz.f1, fz.f2, fz.f3};
    const auto red = detail::reduced_rows(px, py, pz);
    for (int i = 0; i < 4; ++i) rep.rows4[i] = detail::poly_max_abs_coeff(red[i]);

    for (double v : rep.rows9) rep.max_abs = std::max(rep.max_abs, v);
    for (double v : rep.rows4) rep.max_abs = std::max(rep.max_abs, v);
    rep.pass = rep.max_abs <= tol;

    bool four_vanish = true;
    for (double v : rep.rows4) four_vanish = four_vanish && v == 0.0;
    if (four_vanish)
        for (double v : rep.rows9) rep.rank_consistent = rep.rank_consistent && v == 0.0;
    return rep;
}

/// Sampled compatibility check: central differences (step h) for the first
/// partials at each probe; per-row maxima are merged over probes.
inline CrReport cr_residual(const FieldSampler& F, const AlgebraParams<double>& P,
                            const AffineMap<double>& phi, const std::vector<Vec3<double>>& probes,
                            double h = 1e-4, double tol = 1e-6) {
    const auto c = phi_partials(phi);
    CrReport rep;
    rep.exact = false;

    std::vector<CrReport> partials_by_probe(probes.size());
    std::vector<char> consistent(probes.size(), 1);
    parallel_for(probes.size(), [&](std::size_t idx) {
        const Vec3<double>& q = probes[idx];
        std::array<Element<double>, 3> d;
        for (int axis = 0; axis < 3; ++axis) {
            Vec3<double> qp = q, qm = q;
            qp[axis] += h;
            qm[axis] -= h;
            d[axis] = (1.0 / (2.0 * h)) * (F(qp) - F(qm));
        }
        const Element<double> block[3] = {
            multiply(c[0], d[1], P) - multiply(c[1], d[0], P),
            multiply(c[0], d[2], P) - multiply(c[2], d[0], P),
            multiply(c[1], d[2], P) - multiply(c[2], d[1], P)};
        CrReport& r = partials_by_probe[idx];
        for (int b = 0; b < 3; ++b)
            for (int m = 0; m < 3; ++m) r.rows9[3 * b + m] = std::abs(block[b][m]);
        const std::array<double, 3> px{d[0][0], d[0][1], d[0][2]}, py{d[1][0], d[1][1], d[1][2]},
            pz{d[2][0], d[2][1], d[2][2]};
        const auto red = detail::reduced_rows(px, py, pz);
        double max4 = 0.0, max9 = 0.0;
        for (int i = 0; i < 4; ++i) {
            r.rows4[i] = std::abs(red[i]);
            max4 = std::max(max4, r.rows4[i]);
        }
        for (double v : r.rows9) max9 = std::max(max9, v);
        if (max4 <= tol && max9 > 10.0 * tol) consistent[idx] = 0;
    });

    for (std::size_t idx = 0; idx < probes.size(); ++idx) {
        for (int i = 0; i < 9; ++i) rep.rows9[i] = std::max(rep.rows9[i], partials_by_probe[idx].rows9[i]);
        for (int i = 0; i < 4; ++i) rep.rows4[i] = std::max(rep.rows4[i], partials_by_probe[idx].rows4[i]);
        rep.rank_consistent = rep.rank_consistent && consistent[idx];
    }
    for (double v : rep.rows9) rep.max_abs = std::max(rep.max_abs, v);
    for (double v : rep.rows4) rep.max_abs = std::max(rep.max_abs, v);
    rep.pass = rep.max_abs <= tol;
    return rep;
}

/// The thirteen compatibility rows as exact linear functionals of the stacked
/// partial vector (F_x, F_y, F_z) in R^9; used to certify the rank-4 claim.
template <class T>
std::array<std::array<T, 9>, 13> cr_coefficient_rows(const AlgebraParams<T>& P,
                                                     const AffineMap<T>& phi) {
    const auto c = phi_partials(phi);
    const Mat3<T> Ra = rep_of(c[0], P), Rb = rep_of(c[1], P), Rc = rep_of(c[2], P);
    std::array<std::array<T, 9>, 13> rows;
    for (auto& r : rows) r.fill(T(0));
    for (std::size_t m = 0; m < 3; ++m)
        for (std::size_t i = 0; i < 3; ++i) {
            rows[m][i] = -Rb(m, i);          // block 1: -R(b) F_x + R(a) F_y
            rows[m][3 + i] = Ra(m, i);
            rows[3 + m][i] = -Rc(m, i);      // block 2: -R(c) F_x + R(a) F_z
            rows[3 + m][6 + i] = Ra(m, i);
            rows[6 + m][3 + i] = -Rc(m, i);  // block 3: -R(c) F_y + R(b) F_z
            rows[6 + m][6 + i] = Rb(m, i);
        }
    const std::array<std::array<int, 9>, 4> reduced{{{1, -1, 0, -1, 0, 1, 0, 0, 0},
                                                     {-1, 0, 1, 0, 1, -1, 0, 0, 0},
                                                     {0, -1, 1, 0, 0, 0, -1, 0, 1},
                                                     {1, 0, -1, 0, 0, 0, 1, -1, 0}}};
    for (int r = 0; r < 4; ++r)
        for (int j = 0; j < 9; ++j) rows[9 + r][j] = T(reduced[r][j]);
    return rows;
}

/// Exact rank of a list of rows by Gaussian elimination (fraction-free pivot
/// choice unnecessary over a field).
template <class T, std::size_t N>
int exact_rank(std::vector<std::array<T, N>> rows) {
    int rank = 0;
    std::size_t col = 0;
    for (; col < N && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (!ScalarTraits<T>::is_zero(rows[r][col])) {
                pivot = r;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const T inv = T(1) / rows[rank][col];
        for (std::size_t j = col; j < N; ++j) rows[rank][j] = rows[rank][j] * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank)) continue;
            if (ScalarTraits<T>::is_zero(rows[r][col])) continue;
            const T f = rows[r][col];
            for (std::size_t j = col; j < N; ++j) rows[r][j] = rows[r][j] - f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace triharmonic

#endif // TRIHARMONIC_CR_HPP
