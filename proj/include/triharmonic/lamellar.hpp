#ifndef TRIHARMONIC_LAMELLAR_HPP
#define TRIHARMONIC_LAMELLAR_HPP

#include <array>
#include <functional>
#include <vector>

#include "algebra.hpp"
#include "cr.hpp"
#include "parallel.hpp"
#include "scalar.hpp"
#include "tripoly.hpp"
#include "vecmat.hpp"

namespace triharmonic {

/// V-image of a polynomial field: V = (F3-F2, F3-F1, F2-F1) componentwise.
template <class T>
PolyField<T> lamellarize(const PolyField<T>& F) {
    return {F.f3 - F.f2, F.f3 - F.f1, F.f2 - F.f1};
}

/// w . F as a polynomial; the zero polynomial iff H(q) = w . q is a linear
/// first integral of qdot = F(q).
template <class T>
TriPoly<T> first_integral_check(const PolyField<T>& F, const Vec3<T>& w) {
    return w[0] * F.f1 + w[1] * F.f2 + w[2] * F.f3;
}

// Plane-adapted coordinates (zeta, xi, eta): q = zeta*v1 + xi*v2 + eta*v3,
// i.e. x = (zeta+2xi)/3, y = (zeta-xi+sqrt3*eta)/3, z = (zeta-xi-sqrt3*eta)/3.

template <class T>
Vec3<T> to_plane_coords(const Vec3<T>& q) {
    static_assert(ScalarTraits<T>::has_sqrt3, "plane coordinates need sqrt(3)");
    const T s3 = ScalarTraits<T>::sqrt3();
    const T half = ScalarTraits<T>::from_ratio(1, 2);
    return {q[0] + q[1] + q[2], q[0] - half * q[1] - half * q[2], half * s3 * (q[1] - q[2])};
}

template <class T>
Vec3<T> from_plane_coords(const Vec3<T>& s) {
    static_assert(ScalarTraits<T>::has_sqrt3, "plane coordinates need sqrt(3)");
    const T s3 = ScalarTraits<T>::sqrt3();
    const T third = ScalarTraits<T>::from_ratio(1, 3);
    return {third * (s[0] + T(2) * s[1]), third * (s[0] - s[1] + s3 * s[2]),
            third * (s[0] - s[1] - s3 * s[2])};
}

/// Scalar pair (u, v) expressed in plane coordinates (zeta, xi, eta),
/// encoding the plane-parallel field u*v2 + v*v3 (or its lamellar companion
/// u*w2 + v*w3). Samplers are mandatory; exact polynomials optional.
struct UvField {
    std::function<double(const Vec3<double>&)> u, v; // arguments are (zeta, xi, eta)
    bool has_exact = false;
    TriPoly<Sqrt3Ext> u_poly, v_poly; // variables read as (zeta, xi, eta)
};

/// Pointwise sampler of the encoded field in (x,y,z) coordinates.
/// lamellar = false: F = u*v2 + v*v3 (plane-parallel form);
/// lamellar = true:  V = u*w2 + v*w3 (the V-image directions).
inline FieldSampler uv_to_field(const UvField& U, bool lamellar = false) {
    return [U, lamellar](const Vec3<double>& q) {
        const Vec3<double> s = to_plane_coords(q);
        const double uu = U.u(s), vv = U.v(s);
        const Vec3<double> a = lamellar ? basis_w2<double>() : basis_v2<double>();
        const Vec3<double> b = lamellar ? basis_w3<double>() : basis_v3<double>();
        return uu * a + vv * b;
    };
}

/// Exact polynomial form of the encoded field (requires exact u, v).
inline PolyField<Sqrt3Ext> uv_to_field_exact(const UvField& U, bool lamellar = false) {
    if (!U.has_exact) throw BadInput("uv_to_field_exact: no exact polynomials attached");
    using P3 = TriPoly<Sqrt3Ext>;
    const Sqrt3Ext half = ScalarTraits<Sqrt3Ext>::from_ratio(1, 2);
    const Sqrt3Ext s3 = Sqrt3Ext::sqrt3();
    const P3 x = P3::variable(0), y = P3::variable(1), z = P3::variable(2);
    const std::array<P3, 3> plane_vars{x + y + z, x - half * y - half * z,
                                       half * s3 * (y - z)};
    const P3 u_xyz = substitute(U.u_poly, plane_vars);
    const P3 v_xyz = substitute(U.v_poly, plane_vars);
    const Vec3<Sqrt3Ext> a = lamellar ? basis_w2<Sqrt3Ext>() : basis_v2<Sqrt3Ext>();
    const Vec3<Sqrt3Ext> b = lamellar ? basis_w3<Sqrt3Ext>() : basis_v3<Sqrt3Ext>();
    PolyField<Sqrt3Ext> F;
    for (std::size_t i = 0; i < 3; ++i) F[i] = a[i] * u_xyz + b[i] * v_xyz;
    return F;
}

/// Residuals of the compatibility systems for a (u, v) pair, reported per
/// block: four rows in plane-coordinate partials, four rows in (x,y,z)
/// partials, and the two directional-derivative rows (with the default 1/3
/// constant in the second).
struct UvCrReport {
    std::array<double, 4> cr_uv{};
    std::array<double, 4> xyz_rows{};
    std::array<double, 2> cr2d{};
    double max_abs = 0.0; // over cr_uv and xyz_rows rows
    bool exact = false;
    bool pass_cr_uv = false;
    bool pass_xyz_rows = false;
    bool pass_cr2d = false;
};

namespace detail {

/// All ten rows from the six partials (du, dv in (zeta, xi, eta) order).
/// Generic over the value type V (numbers or polynomials) with scalars S.
template <class S, class V>
struct UvRows {
    std::array<V, 4> cr_uv;
    std::array<V, 4> xyz_rows;
    std::array<V, 2> cr2d;
};

template <class S, class V>
UvRows<S, V> uv_rows(const std::array<V, 3>& du, const std::array<V, 3>& dv) {
    const S s3 = ScalarTraits<S>::sqrt3();
    const S half = ScalarTraits<S>::from_ratio(1, 2);
    const S third = ScalarTraits<S>::from_ratio(1, 3);
    const S s3_half = half * s3;            // sqrt3/2
    const S inv_s3 = third * s3;            // 1/sqrt3
    const S two_inv_s3 = S(2) * inv_s3;     // 2/sqrt3
    const S inv_2s3 = half * inv_s3;        // 1/(2 sqrt3)
    const S three_half = S(3) * half;       // 3/2
    const S two_third = S(2) * third;       // 2/3

    UvRows<S, V> r;
    // Plane-coordinate rows.
    r.cr_uv[0] = S(2) * du[0] - half * du[1] - s3_half * du[2] + s3_half * dv[1] - half * dv[2];
    r.cr_uv[1] =
        -(S(1)) * du[0] + half * du[1] + s3_half * du[2] - s3 * dv[0] - s3_half * dv[1] - half * dv[2];
    r.cr_uv[2] = -(S(1)) * du[0] - S(1) * du[1] + half * dv[0] - s3_half * dv[1] + S(1) * dv[2];
    r.cr_uv[3] = three_half * du[1] - s3_half * du[2] - two_third * dv[0] - inv_2s3 * dv[1] -
                 half * dv[2];

    // Cartesian partials via the chain rule.
    const V ux = du[0] + du[1];
    const V uy = du[0] - half * du[1] + s3_half * du[2];
    const V uz = du[0] - half * du[1] - s3_half * du[2];
    const V vx = dv[0] + dv[1];
    const V vy = dv[0] - half * dv[1] + s3_half * dv[2];
    const V vz = dv[0] - half * dv[1] - s3_half * dv[2];
    r.xyz_rows[0] = uy + uz - two_inv_s3 * vx - inv_s3 * vy + inv_s3 * vz;
    r.xyz_rows[1] = uy - uz + inv_s3 * vy + inv_s3 * vz;
    r.xyz_rows[2] = ux + inv_s3 * vx + two_inv_s3 * vz;
    r.xyz_rows[3] = ux - inv_s3 * vx + two_inv_s3 * vy;

    // Directional rows: D2 = -2 d_zeta + d_xi, D3 = -(2/sqrt3)(d_zeta + d_xi) - d_eta.
    const auto d2 = [&](const std::array<V, 3>& d) { return -(S(2)) * d[0] + S(1) * d[1]; };
    const auto d3 = [&](const std::array<V, 3>& d) {
        return -(two_inv_s3)*d[0] - two_inv_s3 * d[1] - S(1) * d[2];
    };
    r.cr2d[0] = d2(du) + d3(dv);
    r.cr2d[1] = d3(du) - third * d2(dv);
    return r;
}

} // namespace detail

/// Sampled residual check (central differences, step h, in plane coordinates).
inline UvCrReport uv_cr_residual(const UvField& U, const std::vector<Vec3<double>>& probes,
                                 double h = 1e-4, double tol = 1e-6) {
    UvCrReport rep;
    rep.exact = false;
    std::vector<UvCrReport> per(probes.size());
    parallel_for(probes.size(), [&](std::size_t idx) {
        const Vec3<double>& s = probes[idx];
        std::array<double, 3> du, dv;
        for (int axis = 0; axis < 3; ++axis) {
            Vec3<double> sp = s, sm = s;
            sp[axis] += h;
            sm[axis] -= h;
            du[axis] = (U.u(sp) - U.u(sm)) / (2.0 * h);
            dv[axis] = (U.v(sp) - U.v(sm)) / (2.0 * h);
        }
        const auto rows = detail::uv_rows<double, double>(du, dv);
        for (int i = 0; i < 4; ++i) per[idx].cr_uv[i] = std::abs(rows.cr_uv[i]);
        for (int i = 0; i < 4; ++i) per[idx].xyz_rows[i] = std::abs(rows.xyz_rows[i]);
        for (int i = 0; i < 2; ++i) per[idx].cr2d[i] = std::abs(rows.cr2d[i]);
    });
    for (const auto& p : per) {
        for (int i = 0; i < 4; ++i) rep.cr_uv[i] = std::max(rep.cr_uv[i], p.cr_uv[i]);
        for (int i = 0; i < 4; ++i) rep.xyz_rows[i] = std::max(rep.xyz_rows[i], p.xyz_rows[i]);
        for (int i = 0; i < 2; ++i) rep.cr2d[i] = std::max(rep.cr2d[i], p.cr2d[i]);
    }
    double m_uv = 0.0, m_dg = 0.0, m_2d = 0.0;
    for (double v : rep.cr_uv) m_uv = std::max(m_uv, v);
    for (double v : rep.xyz_rows) m_dg = std::max(m_dg, v);
    for (double v : rep.cr2d) m_2d = std::max(m_2d, v);
    rep.max_abs = std::max(m_uv, m_dg);
    rep.pass_cr_uv = m_uv <= tol;
    rep.pass_xyz_rows = m_dg <= tol;
    rep.pass_cr2d = m_2d <= tol;
    return rep;
}

/// Exact residual check on attached polynomials; a row's residual is its
/// largest coefficient magnitude (zero iff the row is the zero polynomial).
inline UvCrReport uv_cr_residual_exact(const UvField& U, double tol = 0.0) {
    if (!U.has_exact) throw BadInput("uv_cr_residual_exact: no exact polynomials attached");
    using P3 = TriPoly<Sqrt3Ext>;
    std::array<P3, 3> du, dv;
    for (int axis = 0; axis < 3; ++axis) {
        du[axis] = U.u_poly.partial(axis);
        dv[axis] = U.v_poly.partial(axis);
    }
    const auto rows = detail::uv_rows<Sqrt3Ext, P3>(du, dv);
    UvCrReport rep;
    rep.exact = true;
    for (int i = 0; i < 4; ++i) rep.cr_uv[i] = detail::poly_max_abs_coeff(rows.cr_uv[i]);
    for (int i = 0; i < 4; ++i) rep.xyz_rows[i] = detail::poly_max_abs_coeff(rows.xyz_rows[i]);
    for (int i = 0; i < 2; ++i) rep.cr2d[i] = detail::poly_max_abs_coeff(rows.cr2d[i]);
    double m_uv = 0.0, m_dg = 0.0, m_2d = 0.0;
    for (double v : rep.cr_uv) m_uv = std::max(m_uv, v);
    for (double v : rep.xyz_rows) m_dg = std::max(m_dg, v);
    for (double v : rep.cr2d) m_2d = std::max(m_2d, v);
    rep.max_abs = std::max(m_uv, m_dg);
    rep.pass_cr_uv = m_uv <= tol;
    rep.pass_xyz_rows = m_dg <= tol;
    rep.pass_cr2d = m_2d <= tol;
    return rep;
}

/// Scalar sampler u(x,y,z) (or v) from a plane-coordinate scalar function.
inline std::function<double(const Vec3<double>&)> plane_scalar_sampler(
    const std::function<double(const Vec3<double>&)>& f) {
    return [f](const Vec3<double>& q) { return f(to_plane_coords(q)); };
}

} // namespace triharmonic

#endif // TRIHARMONIC_LAMELLAR_HPP
