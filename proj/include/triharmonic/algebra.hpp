#ifndef TRIHARMONIC_ALGEBRA_HPP
#define TRIHARMONIC_ALGEBRA_HPP

#include <array>
#include <string>
#include <utility>

#include "errors.hpp"
#include "scalar.hpp"
#include "vecmat.hpp"

namespace triharmonic {

/// One member of the three-dimensional commutative unital algebra family with
/// identity e1, described by six free structure parameters p1..p6. The three
/// remaining constants p7..p9 are forced by associativity and are always
/// recomputed from p1..p6, never stored.
template <class T>
struct AlgebraParams {
    std::array<T, 6> p{T(0), T(0), T(0), T(0), T(0), T(0)}; // p1..p6

    AlgebraParams() = default;
    explicit AlgebraParams(std::array<T, 6> v) : p(std::move(v)) {}
    AlgebraParams(T p1, T p2, T p3, T p4, T p5, T p6)
        : p{std::move(p1), std::move(p2), std::move(p3), std::move(p4), std::move(p5), std::move(p6)} {}

    const T& p1() const { return p[0]; }
    const T& p2() const { return p[1]; }
    const T& p3() const { return p[2]; }
    const T& p4() const { return p[3]; }
    const T& p5() const { return p[4]; }
    const T& p6() const { return p[5]; }

    T p7() const { return -p1() * p4() + p2() * p3() - p2() * p6() + p4() * p4(); }
    T p8() const { return p2() * p5() - p3() * p4(); }
    T p9() const { return -p1() * p5() + p3() * p3() - p3() * p6() + p4() * p5(); }

    /// All nine constants in order p1..p9.
    std::array<T, 9> constants() const {
        return {p[0], p[1], p[2], p[3], p[4], p[5], p7(), p8(), p9()};
    }

    /// The distinguished cyclic (tricomplex) instance: p = (0,1,0,0,1,0).
    static AlgebraParams cyclic() { return {T(0), T(1), T(0), T(0), T(1), T(0)}; }

    friend bool operator==(const AlgebraParams& x, const AlgebraParams& y) { return x.p == y.p; }
};

template <class To, class From>
AlgebraParams<To> params_cast(const AlgebraParams<From>& P) {
    return AlgebraParams<To>{scalar_cast<To>(P.p[0]), scalar_cast<To>(P.p[1]),
                             scalar_cast<To>(P.p[2]), scalar_cast<To>(P.p[3]),
                             scalar_cast<To>(P.p[4]), scalar_cast<To>(P.p[5])};
}

/// Product from an explicit nine-constant table (x1..x9). Kept separate from
/// AlgebraParams so tests can probe tables that violate the associativity
/// constraints.
template <class T>
Element<T> multiply_with_constants(const Element<T>& a, const Element<T>& b,
                                   const std::array<T, 9>& x) {
    const T& x1 = x[0];
    const T& x2 = x[1];
    const T& x3 = x[2];
    const T& x4 = x[3];
    const T& x5 = x[4];
    const T& x6 = x[5];
    const T& x7 = x[6];
    const T& x8 = x[7];
    const T& x9 = x[8];
    const T cross = a[1] * b[2] + a[2] * b[1];
    return {a[0] * b[0] + x7 * a[1] * b[1] + x8 * cross + x9 * a[2] * b[2],
            a[0] * b[1] + a[1] * b[0] + x1 * a[1] * b[1] + x3 * cross + x5 * a[2] * b[2],
            a[0] * b[2] + a[2] * b[0] + x2 * a[1] * b[1] + x4 * cross + x6 * a[2] * b[2]};
}

/// Bilinear, commutative, associative product of the family; identity is e1.
template <class T>
Element<T> multiply(const Element<T>& a, const Element<T>& b, const AlgebraParams<T>& P) {
    return multiply_with_constants(a, b, P.constants());
}

/// Cyclic product written out: agrees with multiply under p = (0,1,0,0,1,0).
template <class T>
Element<T> cyclic_multiply(const Element<T>& a, const Element<T>& b) {
    return {a[0] * b[0] + a[1] * b[2] + a[2] * b[1],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[2],
            a[0] * b[2] + a[1] * b[1] + a[2] * b[0]};
}

/// u^n under the algebra product (n >= 0); u^0 = e1.
template <class T>
Element<T> power(Element<T> u, unsigned n, const AlgebraParams<T>& P) {
    Element<T> r{T(1), T(0), T(0)};
    while (n > 0) {
        if (n & 1u) r = multiply(r, u, P);
        u = multiply(u, u, P);
        n >>= 1u;
    }
    return r;
}

/// First fundamental representation: matrices of left multiplication by the
/// basis elements. R1 = I; R2, R3 carry the structure constants.
template <class T>
std::array<Mat3<T>, 3> representation(const AlgebraParams<T>& P) {
    Mat3<T> r2{{T(0), P.p7(), P.p8()}, {T(1), P.p1(), P.p3()}, {T(0), P.p2(), P.p4()}};
    Mat3<T> r3{{T(0), P.p8(), P.p9()}, {T(0), P.p3(), P.p5()}, {T(1), P.p4(), P.p6()}};
    return {Mat3<T>::identity(), r2, r3};
}

/// Matrix of multiplication by u: R(u) = u1*R1 + u2*R2 + u3*R3, so that
/// R(u) * (coords of v) = coords of u*v.
template <class T>
Mat3<T> rep_of(const Element<T>& u, const AlgebraParams<T>& P) {
    const auto R = representation(P);
    Mat3<T> m;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            m(i, j) = u[0] * R[0](i, j) + u[1] * R[1](i, j) + u[2] * R[2](i, j);
    return m;
}

/// Structured verdict of a verification pass.
struct ResidualReport {
    std::string identity;  // which identity was checked
    bool exact = true;     // exact arithmetic vs numeric
    double max_abs = 0.0;  // residual magnitude
    bool pass = false;
};

/// Exhaustive (ei*ej)*ek = ei*(ej*ek) over all 27 basis triples for an
/// explicit nine-constant table.
template <class T>
ResidualReport associativity_check(const std::array<T, 9>& x, double tol = 0.0) {
    std::array<Element<T>, 3> basis{Element<T>{T(1), T(0), T(0)}, Element<T>{T(0), T(1), T(0)},
                                    Element<T>{T(0), T(0), T(1)}};
    double worst = 0.0;
    for (const auto& ei : basis)
        for (const auto& ej : basis)
            for (const auto& ek : basis) {
                const Element<T> lhs =
                    multiply_with_constants(multiply_with_constants(ei, ej, x), ek, x);
                const Element<T> rhs =
                    multiply_with_constants(ei, multiply_with_constants(ej, ek, x), x);
                worst = std::max(worst, max_abs(lhs - rhs));
            }
    ResidualReport rep;
    rep.identity = "associativity (27 basis triples)";
    rep.exact = ScalarTraits<T>::exact;
    rep.max_abs = worst;
    rep.pass = ScalarTraits<T>::exact ? worst == 0.0 : worst <= tol;
    return rep;
}

/// Same check for a parameter set (derived p7..p9): passes for every P.
template <class T>
ResidualReport associativity_check(const AlgebraParams<T>& P, double tol = 0.0) {
    return associativity_check(P.constants(), tol);
}

/// Regularity polynomial of the cyclic algebra; zero exactly on the union of
/// the nodal plane and the trisector line.
template <class T>
T nu(const Element<T>& u) {
    const T &x = u[0], &y = u[1], &z = u[2];
    return x * x * x + y * y * y + z * z * z - T(3) * x * y * z;
}

/// Plane factor of nu: x + y + z.
template <class T>
T plane_factor(const Element<T>& u) { return u[0] + u[1] + u[2]; }

/// Trisector factor of nu: x^2+y^2+z^2-xy-yz-zx; vanishes (over the reals)
/// exactly when x = y = z.
template <class T>
T trisector_factor(const Element<T>& u) {
    const T &x = u[0], &y = u[1], &z = u[2];
    return x * x + y * y + z * z - x * y - y * z - z * x;
}

/// Closed-form cyclic inverse (1/nu)[(x^2-yz), (z^2-xy), (y^2-zx)].
template <class T>
Element<T> invert(const Element<T>& u, double tol = 1e-12) {
    const T n = nu(u);
    if (ScalarTraits<T>::is_zero(n, tol)) {
        const bool on_plane = ScalarTraits<T>::is_zero(plane_factor(u), tol);
        const bool on_trisector = ScalarTraits<T>::is_zero(trisector_factor(u), tol);
        using F = SingularElement::Factor;
        const F f = on_plane && on_trisector ? F::Both : (on_plane ? F::Plane : F::Trisector);
        throw SingularElement(f, on_plane && on_trisector
                                     ? "singular element: zero element"
                                     : (on_plane ? "singular element: nodal-plane factor x+y+z vanishes"
                                                 : "singular element: trisector factor vanishes (x=y=z)"));
    }
    const T &x = u[0], &y = u[1], &z = u[2];
    return {(x * x - y * z) / n, (z * z - x * y) / n, (y * y - z * x) / n};
}

/// Inverse through the representation: coordinates of R(u)^{-1} e1. One code
/// path for every family member; agrees with the cyclic closed form.
template <class T>
Element<T> invert_general(const Element<T>& u, const AlgebraParams<T>& P, double tol = 1e-12) {
    const Mat3<T> m = rep_of(u, P);
    const T d = det(m);
    if (ScalarTraits<T>::is_zero(d, tol))
        throw SingularElement(SingularElement::Factor::General,
                              "singular element: det R(u) = 0");
    return solve3(m, Element<T>{T(1), T(0), T(0)});
}

enum class Membership { Pi, Trisector, Neither, Zero };

inline const char* to_string(Membership m) {
    switch (m) {
        case Membership::Pi: return "Pi";
        case Membership::Trisector: return "Trisector";
        case Membership::Neither: return "Neither";
        case Membership::Zero: return "Zero";
    }
    return "?";
}

/// Classify u against the nodal plane (x+y+z=0) and trisector line (x=y=z).
/// Exact equality on exact scalars; tolerance (default 1e-12) on floats.
template <class T>
Membership membership(const Element<T>& u, double tol = 1e-12) {
    if (is_zero_vec(u, tol)) return Membership::Zero;
    if (ScalarTraits<T>::is_zero(plane_factor(u), tol)) return Membership::Pi;
    if (ScalarTraits<T>::is_zero(u[0] - u[1], tol) && ScalarTraits<T>::is_zero(u[1] - u[2], tol))
        return Membership::Trisector;
    return Membership::Neither;
}

/// The unique omega in Pi with omega * uprime = mu (cyclic product), for
/// mu, uprime in Pi, uprime != 0. Solves the reduced rank-3 linear system:
/// the first two product rows plus the plane-membership row (the dropped row
/// is linearly dependent on these for plane inputs).
template <class T>
Element<T> pi_divide(const Element<T>& mu, const Element<T>& uprime, double tol = 1e-12) {
    if (is_zero_vec(uprime, tol) || !ScalarTraits<T>::is_zero(plane_factor(uprime), tol))
        throw DegenerateDivisor("pi_divide: divisor must be a nonzero nodal-plane element");
    if (!ScalarTraits<T>::is_zero(plane_factor(mu), tol))
        throw NotInPlane("pi_divide: dividend must lie on the nodal plane");
    const T &a = uprime[0], &b = uprime[1], &c = uprime[2];
    // omega * uprime = mu componentwise gives rows (a c b | mu1), (b a c | mu2),
    // (c b a | mu3); the third is dependent, replaced by omega1+omega2+omega3=0.
    const Mat3<T> m{{a, c, b}, {b, a, c}, {T(1), T(1), T(1)}};
    return solve3(m, Element<T>{mu[0], mu[1], T(0)});
}

/// Linear map u -> (u3-u2, u3-u1, u2-u1); kernel is the trisector line, image
/// is the plane orthogonal to (1,-1,1).
template <class T>
Element<T> v_map(const Element<T>& u) {
    return {u[2] - u[1], u[2] - u[0], u[1] - u[0]};
}

// Distinguished directions of the cyclic geometry. v1 spans the trisector,
// {v2, v3} is an orthogonal basis of the nodal plane with |v2| = |v3| =
// sqrt(2/3); w2 = V(v2), w3 = V(v3) span V(Pi) with |w2| = |w3| = sqrt(2).

template <class T>
Element<T> basis_v1() {
    const T third = ScalarTraits<T>::from_ratio(1, 3);
    return {third, third, third};
}

template <class T>
Element<T> basis_v2() {
    return {ScalarTraits<T>::from_ratio(2, 3), ScalarTraits<T>::from_ratio(-1, 3),
            ScalarTraits<T>::from_ratio(-1, 3)};
}

template <class T>
Element<T> basis_v3() {
    static_assert(ScalarTraits<T>::has_sqrt3, "v3 needs sqrt(3) in the scalar type");
    const T inv = T(1) / ScalarTraits<T>::sqrt3();
    return {T(0), inv, -inv};
}

template <class T>
Element<T> basis_w2() {
    return {T(0), T(-1), T(-1)}; // V(v2) = -(e2+e3)
}

template <class T>
Element<T> basis_w3() {
    static_assert(ScalarTraits<T>::has_sqrt3, "w3 needs sqrt(3) in the scalar type");
    const T inv = T(1) / ScalarTraits<T>::sqrt3();
    return {T(-2) * inv, -inv, inv}; // V(v3)
}

/// Unit trisector direction (1,1,1)/sqrt(3).
template <class T>
Element<T> normal_n() {
    static_assert(ScalarTraits<T>::has_sqrt3, "normal needs sqrt(3) in the scalar type");
    const T inv = T(1) / ScalarTraits<T>::sqrt3();
    return {inv, inv, inv};
}

/// Coordinates of u in the {v2, v3} basis of the nodal plane. The cyclic
/// product on the plane corresponds to complex multiplication under
/// a*v2 + b*v3 <-> a + b*i (v2 acts as the identity, v3^2 = -v2).
template <class T>
std::pair<T, T> pi_complex_iso(const Element<T>& u, double tol = 1e-12) {
    static_assert(ScalarTraits<T>::has_sqrt3, "iso needs sqrt(3) in the scalar type");
    if (!ScalarTraits<T>::is_zero(plane_factor(u), tol))
        throw NotInPlane("pi_complex_iso: element must lie on the nodal plane");
    const T a = ScalarTraits<T>::from_ratio(3, 2) * u[0];
    const T b = ScalarTraits<T>::sqrt3() * (u[1] + ScalarTraits<T>::from_ratio(1, 2) * u[0]);
    return {a, b};
}

template <class T>
Element<T> pi_complex_iso_inverse(const T& a, const T& b) {
    return a * basis_v2<T>() + b * basis_v3<T>();
}

} // namespace triharmonic

#endif // TRIHARMONIC_ALGEBRA_HPP
