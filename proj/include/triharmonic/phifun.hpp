#ifndef TRIHARMONIC_PHIFUN_HPP
#define TRIHARMONIC_PHIFUN_HPP

#include <array>
#include <functional>
#include <vector>

#include "affine.hpp"
#include "algebra.hpp"
#include "errors.hpp"
#include "matfun.hpp"
#include "tripoly.hpp"
#include "vecmat.hpp"

namespace triharmonic {

enum class FunKind { Polynomial, Rational, Exp, Sin, Cos, Sinh, Cosh };

inline const char* to_string(FunKind k) {
    switch (k) {
        case FunKind::Polynomial: return "poly";
        case FunKind::Rational: return "rational";
        case FunKind::Exp: return "exp";
        case FunKind::Sin: return "sin";
        case FunKind::Cos: return "cos";
        case FunKind::Sinh: return "sinh";
        case FunKind::Cosh: return "cosh";
    }
    return "?";
}

/// A function built on the pre-twist: polynomial c0 + c1*phi(q) + ... with
/// powers in the algebra, a quotient of two such polynomials, or a
/// transcendental kind f applied through the representation and scaled by a
/// coefficient element. Carries its own algebra/pre-twist context.
template <class T>
struct PhiFunction {
    FunKind kind = FunKind::Polynomial;
    std::vector<Element<T>> coeffs;                   // Polynomial: c0..cm
    std::vector<Element<T>> num_coeffs, den_coeffs;   // Rational kind
    Element<T> tcoeff{T(1), T(0), T(0)};              // transcendental coefficient
    AlgebraParams<T> P = AlgebraParams<T>::cyclic();
    AffineMap<T> phi = AffineMap<T>::reference();
    // Transcendental kinds pick up sign flips under differentiation
    // (d/dphi cos = -sin); the scale multiplies tcoeff at evaluation.
    T tscale = T(1);

    static PhiFunction polynomial(std::vector<Element<T>> c,
                                  AlgebraParams<T> params = AlgebraParams<T>::cyclic(),
                                  AffineMap<T> map = AffineMap<T>::reference()) {
        PhiFunction f;
        f.kind = FunKind::Polynomial;
        f.coeffs = std::move(c);
        f.P = std::move(params);
        f.phi = std::move(map);
        return f;
    }

    static PhiFunction rational(std::vector<Element<T>> num, std::vector<Element<T>> den,
                                AlgebraParams<T> params = AlgebraParams<T>::cyclic(),
                                AffineMap<T> map = AffineMap<T>::reference()) {
        PhiFunction f;
        f.kind = FunKind::Rational;
        f.num_coeffs = std::move(num);
        f.den_coeffs = std::move(den);
        f.P = std::move(params);
        f.phi = std::move(map);
        return f;
    }

    static PhiFunction transcendental(FunKind k, Element<T> c,
                                      AlgebraParams<T> params = AlgebraParams<T>::cyclic(),
                                      AffineMap<T> map = AffineMap<T>::reference()) {
        PhiFunction f;
        f.kind = k;
        f.tcoeff = std::move(c);
        f.P = std::move(params);
        f.phi = std::move(map);
        return f;
    }
};

namespace detail {

/// Horner evaluation of c0 + c1*u + ... + cm*u^m with algebra powers.
template <class T>
Element<T> horner(const std::vector<Element<T>>& coeffs, const Element<T>& u,
                  const AlgebraParams<T>& P) {
    Element<T> acc{T(0), T(0), T(0)};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = multiply(acc, u, P) + *it;
    return acc;
}

/// Formal derivative of a coefficient list: c_k -> (k+1) c_{k+1}.
template <class T>
std::vector<Element<T>> derive_coeffs(const std::vector<Element<T>>& coeffs) {
    std::vector<Element<T>> out;
    for (std::size_t k = 1; k < coeffs.size(); ++k) out.push_back(T(static_cast<int>(k)) * coeffs[k]);
    return out;
}

/// Cauchy product of coefficient lists under the algebra product.
template <class T>
std::vector<Element<T>> convolve_coeffs(const std::vector<Element<T>>& a,
                                        const std::vector<Element<T>>& b,
                                        const AlgebraParams<T>& P) {
    if (a.empty() || b.empty()) return {};
    std::vector<Element<T>> out(a.size() + b.size() - 1, Element<T>{T(0), T(0), T(0)});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + multiply(a[i], b[j], P);
    return out;
}

template <class T>
std::vector<Element<T>> negate_coeffs(std::vector<Element<T>> a) {
    for (auto& c : a) c = -c;
    return a;
}

inline Mat3<double> transcendental_matrix(FunKind k, const Mat3<double>& m) {
    switch (k) {
        case FunKind::Exp: return mat_exp(m);
        case FunKind::Sin: return mat_sin(m);
        case FunKind::Cos: return mat_cos(m);
        case FunKind::Sinh: return mat_sinh(m);
        case FunKind::Cosh: return mat_cosh(m);
        default: throw BadInput("not a transcendental kind");
    }
}

} // namespace detail

/// Formal derivative with respect to the pre-twisted variable. Polynomials
/// shift coefficients, quotients follow the quotient rule, exp reproduces
/// itself and the circular/hyperbolic kinds swap with the expected signs.
template <class T>
PhiFunction<T> phi_derivative(const PhiFunction<T>& F) {
    PhiFunction<T> d = F;
    switch (F.kind) {
        case FunKind::Polynomial:
            d.coeffs = detail::derive_coeffs(F.coeffs);
            break;
        case FunKind::Rational: {
            const auto dn = detail::derive_coeffs(F.num_coeffs);
            const auto dd = detail::derive_coeffs(F.den_coeffs);
            auto lhs = detail::convolve_coeffs(dn, F.den_coeffs, F.P);
            const auto rhs = detail::convolve_coeffs(F.num_coeffs, dd, F.P);
            const std::size_t n = std::max(lhs.size(), rhs.size());
            lhs.resize(n, Element<T>{T(0), T(0), T(0)});
            for (std::size_t i = 0; i < rhs.size(); ++i) lhs[i] = lhs[i] - rhs[i];
            d.num_coeffs = std::move(lhs);
            d.den_coeffs = detail::convolve_coeffs(F.den_coeffs, F.den_coeffs, F.P);
            break;
        }
        case FunKind::Exp:
            break;
        case FunKind::Sin:
            d.kind = FunKind::Cos;
            break;
        case FunKind::Cos:
            d.kind = FunKind::Sin;
            d.tscale = -F.tscale;
            break;
        case FunKind::Sinh:
            d.kind = FunKind::Cosh;
            break;
        case FunKind::Cosh:
            d.kind = FunKind::Sinh;
            break;
    }
    return d;
}

/// Evaluate at a point of R^3. Powers are algebra powers of u = phi(q);
/// quotients multiply by the algebra inverse of the denominator value;
/// transcendental kinds evaluate the 3x3 matrix function of R(u) applied to
/// the coefficient element (floating-point scalars only).
template <class T>
Element<T> eval(const PhiFunction<T>& F, const Vec3<T>& q) {
    const Element<T> u = F.phi(q);
    switch (F.kind) {
        case FunKind::Polynomial:
            return detail::horner(F.coeffs, u, F.P);
        case FunKind::Rational: {
            const Element<T> num = detail::horner(F.num_coeffs, u, F.P);
            const Element<T> den = detail::horner(F.den_coeffs, u, F.P);
            try {
                return multiply(num, invert_general(den, F.P), F.P);
            } catch (const SingularElement&) {
                throw SingularDenominator("rational function: denominator singular at the point");
            }
        }
        default: {
            if constexpr (ScalarTraits<T>::exact) {
                throw BadInput("transcendental evaluation requires floating-point scalars");
            } else {
                const Mat3<T> f = detail::transcendental_matrix(F.kind, rep_of(u, F.P));
                return F.tscale * (f * F.tcoeff);
            }
        }
    }
}

/// First partials (F_x, F_y, F_z) = F'_phi(q) * (phi_x, phi_y, phi_z).
template <class T>
std::array<Element<T>, 3> partials(const PhiFunction<T>& F, const Vec3<T>& q) {
    const Element<T> d = eval(phi_derivative(F), q);
    const auto c = phi_partials(F.phi);
    return {multiply(d, c[0], F.P), multiply(d, c[1], F.P), multiply(d, c[2], F.P)};
}

/// Second partials in the order xx, yy, zz, xy, xz, yz:
/// F_ab = F''_phi(q) * phi_a * phi_b.
template <class T>
std::array<Element<T>, 6> second_partials(const PhiFunction<T>& F, const Vec3<T>& q) {
    const Element<T> d2 = eval(phi_derivative(phi_derivative(F)), q);
    const auto c = phi_partials(F.phi);
    const auto prod = [&](const Element<T>& a, const Element<T>& b) {
        return multiply(d2, multiply(a, b, F.P), F.P);
    };
    return {prod(c[0], c[0]), prod(c[1], c[1]), prod(c[2], c[2]),
            prod(c[0], c[1]), prod(c[0], c[2]), prod(c[1], c[2])};
}

/// Exact expansion of a polynomial-kind function into explicit polynomial
/// components (Horner over the polynomial ring).
template <class T>
PolyField<T> expand(const PhiFunction<T>& F) {
    if (F.kind != FunKind::Polynomial) throw BadInput("expand: polynomial kind required");
    const PolyField<T> Phi = phi_field(F.phi);
    PolyField<T> acc; // zero
    for (auto it = F.coeffs.rbegin(); it != F.coeffs.rend(); ++it)
        acc = field_multiply(acc, Phi, F.P) + constant_field(*it);
    return acc;
}

/// Pointwise double-precision sampler for any PhiFunction over double.
inline std::function<Element<double>(const Vec3<double>&)> make_sampler(
    const PhiFunction<double>& F) {
    return [F](const Vec3<double>& q) { return eval(F, q); };
}

template <class To, class From>
PhiFunction<To> phifun_cast(const PhiFunction<From>& F) {
    PhiFunction<To> g;
    g.kind = F.kind;
    for (const auto& c : F.coeffs) g.coeffs.push_back(vec_cast<To>(c));
    for (const auto& c : F.num_coeffs) g.num_coeffs.push_back(vec_cast<To>(c));
    for (const auto& c : F.den_coeffs) g.den_coeffs.push_back(vec_cast<To>(c));
    g.tcoeff = vec_cast<To>(F.tcoeff);
    g.P = params_cast<To>(F.P);
    g.phi = affine_cast<To>(F.phi);
    g.tscale = scalar_cast<To>(F.tscale);
    return g;
}

} // namespace triharmonic

#endif // TRIHARMONIC_PHIFUN_HPP
