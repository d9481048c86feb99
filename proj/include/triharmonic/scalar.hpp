#ifndef TRIHARMONIC_SCALAR_HPP
#define TRIHARMONIC_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <type_traits>

#include "errors.hpp"

namespace triharmonic {

/// Exact rational scalar. Ring operations and division never round.
using Rational = boost::multiprecision::cpp_rational;
using BigInt   = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }
inline double to_double(double x) { return x; }

/// Canonical "num/den" rendering ("3/4", "-1/2", integers as "5/1").
inline std::string rational_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parse "num/den" or a plain integer string.
inline Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        const BigInt num(s.substr(0, slash));
        const BigInt den(s.substr(slash + 1));
        if (den == 0) throw BadInput("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw BadInput("cannot parse rational: " + s);
    }
}

/// Exact conversion: every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw BadInput("cannot convert non-finite double to rational");
    return Rational(x);
}

/// Best rational approximation of x with denominator <= max_den, via
/// continued-fraction convergents.
inline Rational rationalize(double x, std::uint64_t max_den) {
    if (!std::isfinite(x)) throw BadInput("cannot rationalize non-finite double");
    const bool neg = x < 0;
    double v = neg ? -x : x;
    // Convergents p/q of the continued fraction of v.
    BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        const double fl = std::floor(v);
        if (fl > 9e18) break;
        const BigInt a = static_cast<std::int64_t>(fl);
        BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > BigInt(max_den)) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        const double frac = v - fl;
        if (frac < 1e-18) break;
        v = 1.0 / frac;
    }
    if (q1 == 0) return Rational(0);
    Rational r(p1, q1);
    return neg ? Rational(-r) : r;
}

/// Quadratic extension Q(sqrt 3): value a + b*sqrt(3) with exact rational a, b.
/// A field: (a + b sqrt3)^-1 = (a - b sqrt3) / (a^2 - 3 b^2), and a^2 = 3 b^2
/// only for a = b = 0 since sqrt(3) is irrational.
struct Sqrt3Ext {
    Rational a{0}; // rational part
    Rational b{0}; // coefficient of sqrt(3)

    Sqrt3Ext() = default;
    Sqrt3Ext(int v) : a(v) {}                                   // NOLINT(google-explicit-constructor)
    Sqrt3Ext(const Rational& ra) : a(ra) {}                     // NOLINT(google-explicit-constructor)
    Sqrt3Ext(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

    static Sqrt3Ext sqrt3() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    friend Sqrt3Ext operator+(const Sqrt3Ext& x, const Sqrt3Ext& y) { return {x.a + y.a, x.b + y.b}; }
    friend Sqrt3Ext operator-(const Sqrt3Ext& x, const Sqrt3Ext& y) { return {x.a - y.a, x.b - y.b}; }
    friend Sqrt3Ext operator-(const Sqrt3Ext& x) { return {-x.a, -x.b}; }
    friend Sqrt3Ext operator*(const Sqrt3Ext& x, const Sqrt3Ext& y) {
        return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend Sqrt3Ext operator/(const Sqrt3Ext& x, const Sqrt3Ext& y) {
        const Rational n = y.a * y.a - 3 * y.b * y.b;
        if (n == 0) throw BadInput("division by zero in Q(sqrt3)");
        return {(x.a * y.a - 3 * x.b * y.b) / n, (x.b * y.a - x.a * y.b) / n};
    }
    Sqrt3Ext& operator+=(const Sqrt3Ext& y) { return *this = *this + y; }
    Sqrt3Ext& operator-=(const Sqrt3Ext& y) { return *this = *this - y; }
    Sqrt3Ext& operator*=(const Sqrt3Ext& y) { return *this = *this * y; }
    Sqrt3Ext& operator/=(const Sqrt3Ext& y) { return *this = *this / y; }

    friend bool operator==(const Sqrt3Ext& x, const Sqrt3Ext& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Sqrt3Ext& x, const Sqrt3Ext& y) { return !(x == y); }
};

inline double to_double(const Sqrt3Ext& x) {
    return to_double(x.a) + to_double(x.b) * std::sqrt(3.0);
}

/// Compile-time facts and uniform helpers for the three scalar kinds.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr bool has_sqrt3 = false;
    static Rational from_ratio(long long n, long long d) { return Rational(n, d); }
    static bool is_zero(const Rational& x, double /*tol*/ = 0) { return x == 0; }
};

template <>
struct ScalarTraits<Sqrt3Ext> {
    static constexpr bool exact = true;
    static constexpr bool has_sqrt3 = true;
    static Sqrt3Ext from_ratio(long long n, long long d) { return Sqrt3Ext(Rational(n, d)); }
    static Sqrt3Ext sqrt3() { return Sqrt3Ext::sqrt3(); }
    static bool is_zero(const Sqrt3Ext& x, double /*tol*/ = 0) { return x.is_zero(); }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static constexpr bool has_sqrt3 = true;
    static double from_ratio(long long n, long long d) { return static_cast<double>(n) / static_cast<double>(d); }
    static double sqrt3() { return std::sqrt(3.0); }
    /// Numeric comparisons carry an explicit tolerance (default membership slack).
    static bool is_zero(double x, double tol = 1e-12) { return std::fabs(x) <= tol; }
};

/// Absolute value as double, for residual magnitude reporting.
inline double abs_double(const Rational& x) { return std::fabs(to_double(x)); }
inline double abs_double(const Sqrt3Ext& x) { return std::fabs(to_double(x)); }
inline double abs_double(double x) { return std::fabs(x); }

/// Exact scalar-to-scalar conversions used when lifting parameter sets.
template <class To, class From>
To scalar_cast(const From& x) {
    if constexpr (std::is_same_v<To, From>) {
        return x;
    } else if constexpr (std::is_same_v<To, double>) {
        return to_double(x);
    } else if constexpr (std::is_same_v<From, Rational> && std::is_same_v<To, Sqrt3Ext>) {
        return Sqrt3Ext(x);
    } else if constexpr (std::is_same_v<From, double>) {
        static_assert(std::is_same_v<To, Rational> || std::is_same_v<To, Sqrt3Ext>,
                      "unsupported scalar conversion");
        if constexpr (std::is_same_v<To, Rational>) return rational_from_double(x);
        else return Sqrt3Ext(rational_from_double(x));
    } else {
        static_assert(std::is_same_v<From, Sqrt3Ext> && std::is_same_v<To, Rational>,
                      "unsupported scalar conversion");
        if (!x.is_rational()) throw BadInput("sqrt(3) component lost in conversion to rational");
        return x.a;
    }
}

} // namespace triharmonic

#endif // TRIHARMONIC_SCALAR_HPP
