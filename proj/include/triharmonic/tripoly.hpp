#ifndef TRIHARMONIC_TRIPOLY_HPP
#define TRIHARMONIC_TRIPOLY_HPP

#include <array>
#include <cstdio>
#include <map>
#include <string>

#include "affine.hpp"
#include "algebra.hpp"
#include "scalar.hpp"
#include "vecmat.hpp"

namespace triharmonic {

namespace detail {

inline std::string coeff_display(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline std::string coeff_display(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

inline std::string coeff_display(const Sqrt3Ext& v) {
    if (v.b == 0) return coeff_display(v.a);
    const std::string root = coeff_display(v.b) + "*sqrt3";
    if (v.a == 0) return root;
    const bool neg = v.b < 0;
    return "(" + coeff_display(v.a) + (neg ? "" : "+") + root + ")";
}

} // namespace detail

/// Sparse trivariate polynomial over an exact (or floating) scalar ring.
/// Keys are exponent triples (i,j,k) for x^i y^j z^k; zero coefficients are
/// never stored, so equality of maps is equality of polynomials.
template <class T = Rational>
class TriPoly {
public:
    using Key = std::array<int, 3>;

    std::map<Key, T> terms;

    TriPoly() = default;
    TriPoly(int c) { set({0, 0, 0}, T(c)); }          // NOLINT(google-explicit-constructor)
    TriPoly(const T& c) { set({0, 0, 0}, c); }        // NOLINT(google-explicit-constructor)

    static TriPoly variable(int axis) { return monomial({axis == 0, axis == 1, axis == 2}, T(1)); }
    static TriPoly monomial(Key k, const T& c) {
        TriPoly p;
        p.set(k, c);
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [k, c] : terms) d = std::max(d, k[0] + k[1] + k[2]);
        return d;
    }

    T coeff(const Key& k) const {
        const auto it = terms.find(k);
        return it == terms.end() ? T(0) : it->second;
    }

    void set(const Key& k, const T& c) {
        if (ScalarTraits<T>::is_zero(c))
            terms.erase(k);
        else
            terms[k] = c;
    }

    void add_term(const Key& k, const T& c) {
        const auto it = terms.find(k);
        if (it == terms.end()) {
            if (!ScalarTraits<T>::is_zero(c)) terms.emplace(k, c);
        } else {
            it->second = it->second + c;
            if (ScalarTraits<T>::is_zero(it->second)) terms.erase(it);
        }
    }

    TriPoly& operator+=(const TriPoly& o) {
        for (const auto& [k, c] : o.terms) add_term(k, c);
        return *this;
    }
    TriPoly& operator-=(const TriPoly& o) {
        for (const auto& [k, c] : o.terms) add_term(k, -c);
        return *this;
    }
    friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
    friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
    TriPoly operator-() const {
        TriPoly r;
        for (const auto& [k, c] : terms) r.terms.emplace(k, -c);
        return r;
    }
    friend TriPoly operator*(const TriPoly& a, const TriPoly& b) {
        TriPoly r;
        for (const auto& [ka, ca] : a.terms)
            for (const auto& [kb, cb] : b.terms)
                r.add_term({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
        return r;
    }
    friend TriPoly operator*(const T& s, const TriPoly& p) {
        TriPoly r;
        if (ScalarTraits<T>::is_zero(s)) return r;
        for (const auto& [k, c] : p.terms) r.add_term(k, s * c);
        return r;
    }
    friend TriPoly operator*(const TriPoly& p, const T& s) { return s * p; }
    friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms == b.terms; }
    friend bool operator!=(const TriPoly& a, const TriPoly& b) { return !(a == b); }

    T eval(const Vec3<T>& q) const {
        T acc(0);
        for (const auto& [k, c] : terms) {
            T t = c;
            for (int axis = 0; axis < 3; ++axis)
                for (int e = 0; e < k[axis]; ++e) t = t * q[axis];
            acc = acc + t;
        }
        return acc;
    }

    double eval_double(const Vec3<double>& q) const {
        double acc = 0.0;
        for (const auto& [k, c] : terms) {
            double t = to_double(c);
            for (int axis = 0; axis < 3; ++axis)
                for (int e = 0; e < k[axis]; ++e) t *= q[axis];
            acc += t;
        }
        return acc;
    }

    TriPoly partial(int axis) const {
        TriPoly r;
        for (const auto& [k, c] : terms) {
            if (k[axis] == 0) continue;
            Key nk = k;
            nk[axis] -= 1;
            r.add_term(nk, T(k[axis]) * c);
        }
        return r;
    }

    TriPoly laplacian() const {
        return partial(0).partial(0) + partial(1).partial(1) + partial(2).partial(2);
    }

    /// Human-readable rendering, highest exponent triple first (x-major).
    std::string str() const {
        if (terms.empty()) return "0";
        static const char* names[3] = {"x", "y", "z"};
        std::string out;
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            const auto& [k, c] = *it;
            std::string cs = detail::coeff_display(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            std::string mono;
            for (int axis = 0; axis < 3; ++axis) {
                if (k[axis] == 0) continue;
                mono += names[axis];
                if (k[axis] > 1) mono += "^" + std::to_string(k[axis]);
            }
            if (!mono.empty() && cs == "1") cs.clear();
            std::string body = cs.empty() ? mono : (mono.empty() ? cs : cs + mono);
            if (out.empty())
                out = (neg ? "-" : "") + body;
            else
                out += (neg ? " - " : " + ") + body;
        }
        return out;
    }
};

template <class To, class From>
TriPoly<To> poly_cast(const TriPoly<From>& p) {
    TriPoly<To> r;
    for (const auto& [k, c] : p.terms) r.set(k, scalar_cast<To>(c));
    return r;
}

/// Substitute polynomials for the three variables: p(vars[0], vars[1], vars[2]).
template <class T>
TriPoly<T> substitute(const TriPoly<T>& p, const std::array<TriPoly<T>, 3>& vars) {
    TriPoly<T> out;
    for (const auto& [k, c] : p.terms) {
        TriPoly<T> term(c);
        for (int axis = 0; axis < 3; ++axis)
            for (int e = 0; e < k[axis]; ++e) term = term * vars[axis];
        out += term;
    }
    return out;
}

/// Vector field with polynomial components (coordinates in the e-basis).
template <class T = Rational>
struct PolyField {
    TriPoly<T> f1, f2, f3;

    const TriPoly<T>& operator[](std::size_t i) const { return i == 0 ? f1 : (i == 1 ? f2 : f3); }
    TriPoly<T>& operator[](std::size_t i) { return i == 0 ? f1 : (i == 1 ? f2 : f3); }

    bool is_zero() const { return f1.is_zero() && f2.is_zero() && f3.is_zero(); }
    int degree() const { return std::max({f1.degree(), f2.degree(), f3.degree()}); }

    friend PolyField operator+(const PolyField& a, const PolyField& b) {
        return {a.f1 + b.f1, a.f2 + b.f2, a.f3 + b.f3};
    }
    friend PolyField operator-(const PolyField& a, const PolyField& b) {
        return {a.f1 - b.f1, a.f2 - b.f2, a.f3 - b.f3};
    }
    friend PolyField operator*(const T& s, const PolyField& f) {
        return {s * f.f1, s * f.f2, s * f.f3};
    }
    friend bool operator==(const PolyField& a, const PolyField& b) {
        return a.f1 == b.f1 && a.f2 == b.f2 && a.f3 == b.f3;
    }

    Element<T> eval(const Vec3<T>& q) const { return {f1.eval(q), f2.eval(q), f3.eval(q)}; }
    Element<double> eval_double(const Vec3<double>& q) const {
        return {f1.eval_double(q), f2.eval_double(q), f3.eval_double(q)};
    }
};

template <class To, class From>
PolyField<To> field_cast(const PolyField<From>& f) {
    return {poly_cast<To>(f.f1), poly_cast<To>(f.f2), poly_cast<To>(f.f3)};
}

template <class T>
PolyField<T> partial(const PolyField<T>& f, int axis) {
    return {f.f1.partial(axis), f.f2.partial(axis), f.f3.partial(axis)};
}

template <class T>
TriPoly<T> divergence(const PolyField<T>& f) {
    return f.f1.partial(0) + f.f2.partial(1) + f.f3.partial(2);
}

template <class T>
PolyField<T> curl(const PolyField<T>& f) {
    return {f.f3.partial(1) - f.f2.partial(2), f.f1.partial(2) - f.f3.partial(0),
            f.f2.partial(0) - f.f1.partial(1)};
}

template <class T>
PolyField<T> laplacian(const PolyField<T>& f) {
    return {f.f1.laplacian(), f.f2.laplacian(), f.f3.laplacian()};
}

/// Directional derivative w . grad applied componentwise.
template <class T>
PolyField<T> directional(const PolyField<T>& f, const Vec3<T>& w) {
    PolyField<T> r;
    for (std::size_t i = 0; i < 3; ++i)
        r[i] = w[0] * f[i].partial(0) + w[1] * f[i].partial(1) + w[2] * f[i].partial(2);
    return r;
}

/// The pre-twist phi(q) = A q + k as a degree-one polynomial field.
template <class T>
PolyField<T> phi_field(const AffineMap<T>& m) {
    PolyField<T> f;
    for (std::size_t i = 0; i < 3; ++i) {
        TriPoly<T> comp(m.k[i]);
        for (int j = 0; j < 3; ++j) comp += m.A(i, j) * TriPoly<T>::variable(j);
        f[i] = comp;
    }
    return f;
}

/// Pointwise algebra product of two polynomial fields.
template <class T>
PolyField<T> field_multiply(const PolyField<T>& a, const PolyField<T>& b,
                            const AlgebraParams<T>& P) {
    const TriPoly<T> cross = a.f2 * b.f3 + a.f3 * b.f2;
    const TriPoly<T> mid = a.f2 * b.f2;
    const TriPoly<T> last = a.f3 * b.f3;
    return {a.f1 * b.f1 + P.p7() * mid + P.p8() * cross + P.p9() * last,
            a.f1 * b.f2 + a.f2 * b.f1 + P.p1() * mid + P.p3() * cross + P.p5() * last,
            a.f1 * b.f3 + a.f3 * b.f1 + P.p2() * mid + P.p4() * cross + P.p6() * last};
}

/// Pointwise algebra power (n >= 0); n = 0 gives the constant identity e1.
template <class T>
PolyField<T> field_power(const PolyField<T>& f, unsigned n, const AlgebraParams<T>& P) {
    PolyField<T> r{TriPoly<T>(1), TriPoly<T>(), TriPoly<T>()};
    PolyField<T> base = f;
    while (n > 0) {
        if (n & 1u) r = field_multiply(r, base, P);
        base = field_multiply(base, base, P);
        n >>= 1u;
    }
    return r;
}

/// Constant element as a polynomial field.
template <class T>
PolyField<T> constant_field(const Element<T>& c) {
    return {TriPoly<T>(c[0]), TriPoly<T>(c[1]), TriPoly<T>(c[2])};
}

} // namespace triharmonic

#endif // TRIHARMONIC_TRIPOLY_HPP
