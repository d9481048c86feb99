#ifndef TRIHARMONIC_VECMAT_HPP
#define TRIHARMONIC_VECMAT_HPP

#include <array>
#include <cstddef>

#include "scalar.hpp"

namespace triharmonic {

/// Coordinate triple over any scalar ring. Algebra elements in the basis
/// {e1,e2,e3} are represented as Vec3 of their coordinates (e1 the identity).
template <class T>
struct Vec3 {
    std::array<T, 3> c{T(0), T(0), T(0)};

    Vec3() = default;
    Vec3(T a, T b, T d) : c{std::move(a), std::move(b), std::move(d)} {}

    T& operator[](std::size_t i) { return c[i]; }
    const T& operator[](std::size_t i) const { return c[i]; }

    friend Vec3 operator+(const Vec3& x, const Vec3& y) {
        return {x[0] + y[0], x[1] + y[1], x[2] + y[2]};
    }
    friend Vec3 operator-(const Vec3& x, const Vec3& y) {
        return {x[0] - y[0], x[1] - y[1], x[2] - y[2]};
    }
    friend Vec3 operator-(const Vec3& x) { return {-x[0], -x[1], -x[2]}; }
    friend Vec3 operator*(const T& s, const Vec3& x) { return {s * x[0], s * x[1], s * x[2]}; }
    friend Vec3 operator*(const Vec3& x, const T& s) { return s * x; }
    Vec3& operator+=(const Vec3& y) { return *this = *this + y; }
    Vec3& operator-=(const Vec3& y) { return *this = *this - y; }

    friend bool operator==(const Vec3& x, const Vec3& y) {
        return x[0] == y[0] && x[1] == y[1] && x[2] == y[2];
    }
    friend bool operator!=(const Vec3& x, const Vec3& y) { return !(x == y); }
};

/// Algebra element = coordinate triple in {e1,e2,e3}.
template <class T>
using Element = Vec3<T>;

template <class T>
T dot(const Vec3<T>& x, const Vec3<T>& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

template <class T>
T norm2(const Vec3<T>& x) { return dot(x, x); }

template <class T>
bool is_zero_vec(const Vec3<T>& x, double tol = 1e-12) {
    return ScalarTraits<T>::is_zero(x[0], tol) && ScalarTraits<T>::is_zero(x[1], tol) &&
           ScalarTraits<T>::is_zero(x[2], tol);
}

template <class T>
double max_abs(const Vec3<T>& x) {
    double m = abs_double(x[0]);
    m = std::max(m, abs_double(x[1]));
    return std::max(m, abs_double(x[2]));
}

template <class To, class From>
Vec3<To> vec_cast(const Vec3<From>& x) {
    return {scalar_cast<To>(x[0]), scalar_cast<To>(x[1]), scalar_cast<To>(x[2])};
}

/// Row-major 3x3 matrix over any scalar ring.
template <class T>
struct Mat3 {
    std::array<Vec3<T>, 3> rows{};

    Mat3() = default;
    Mat3(Vec3<T> r0, Vec3<T> r1, Vec3<T> r2) : rows{std::move(r0), std::move(r1), std::move(r2)} {}

    static Mat3 identity() {
        return {{T(1), T(0), T(0)}, {T(0), T(1), T(0)}, {T(0), T(0), T(1)}};
    }
    static Mat3 zero() { return {}; }

    Vec3<T>& operator[](std::size_t i) { return rows[i]; }
    const Vec3<T>& operator[](std::size_t i) const { return rows[i]; }
    T& operator()(std::size_t i, std::size_t j) { return rows[i][j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return rows[i][j]; }

    Vec3<T> col(std::size_t j) const { return {rows[0][j], rows[1][j], rows[2][j]}; }

    friend Mat3 operator+(const Mat3& x, const Mat3& y) {
        return {x[0] + y[0], x[1] + y[1], x[2] + y[2]};
    }
    friend Mat3 operator-(const Mat3& x, const Mat3& y) {
        return {x[0] - y[0], x[1] - y[1], x[2] - y[2]};
    }
    friend Mat3 operator*(const T& s, const Mat3& x) { return {s * x[0], s * x[1], s * x[2]}; }
    friend Vec3<T> operator*(const Mat3& m, const Vec3<T>& v) {
        return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
    }
    friend Mat3 operator*(const Mat3& x, const Mat3& y) {
        Mat3 r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j) + x(i, 2) * y(2, j);
        return r;
    }
    friend bool operator==(const Mat3& x, const Mat3& y) {
        return x[0] == y[0] && x[1] == y[1] && x[2] == y[2];
    }
    friend bool operator!=(const Mat3& x, const Mat3& y) { return !(x == y); }
};

template <class T>
Mat3<T> transpose(const Mat3<T>& m) {
    return {m.col(0), m.col(1), m.col(2)};
}

template <class T>
T det(const Mat3<T>& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Transposed cofactor matrix; adjugate(m) * m = det(m) * I over any ring.
template <class T>
Mat3<T> adjugate(const Mat3<T>& m) {
    Mat3<T> r;
    r(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    r(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    r(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    r(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    r(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    r(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    r(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    r(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
    r(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return r;
}

/// Exact solve of m*x = b for field scalars; caller guarantees det != 0.
template <class T>
Vec3<T> solve3(const Mat3<T>& m, const Vec3<T>& b) {
    const T d = det(m);
    const Vec3<T> y = adjugate(m) * b;
    return {y[0] / d, y[1] / d, y[2] / d};
}

template <class T>
double frobenius_norm2(const Mat3<T>& m) {
    double s = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const double v = to_double(m(i, j));
            s += v * v;
        }
    return s;
}

template <class To, class From>
Mat3<To> mat_cast(const Mat3<From>& m) {
    return {vec_cast<To>(m[0]), vec_cast<To>(m[1]), vec_cast<To>(m[2])};
}

} // namespace triharmonic

#endif // TRIHARMONIC_VECMAT_HPP
