#ifndef TRIHARMONIC_HARMONIC_HPP
#define TRIHARMONIC_HARMONIC_HPP

#include <array>

#include "affine.hpp"
#include "algebra.hpp"
#include "vecmat.hpp"

namespace triharmonic {

/// Gram data of the rows A1, A2, A3 of a pre-twist matrix: squared norms and
/// pairwise dot products. These are the only ingredients of the harmonicity
/// conditions.
template <class T>
struct RowGram {
    T n1, n2, n3;    // |A1|^2, |A2|^2, |A3|^2
    T d12, d13, d23; // A1.A2, A1.A3, A2.A3
};

template <class T>
RowGram<T> row_gram(const Mat3<T>& A) {
    return {dot(A[0], A[0]), dot(A[1], A[1]), dot(A[2], A[2]),
            dot(A[0], A[1]), dot(A[0], A[2]), dot(A[1], A[2])};
}

/// The six algebra products of the pre-twist partials, in the order
/// phi_x^2, phi_y^2, phi_z^2, phi_x*phi_y, phi_x*phi_z, phi_y*phi_z,
/// computed through the product.
template <class T>
std::array<Element<T>, 6> second_products(const AffineMap<T>& m, const AlgebraParams<T>& P) {
    const auto c = phi_partials(m);
    return {multiply(c[0], c[0], P), multiply(c[1], c[1], P), multiply(c[2], c[2], P),
            multiply(c[0], c[1], P), multiply(c[0], c[2], P), multiply(c[1], c[2], P)};
}

/// Square of a single element written out coefficientwise.
template <class T>
Element<T> square_closed_form(const Element<T>& a, const AlgebraParams<T>& P) {
    const T two(2);
    return {a[0] * a[0] + a[1] * a[1] * P.p7() + two * a[1] * a[2] * P.p8() + a[2] * a[2] * P.p9(),
            two * a[0] * a[1] + a[1] * a[1] * P.p1() + two * a[1] * a[2] * P.p3() +
                a[2] * a[2] * P.p5(),
            two * a[0] * a[2] + a[1] * a[1] * P.p2() + two * a[1] * a[2] * P.p4() +
                a[2] * a[2] * P.p6()};
}

/// Mixed product of two elements written out coefficientwise.
template <class T>
Element<T> cross_closed_form(const Element<T>& a, const Element<T>& b, const AlgebraParams<T>& P) {
    const T s = a[1] * b[2] + a[2] * b[1];
    return {a[0] * b[0] + P.p7() * a[1] * b[1] + P.p8() * s + P.p9() * a[2] * b[2],
            a[0] * b[1] + a[1] * b[0] + P.p1() * a[1] * b[1] + P.p3() * s + P.p5() * a[2] * b[2],
            a[0] * b[2] + a[2] * b[0] + P.p2() * a[1] * b[1] + P.p4() * s + P.p6() * a[2] * b[2]};
}

/// Same six products as second_products, but through the explicit closed-form
/// coefficient expansions. The two paths must agree identically.
template <class T>
std::array<Element<T>, 6> second_products_closed_form(const AffineMap<T>& m,
                                                      const AlgebraParams<T>& P) {
    const auto c = phi_partials(m);
    return {square_closed_form(c[0], P),       square_closed_form(c[1], P),
            square_closed_form(c[2], P),       cross_closed_form(c[0], c[1], P),
            cross_closed_form(c[0], c[2], P),  cross_closed_form(c[1], c[2], P)};
}

/// The element phi_x^2 + phi_y^2 + phi_z^2 expressed directly in the row Gram
/// data of A. The pre-twist is harmonic for P iff all three components vanish.
template <class T>
Element<T> harmonicity_residual(const AffineMap<T>& m, const AlgebraParams<T>& P) {
    const RowGram<T> g = row_gram(m.A);
    const T two(2);
    return {g.n1 + g.n2 * P.p7() + two * g.d23 * P.p8() + g.n3 * P.p9(),
            g.n2 * P.p1() + two * g.d23 * P.p3() + g.n3 * P.p5() + two * g.d12,
            g.n2 * P.p2() + two * g.d23 * P.p4() + g.n3 * P.p6() + two * g.d13};
}

/// Residual of the combined structure system in nine unknowns x1..x9:
/// rows 1-3 are the associativity constraints tying x7..x9 to x1..x6, rows
/// 4-6 are the harmonicity conditions of the pre-twist A for those constants.
/// All six vanish iff x1..x6 is an admissible parameter set with the derived
/// x7..x9, and A is harmonic for it.
template <class T>
std::array<T, 6> system_residual(const std::array<T, 9>& x, const AffineMap<T>& m) {
    const T &x1 = x[0], &x2 = x[1], &x3 = x[2], &x4 = x[3], &x5 = x[4], &x6 = x[5], &x7 = x[6],
            &x8 = x[7], &x9 = x[8];
    const RowGram<T> g = row_gram(m.A);
    const T two(2);
    return {-x1 * x4 + x2 * x3 - x2 * x6 + x4 * x4 - x7,
            x2 * x5 - x3 * x4 - x8,
            -x1 * x5 + x3 * x3 - x3 * x6 + x4 * x5 - x9,
            g.n2 * x1 + two * g.d23 * x3 + g.n3 * x5 + two * g.d12,
            g.n2 * x2 + two * g.d23 * x4 + g.n3 * x6 + two * g.d13,
            g.n2 * x7 + two * g.d23 * x8 + g.n3 * x9 + g.n1};
}

} // namespace triharmonic

#endif // TRIHARMONIC_HARMONIC_HPP
