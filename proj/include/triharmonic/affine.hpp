#ifndef TRIHARMONIC_AFFINE_HPP
#define TRIHARMONIC_AFFINE_HPP

#include <array>

#include "algebra.hpp"
#include "vecmat.hpp"

namespace triharmonic {

/// Affine pre-twist phi(q) = A q + k. Its constant partial derivatives
/// phi_x, phi_y, phi_z are the columns of A.
template <class T>
struct AffineMap {
    Mat3<T> A = Mat3<T>::identity();
    Element<T> k{T(0), T(0), T(0)};

    Element<T> operator()(const Element<T>& q) const { return A * q + k; }

    /// The distinguished harmonic pre-twist for the cyclic algebra.
    static AffineMap reference() {
        AffineMap m;
        m.A = Mat3<T>{{T(-1), T(-1), T(0)}, {T(1), T(0), T(-1)}, {T(0), T(1), T(1)}};
        m.k = Element<T>{T(0), T(0), T(0)};
        return m;
    }
};

template <class To, class From>
AffineMap<To> affine_cast(const AffineMap<From>& m) {
    AffineMap<To> r;
    r.A = mat_cast<To>(m.A);
    r.k = vec_cast<To>(m.k);
    return r;
}

/// (phi_x, phi_y, phi_z): the columns of A, as algebra elements.
template <class T>
std::array<Element<T>, 3> phi_partials(const AffineMap<T>& m) {
    return {m.A.col(0), m.A.col(1), m.A.col(2)};
}

} // namespace triharmonic

#endif // TRIHARMONIC_AFFINE_HPP
