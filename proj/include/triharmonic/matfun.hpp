#ifndef TRIHARMONIC_MATFUN_HPP
#define TRIHARMONIC_MATFUN_HPP

#include <complex>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "vecmat.hpp"

namespace triharmonic {

inline Eigen::Matrix3d to_eigen(const Mat3<double>& m) {
    Eigen::Matrix3d e;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e(i, j) = m(i, j);
    return e;
}

inline Mat3<double> from_eigen(const Eigen::Matrix3d& e) {
    Mat3<double> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = e(i, j);
    return m;
}

/// Matrix exponential (scaling and squaring).
inline Mat3<double> mat_exp(const Mat3<double>& m) { return from_eigen(to_eigen(m).exp()); }

/// Matrix hyperbolic functions through real exponential combinations:
/// sinh M = (e^M - e^{-M})/2, cosh M = (e^M + e^{-M})/2.
inline Mat3<double> mat_sinh(const Mat3<double>& m) {
    const Eigen::Matrix3d e = to_eigen(m);
    return from_eigen(((e.exp() - (-e).exp()) * 0.5).eval());
}

inline Mat3<double> mat_cosh(const Mat3<double>& m) {
    const Eigen::Matrix3d e = to_eigen(m);
    return from_eigen(((e.exp() + (-e).exp()) * 0.5).eval());
}

/// Matrix circular functions through one complex exponential:
/// e^{iM} = cos M + i sin M.
inline Mat3<double> mat_sin(const Mat3<double>& m) {
    Eigen::Matrix3cd c = to_eigen(m).cast<std::complex<double>>();
    c *= std::complex<double>(0.0, 1.0);
    return from_eigen(c.exp().imag());
}

inline Mat3<double> mat_cos(const Mat3<double>& m) {
    Eigen::Matrix3cd c = to_eigen(m).cast<std::complex<double>>();
    c *= std::complex<double>(0.0, 1.0);
    return from_eigen(c.exp().real());
}

} // namespace triharmonic

#endif // TRIHARMONIC_MATFUN_HPP
