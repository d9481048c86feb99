#ifndef TRIHARMONIC_ERRORS_HPP
#define TRIHARMONIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace triharmonic {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent user input (bad JSON, contradictory flags, ...).
struct BadInput : Error {
    explicit BadInput(const std::string& what) : Error(what) {}
};

/// Attempt to invert a singular algebra element. `factor` tells which factor of
/// the regularity polynomial vanished: the nodal-plane factor x+y+z, the
/// trisector factor x^2+y^2+z^2-xy-yz-zx (i.e. x=y=z), or both (the zero
/// element); `General` is used by the representation-based inverse where no
/// factorization is available.
struct SingularElement : Error {
    enum class Factor { Plane, Trisector, Both, General };
    Factor factor;
    SingularElement(Factor f, const std::string& what) : Error(what), factor(f) {}
};

/// Division on the nodal plane with a zero or off-plane divisor.
struct DegenerateDivisor : Error {
    explicit DegenerateDivisor(const std::string& what) : Error(what) {}
};

/// An argument that must lie on the nodal plane does not.
struct NotInPlane : Error {
    explicit NotInPlane(const std::string& what) : Error(what) {}
};

/// Rational function evaluated where its denominator is singular.
struct SingularDenominator : Error {
    explicit SingularDenominator(const std::string& what) : Error(what) {}
};

/// Grid specification with a zero resolution axis.
struct EmptyGrid : Error {
    explicit EmptyGrid(const std::string& what) : Error(what) {}
};

} // namespace triharmonic

#endif // TRIHARMONIC_ERRORS_HPP
