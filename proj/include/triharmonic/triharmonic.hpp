#ifndef TRIHARMONIC_TRIHARMONIC_HPP
#define TRIHARMONIC_TRIHARMONIC_HPP

// Umbrella header: harmonic vector fields on R^3 from pre-twisted
// differentiability over three-dimensional commutative algebras.

#include "affine.hpp"
#include "algebra.hpp"
#include "builtins.hpp"
#include "cr.hpp"
#include "errors.hpp"
#include "grid.hpp"
#include "harmonic.hpp"
#include "json_io.hpp"
#include "lamellar.hpp"
#include "matfun.hpp"
#include "parallel.hpp"
#include "phifun.hpp"
#include "random.hpp"
#include "scalar.hpp"
#include "solver.hpp"
#include "tripoly.hpp"
#include "vecmat.hpp"

#endif // TRIHARMONIC_TRIHARMONIC_HPP
