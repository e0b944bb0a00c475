#pragma once

#include <vector>

#include "wreathmac/ratfn.hpp"

namespace wreathmac {

using PolyMatrix = std::vector<std::vector<LaurentPoly2>>;

// Solves a homogeneous system M x = 0 whose kernel is known to be spanned by
// a single vector with x[pin] != 0, returning the solution scaled so that
// x[pin] = 1.  Fraction-free (Bareiss) forward elimination over the Laurent
// ring, then exact back substitution.  Throws SolverDegenerateError when the
// kernel is not one-dimensional or x[pin] would have to vanish.
std::vector<RatFn2> kernel_vector_pinned(const PolyMatrix& m, size_t pin);

// Solves the square system A x = b over the fraction field (plain Gaussian
// elimination); throws SingularMatrixError when A is singular.
std::vector<RatFn2> solve_dense(std::vector<std::vector<RatFn2>> a, std::vector<RatFn2> b);

}  // namespace wreathmac
