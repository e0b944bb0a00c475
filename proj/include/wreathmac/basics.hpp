#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wreathmac {

using Int = mpz_class;
using Rat = mpq_class;

struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SolverDegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VarTagError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CellOutsideError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SizeMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvariantViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonSymmetricError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// x^k for possibly negative k; x must be nonzero when k < 0.
Rat rat_pow(const Rat& x, long k);

std::string rat_str(const Rat& x);

uint64_t fnv1a64(std::string_view s);

inline long imod(long a, long m) {
    long v = a % m;
    return v < 0 ? v + m : v;
}

}  // namespace wreathmac
