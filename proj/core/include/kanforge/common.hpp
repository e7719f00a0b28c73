#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kanforge {

using cell_t = std::uint32_t;

// Base class for all engine errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input data (bad file, out-of-range index, dimension mismatch).
struct InputError : Error {
    using Error::Error;
};

// A configured size budget was exceeded (hom-set or bar-rank blow-up).
struct BudgetError : Error {
    using Error::Error;
};

// A runtime assertion about the mathematics failed (ill-defined induced map,
// violated invariant).  These indicate a bug or a genuinely bad input, never
// a recoverable condition.
struct CheckError : Error {
    using Error::Error;
};

}  // namespace kanforge
