#pragma once

#include <stdexcept>
#include <string>

namespace qhe {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad or incomplete configuration (unknown unit tag, missing field, ...).
// CLI maps this to exit code 2.
struct ConfigError : Error {
  using Error::Error;
};

// Parameters outside the regime a formula is valid in (bandwidth invariant
// violated, perturbative bound exceeded, unreachable efficiency bound, ...).
// CLI maps this to exit code 3.
struct DomainError : Error {
  using Error::Error;
};

// Numerical failure (step-size underflow, singular denominator, degenerate
// steady state). CLI maps this to exit code 3.
struct NumericError : Error {
  using Error::Error;
};

}  // namespace qhe
