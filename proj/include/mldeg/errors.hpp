#pragma once

#include <stdexcept>
#include <string>

namespace mldeg {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON, bad rational string, dimension mismatch, ...
struct InputError : Error {
  using Error::Error;
};

/// The model space contains no invertible matrix; ML degree is undefined.
struct NonRegularError : Error {
  using Error::Error;
};

/// A resource cap was exhausted (Groebner pair budget, determinant cap, ...).
/// Callers report "inconclusive" rather than guessing.
struct BudgetError : Error {
  using Error::Error;
};

/// A random specialization turned out degenerate (e.g. infinite fiber,
/// denominator hit the prime).  Retrying with a fresh prime/seed is sound.
struct UnluckyDrawError : Error {
  using Error::Error;
};

}  // namespace mldeg
