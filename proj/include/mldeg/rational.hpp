#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>
#include <string_view>

#include "mldeg/errors.hpp"

namespace mldeg {

// Exact arithmetic scalars.  Rationals are GMP-backed and always kept in
// canonical form (lowest terms, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Parses "3", "-7", "3/4", "-1/2".  No floating point is accepted anywhere.
inline Rational parse_rational(std::string_view s) {
  std::string str(s);
  // trim
  const auto a = str.find_first_not_of(" \t");
  const auto b = str.find_last_not_of(" \t");
  if (a == std::string::npos) throw InputError("empty rational literal");
  str = str.substr(a, b - a + 1);
  Rational q;
  try {
    q = Rational(str, 10);
  } catch (const std::invalid_argument&) {
    throw InputError("bad rational literal: '" + str + "'");
  }
  if (sgn(q.get_den()) == 0) throw InputError("zero denominator in '" + str + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace mldeg

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
