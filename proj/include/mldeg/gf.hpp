#pragma once

#include <cassert>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>

#include <Eigen/Core>

#include "mldeg/errors.hpp"
#include "mldeg/rational.hpp"

namespace mldeg {

/// Element of a prime field GF(p), p < 2^31.  The modulus travels with the
/// value so matrices and polynomials over different primes cannot be mixed
/// silently.  A default-constructed element (p == 0) is an unbound integer
/// literal; it binds to the other operand's modulus on first contact, which
/// is what Eigen's Scalar(0)/Scalar(1) initializations produce.
struct Fp {
  std::uint32_t v = 0;
  std::uint32_t p = 0;

  Fp() = default;
  Fp(long long x) {  // NOLINT: implicit by design (integer literals)
    assert(x >= 0 && "negative literals need a modulus; use FpField::from");
    v = static_cast<std::uint32_t>(x);
  }
  Fp(std::uint32_t value, std::uint32_t mod) : v(value), p(mod) {}

  bool bound() const { return p != 0; }

  static Fp make(long long x, std::uint32_t mod) {
    long long r = x % static_cast<long long>(mod);
    if (r < 0) r += mod;
    return Fp(static_cast<std::uint32_t>(r), mod);
  }

  friend std::uint32_t common_mod(const Fp& a, const Fp& b) {
    if (a.p && b.p) {
      if (a.p != b.p) throw InputError("mixed GF(p) moduli");
      return a.p;
    }
    return a.p ? a.p : b.p;
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint32_t m = common_mod(a, b);
    if (m == 0) return Fp(a.v + b.v, 0);
    std::uint64_t s = static_cast<std::uint64_t>(a.v % m) + (b.v % m);
    if (s >= m) s -= m;
    return Fp(static_cast<std::uint32_t>(s), m);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint32_t m = common_mod(a, b);
    if (m == 0) {
      assert(a.v >= b.v);
      return Fp(a.v - b.v, 0);
    }
    std::uint64_t s = static_cast<std::uint64_t>(a.v % m) + m - (b.v % m);
    if (s >= m) s -= m;
    return Fp(static_cast<std::uint32_t>(s), m);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint32_t m = common_mod(a, b);
    if (m == 0) return Fp(a.v * b.v, 0);
    std::uint64_t s = static_cast<std::uint64_t>(a.v % m) * (b.v % m) % m;
    return Fp(static_cast<std::uint32_t>(s), m);
  }
  Fp operator-() const {
    if (!p) {
      assert(v == 0);
      return *this;
    }
    return Fp(v == 0 ? 0 : p - v, p);
  }
  Fp inv() const;
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    std::uint32_t m = a.p && b.p ? (a.p == b.p ? a.p : 0) : (a.p ? a.p : b.p);
    if (a.p && b.p && a.p != b.p) return false;
    if (m == 0) return a.v == b.v;
    return a.v % m == b.v % m;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
};

inline bool is_zero(const Fp& x) { return x.p ? (x.v % x.p == 0) : (x.v == 0); }

std::ostream& operator<<(std::ostream& os, const Fp& x);

/// Modular exponentiation, b^e mod m (m < 2^63).
std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m);

/// Deterministic Miller-Rabin for n < 3.3e24 (fixed witness set).
bool is_prime(std::uint64_t n);

/// Smallest prime >= n (n must leave room below 2^63).
std::uint64_t next_prime(std::uint64_t n);

/// Uniform-ish random prime in [lo, hi), reproducible from the generator.
std::uint64_t random_prime(std::uint64_t lo, std::uint64_t hi, std::mt19937_64& rng);

/// Random prime with the configured bit size: range [2^(bits-2), 2^bits).
/// The default bits = 31 gives the [2^29, 2^31) working range.
std::uint64_t random_prime_bits(int bits, std::mt19937_64& rng);

/// Field context: builds bound elements and reduces rationals mod p.
struct FpField {
  std::uint32_t p;

  explicit FpField(std::uint64_t prime) : p(static_cast<std::uint32_t>(prime)) {
    if (prime < 2 || prime >= (1ull << 31) || !is_prime(prime))
      throw InputError("FpField: modulus must be a prime below 2^31");
  }

  Fp zero() const { return Fp(0, p); }
  Fp one() const { return Fp(1, p); }
  Fp from(long long x) const { return Fp::make(x, p); }

  /// Reduces a/b mod p.  Throws UnluckyDrawError when p divides b.
  Fp from(const Rational& q) const {
    BigInt num = q.get_num(), den = q.get_den();
    std::uint32_t dn = static_cast<std::uint32_t>(mpz_fdiv_ui(den.get_mpz_t(), p));
    if (dn == 0) throw UnluckyDrawError("denominator vanishes mod p");
    std::uint32_t nm = static_cast<std::uint32_t>(mpz_fdiv_ui(num.get_mpz_t(), p));
    return Fp(nm, p) / Fp(dn, p);
  }

  Fp random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    return Fp(d(rng), p);
  }
  Fp random_nonzero(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint32_t> d(1, p - 1);
    return Fp(d(rng), p);
  }
};

}  // namespace mldeg

namespace Eigen {

template <>
struct NumTraits<mldeg::Fp> : GenericNumTraits<mldeg::Fp> {
  typedef mldeg::Fp Real;
  typedef mldeg::Fp NonInteger;
  typedef mldeg::Fp Nested;
  static inline Real epsilon() { return mldeg::Fp(); }
  static inline Real dummy_precision() { return mldeg::Fp(); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 0,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
};

}  // namespace Eigen
