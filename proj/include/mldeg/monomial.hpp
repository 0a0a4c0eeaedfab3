#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "mldeg/errors.hpp"

namespace mldeg {

inline constexpr int kMaxVars = 32;

/// Exponent vector with cached total degree.  Fixed width keeps monomials
/// trivially copyable; rings check their variable count against kMaxVars.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  static Monomial one() { return {}; }

  static Monomial var(int i, int power = 1) {
    Monomial m;
    m.e[i] = static_cast<std::uint8_t>(power);
    m.deg = power;
    return m;
  }

  bool is_one() const { return deg == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      unsigned s = unsigned(a.e[i]) + b.e[i];
      if (s > 255) throw BudgetError("monomial exponent overflow");
      r.e[i] = static_cast<std::uint8_t>(s);
    }
    r.deg = a.deg + b.deg;
    return r;
  }

  friend bool divides(const Monomial& a, const Monomial& b) {  // a | b
    if (a.deg > b.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (a.e[i] > b.e[i]) return false;
    return true;
  }

  /// b / a, requires divides(a, b).
  friend Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(b.e[i] - a.e[i]);
    r.deg = b.deg - a.deg;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::uint32_t d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
      d += r.e[i];
    }
    r.deg = d;
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::uint32_t d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
      d += r.e[i];
    }
    r.deg = d;
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg == b.deg && a.e == b.e;
  }
};

/// Total order on monomials, compatible with multiplication.
struct MonomialOrder {
  enum class Kind { Grevlex, WeightedGrevlex, Block };

  Kind kind = Kind::Grevlex;
  std::vector<std::uint32_t> weights;  // WeightedGrevlex only, one per var
  int block_split = 0;                 // Block only: vars [0, split) compare first

  static MonomialOrder grevlex() { return {}; }

  static MonomialOrder weighted_grevlex(std::vector<std::uint32_t> w) {
    for (auto x : w)
      if (x == 0) throw InputError("monomial order weights must be positive");
    return {Kind::WeightedGrevlex, std::move(w), 0};
  }

  /// Elimination order: vars [0, split) dominate, grevlex within each block.
  static MonomialOrder block(int split) { return {Kind::Block, {}, split}; }

  /// Three-way comparison; > 0 iff a > b.
  int cmp(const Monomial& a, const Monomial& b, int nvars) const {
    switch (kind) {
      case Kind::Grevlex:
        return cmp_grevlex(a, b, 0, nvars, a.deg, b.deg);
      case Kind::WeightedGrevlex: {
        std::uint64_t wa = 0, wb = 0;
        for (int i = 0; i < nvars; ++i) {
          wa += std::uint64_t(weights[i]) * a.e[i];
          wb += std::uint64_t(weights[i]) * b.e[i];
        }
        if (wa != wb) return wa < wb ? -1 : 1;
        return cmp_revlex_tail(a, b, 0, nvars);
      }
      case Kind::Block: {
        std::uint32_t da = 0, db = 0;
        for (int i = 0; i < block_split; ++i) {
          da += a.e[i];
          db += b.e[i];
        }
        if (int c = cmp_grevlex(a, b, 0, block_split, da, db)) return c;
        return cmp_grevlex(a, b, block_split, nvars, a.deg - da, b.deg - db);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b, int nvars) const { return cmp(a, b, nvars) < 0; }

 private:
  static int cmp_grevlex(const Monomial& a, const Monomial& b, int lo, int hi,
                         std::uint32_t da, std::uint32_t db) {
    if (da != db) return da < db ? -1 : 1;
    return cmp_revlex_tail(a, b, lo, hi);
  }
  // last nonzero coordinate of a - b negative  <=>  a > b
  static int cmp_revlex_tail(const Monomial& a, const Monomial& b, int lo, int hi) {
    for (int i = hi - 1; i >= lo; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
  }
};

}  // namespace mldeg
