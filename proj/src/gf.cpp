#include "mldeg/gf.hpp"

#include <ostream>

namespace mldeg {

Fp Fp::inv() const {
  if (!p) throw InputError("cannot invert an unbound GF(p) literal");
  std::uint32_t a = v % p;
  if (a == 0) throw InputError("division by zero in GF(p)");
  // extended Euclid on (a, p)
  std::int64_t t = 0, newt = 1;
  std::int64_t r = p, newr = a;
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += p;
  return Fp(static_cast<std::uint32_t>(t), p);
}

std::ostream& operator<<(std::ostream& os, const Fp& x) {
  return os << (x.p ? x.v % x.p : x.v);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 acc = 1, base = b % m;
  while (e) {
    if (e & 1) acc = acc * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic witness set for n < 3.3e24
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  if (n <= 2) return 2;
  if ((n & 1) == 0) ++n;
  while (!is_prime(n)) n += 2;
  return n;
}

std::uint64_t random_prime(std::uint64_t lo, std::uint64_t hi, std::mt19937_64& rng) {
  if (lo >= hi) throw InputError("random_prime: empty range");
  std::uniform_int_distribution<std::uint64_t> d(lo, hi - 1);
  for (int tries = 0; tries < 4096; ++tries) {
    std::uint64_t c = next_prime(d(rng));
    if (c < hi) return c;
  }
  throw InputError("random_prime: no prime found in range");
}

std::uint64_t random_prime_bits(int bits, std::mt19937_64& rng) {
  if (bits < 4 || bits > 31) throw InputError("prime bits must be in [4, 31]");
  return random_prime(1ull << (bits - 2), 1ull << bits, rng);
}

}  // namespace mldeg
