#pragma once

#include <Eigen/Core>
#include <random>

#include "mldeg/gf.hpp"
#include "mldeg/rational.hpp"

namespace mldeg {

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using Vec = Eigen::Matrix<K, Eigen::Dynamic, 1>;

using MatQ = Mat<Rational>;
using VecQ = Vec<Rational>;
using MatFp = Mat<Fp>;
using VecFp = Vec<Fp>;

template <class K>
bool is_symmetric(const Mat<K>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

/// Trace pairing <K, S> = tr(KS) for symmetric arguments: the full
/// coordinate sum, so off-diagonal pairs contribute twice.
template <class K>
K trace_pair(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw InputError("trace_pair: dimension mismatch");
  K acc = a(0, 0) * b(0, 0);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i || j) acc += a(i, j) * b(i, j);
  return acc;
}

/// Flat index of the (i, j), i <= j entry of an n x n symmetric matrix.
inline int sym_index(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + j;
}
inline int sym_coords(int n) { return n * (n + 1) / 2; }

/// Coordinates of a symmetric matrix, upper triangle row-major.
template <class K>
Vec<K> sym_vectorize(const Mat<K>& m) {
  const int n = static_cast<int>(m.rows());
  Vec<K> v(sym_coords(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) v(sym_index(i, j, n)) = m(i, j);
  return v;
}

/// Vectorization weighted so that dot(sym_pairing_vec(K), sym_vectorize(S))
/// equals tr(KS): off-diagonal coordinates carry a factor 2.
template <class K>
Vec<K> sym_pairing_vec(const Mat<K>& m) {
  const int n = static_cast<int>(m.rows());
  Vec<K> v(sym_coords(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      v(sym_index(i, j, n)) = (i == j) ? m(i, j) : K(2) * m(i, j);
  return v;
}

template <class K>
Mat<K> sym_unvectorize(const Vec<K>& v, int n) {
  Mat<K> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = v(sym_index(i, j, n));
  return m;
}

/// Random symmetric matrix over Q, entries uniform integers in [-box, box].
inline MatQ random_symmetric_q(int n, std::mt19937_64& rng, long long box = 10000) {
  std::uniform_int_distribution<long long> d(-box, box);
  MatQ m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = Rational(d(rng));
  return m;
}
inline MatQ random_symmetric_q(int n, std::uint64_t seed, long long box = 10000) {
  std::mt19937_64 rng(seed);
  return random_symmetric_q(n, rng, box);
}

/// Random symmetric matrix over GF(p), entries uniform.
inline MatFp random_symmetric_fp(int n, const FpField& f, std::mt19937_64& rng) {
  MatFp m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = f.random(rng);
  return m;
}
inline MatFp random_symmetric_fp(int n, const FpField& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_symmetric_fp(n, f, rng);
}

/// Scales a rational matrix to integer entries with unit content.
inline MatQ clear_denominators(const MatQ& m) {
  BigInt lcm_den = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), m(i, j).get_den().get_mpz_t());
  MatQ out = m * Rational(lcm_den);
  BigInt g = 0;
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index j = 0; j < out.cols(); ++j)
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out(i, j).get_num().get_mpz_t());
  if (sgn(g) > 0 && g != 1) out /= Rational(g);
  return out;
}

/// Entry-wise reduction mod p.  Throws UnluckyDrawError if a denominator
/// vanishes mod p.
inline MatFp reduce_mod(const MatQ& m, const FpField& f) {
  MatFp out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = f.from(m(i, j));
  return out;
}

}  // namespace mldeg
