#pragma once

#include <vector>

#include "mldeg/poly.hpp"

namespace mldeg {

template <class K>
using PolyMat = std::vector<std::vector<Poly<K>>>;

inline constexpr int kDefaultDetCap = 8;

namespace detail {

// det of the submatrix on `rows` (a list of row indices, in order) and the
// columns in `mask`, expanded along the last listed row with memoization
// over column subsets.  2^n subproblems, division-free.
template <class K>
Poly<K> det_masked(const PolyMat<K>& m, const std::vector<int>& rows, unsigned full_mask,
                   const RingPtr<K>& ring) {
  std::vector<Poly<K>> memo(full_mask + 1);
  memo[0] = Poly<K>::constant(ring, ring->from_int(1));

  // iterate masks in increasing popcount via plain increasing order: any
  // submask of `mask` is numerically smaller, so dependencies are ready.
  for (unsigned mask = 1; mask <= full_mask; ++mask) {
    if ((mask & full_mask) != mask) continue;
    const int k = __builtin_popcount(mask);
    if (k > static_cast<int>(rows.size())) continue;
    const int row = rows[k - 1];
    Poly<K> acc(ring);
    int idx = 0;
    for (unsigned bits = mask; bits; bits &= bits - 1, ++idx) {
      const int col = __builtin_ctz(bits);
      const Poly<K>& entry = m[row][col];
      if (!entry.is_zero()) {
        Poly<K> contrib = entry * memo[mask ^ (1u << col)];
        if (((k - 1) + idx) % 2 == 0)
          acc += contrib;
        else
          acc -= contrib;
      }
    }
    memo[mask] = std::move(acc);
  }
  return memo[full_mask];
}

}  // namespace detail

/// Exact determinant of a square matrix of polynomials (all in one ring).
template <class K>
Poly<K> det_symbolic(const PolyMat<K>& m, int cap = kDefaultDetCap) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw InputError("det_symbolic: empty matrix");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw InputError("det_symbolic: matrix not square");
  if (n > cap) throw BudgetError("det_symbolic: dimension exceeds the cap");
  const RingPtr<K>& ring = m[0][0].ring();
  std::vector<int> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = i;
  return detail::det_masked(m, rows, (1u << n) - 1, ring);
}

/// Adjugate: adj(M) * M == det(M) * I as an exact polynomial identity.
/// 1x1 matrices return [1] (empty minor convention).
template <class K>
PolyMat<K> adjugate_symbolic(const PolyMat<K>& m, int cap = kDefaultDetCap) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw InputError("adjugate_symbolic: empty matrix");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw InputError("adjugate_symbolic: matrix not square");
  if (n > cap) throw BudgetError("adjugate_symbolic: dimension exceeds the cap");
  const RingPtr<K>& ring = m[0][0].ring();

  PolyMat<K> adj(n, std::vector<Poly<K>>(n, Poly<K>(ring)));
  if (n == 1) {
    adj[0][0] = Poly<K>::constant(ring, ring->from_int(1));
    return adj;
  }
  // adj[i][j] = (-1)^{i+j} det(M with row j and column i removed)
  for (int del_row = 0; del_row < n; ++del_row) {
    std::vector<int> rows;
    rows.reserve(n - 1);
    for (int r = 0; r < n; ++r)
      if (r != del_row) rows.push_back(r);
    const unsigned full = (1u << n) - 1;
    // one memo pass per deleted row yields all n column-deleted minors
    std::vector<Poly<K>> memo(full + 1);
    memo[0] = Poly<K>::constant(ring, ring->from_int(1));
    for (unsigned mask = 1; mask <= full; ++mask) {
      const int k = __builtin_popcount(mask);
      if (k > n - 1) continue;
      const int row = rows[k - 1];
      Poly<K> acc(ring);
      int idx = 0;
      for (unsigned bits = mask; bits; bits &= bits - 1, ++idx) {
        const int col = __builtin_ctz(bits);
        if (!m[row][col].is_zero()) {
          Poly<K> contrib = m[row][col] * memo[mask ^ (1u << col)];
          if (((k - 1) + idx) % 2 == 0)
            acc += contrib;
          else
            acc -= contrib;
        }
      }
      memo[mask] = std::move(acc);
    }
    for (int del_col = 0; del_col < n; ++del_col) {
      Poly<K> minor = memo[full ^ (1u << del_col)];
      if ((del_row + del_col) % 2 != 0) minor = -minor;
      adj[del_col][del_row] = std::move(minor);
    }
  }
  return adj;
}

}  // namespace mldeg
