#pragma once

#include <optional>
#include <vector>

#include "mldeg/matrix.hpp"

namespace mldeg {

// Exact dense elimination over an arbitrary field scalar (Rational or Fp).
// Pivoting is first-nonzero: correctness needs only exactness, not size.

namespace detail {

/// In-place forward elimination to row echelon form.
/// Returns the pivot columns in order.
template <class K>
std::vector<int> echelonize(Mat<K>& a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!is_zero(a(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const K inv_p = K(1) / a(r, c);
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) = a(r, j) * inv_p;
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (is_zero(a(i, c))) continue;
      const K f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) = a(i, j) - f * a(r, j);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace detail

template <class K>
int rank(Mat<K> a) {
  if (a.size() == 0) return 0;
  return static_cast<int>(detail::echelonize(a).size());
}

/// Reduced row echelon form plus pivot columns.
template <class K>
std::pair<Mat<K>, std::vector<int>> rref(Mat<K> a) {
  auto pivots = detail::echelonize(a);
  for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
    const int c = pivots[r];
    for (int i = 0; i < r; ++i) {
      if (is_zero(a(i, c))) continue;
      const K f = a(i, c);
      for (Eigen::Index j = c; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(r, j);
    }
  }
  return {std::move(a), std::move(pivots)};
}

/// Basis of the right kernel, returned as matrix columns.
template <class K>
Mat<K> kernel(const Mat<K>& a) {
  const int cols = static_cast<int>(a.cols());
  auto [r, pivots] = rref<K>(a);
  std::vector<bool> is_piv(cols, false);
  for (int c : pivots) is_piv[c] = true;
  const int dim = cols - static_cast<int>(pivots.size());
  Mat<K> ker = Mat<K>::Constant(cols, dim, K(0));
  int k = 0;
  for (int free_c = 0; free_c < cols; ++free_c) {
    if (is_piv[free_c]) continue;
    ker(free_c, k) = K(1);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      ker(pivots[pr], k) = -r(static_cast<int>(pr), free_c);
    ++k;
  }
  return ker;
}

template <class K>
K det(Mat<K> a) {
  if (a.rows() != a.cols()) throw InputError("det: matrix not square");
  const Eigen::Index n = a.rows();
  if (n == 0) return K(1);
  K d = K(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (!is_zero(a(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) return K(0);
    if (piv != c) {
      a.row(piv).swap(a.row(c));
      d = -d;
    }
    d *= a(c, c);
    const K inv_p = K(1) / a(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      const K f = a(i, c) * inv_p;
      for (Eigen::Index j = c; j < n; ++j) a(i, j) = a(i, j) - f * a(c, j);
    }
  }
  return d;
}

template <class K>
std::optional<Mat<K>> inverse(const Mat<K>& a) {
  if (a.rows() != a.cols()) throw InputError("inverse: matrix not square");
  const int n = static_cast<int>(a.rows());
  Mat<K> aug = Mat<K>::Constant(n, 2 * n, K(0));
  aug.leftCols(n) = a;
  for (int i = 0; i < n; ++i) aug(i, n + i) = K(1);
  auto [r, pivots] = rref<K>(std::move(aug));
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
  return Mat<K>(r.rightCols(n));
}

/// Solves a x = b; empty optional when inconsistent.  Free variables are 0.
template <class K>
std::optional<Vec<K>> solve(const Mat<K>& a, const Vec<K>& b) {
  const int n = static_cast<int>(a.cols());
  Mat<K> aug(a.rows(), n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  auto [r, pivots] = rref<K>(std::move(aug));
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  Vec<K> x = Vec<K>::Constant(n, K(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x(pivots[i]) = r(static_cast<int>(i), n);
  return x;
}

}  // namespace mldeg
