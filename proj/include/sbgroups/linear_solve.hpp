#pragma once

// Gaussian elimination over an exact field. T needs +, -, * and free functions
// is_zero(const T&) and inverse(const T&) found by argument-dependent lookup.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace sbg::linalg {

template <class T>
using Matrix = std::vector<std::vector<T>>;

inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline mpq_class inverse(const mpq_class& x) { return 1 / x; }

/// Reduced row echelon form in place; returns the pivot columns.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& a) {
  using linalg::inverse;
  using linalg::is_zero;
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const T inv = inverse(a[r][c]);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      const T f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!is_zero(a[r][j])) a[i][j] = a[i][j] - f * a[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> a) {
  return row_reduce(a).size();
}

/// The unique x with a x = b for square a, or nullopt when a is singular.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  const std::size_t n = a.size();
  Matrix<T> aug = a;
  for (std::size_t i = 0; i < n; ++i) aug[i].push_back(b[i]);
  const auto pivots = row_reduce(aug);
  if (pivots.size() != n || (n > 0 && pivots.back() >= n)) return std::nullopt;
  std::vector<T> x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) x.push_back(aug[i][n]);
  return x;
}

/// A basis of {x : a x = 0}. `zero` and `one` supply the field constants.
template <class T>
Matrix<T> nullspace(Matrix<T> a, const T& zero, const T& one) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  const auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<T> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(cols, zero);
    v[free] = one;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = zero - a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace sbg::linalg
