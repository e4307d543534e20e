#pragma once

#include <optional>
#include <vector>

#include "g2cal/ring.hpp"

namespace g2cal {

namespace detail {
inline bool field_zero(const Rational& x) { return x == 0; }
inline bool field_zero(const RingFraction& x) { return x.is_zero(); }
}  // namespace detail

/// Dense matrix over an exact field (Rational or RingFraction).
template <class F>
struct ExactMat {
  int rows = 0, cols = 0;
  std::vector<F> a;

  ExactMat() = default;
  ExactMat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c) {}
  F& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
  const F& at(int i, int j) const { return a[std::size_t(i) * cols + j]; }
};

/// Row-reduces [A | tail] in place (tail columns ride along and are never
/// pivoted). Returns the pivot columns of the leading block.
template <class F>
std::vector<int> row_reduce(ExactMat<F>& m, int lead_cols) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < lead_cols && row < m.rows; ++col) {
    int p = -1;
    for (int i = row; i < m.rows; ++i)
      if (!detail::field_zero(m.at(i, col))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    F inv_pivot = F(1) / m.at(row, col);
    for (int j = col; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * inv_pivot;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || detail::field_zero(m.at(i, col))) continue;
      F f = m.at(i, col);
      for (int j = col; j < m.cols; ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
int exact_rank(ExactMat<F> m) {
  return int(row_reduce(m, m.cols).size());
}

/// Solves A x = b; returns a solution with free variables set to zero, or
/// nullopt if inconsistent.
template <class F>
std::optional<std::vector<F>> exact_solve(const ExactMat<F>& a,
                                          const std::vector<F>& b) {
  ExactMat<F> m(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
    m.at(i, a.cols) = b[std::size_t(i)];
  }
  auto pivots = row_reduce(m, a.cols);
  for (int i = int(pivots.size()); i < a.rows; ++i)
    if (!detail::field_zero(m.at(i, a.cols))) return std::nullopt;
  std::vector<F> x(std::size_t(a.cols), F(0));
  for (int i = 0; i < int(pivots.size()); ++i) x[std::size_t(pivots[i])] = m.at(i, a.cols);
  return x;
}

/// Basis of the kernel of A.
template <class F>
std::vector<std::vector<F>> exact_nullspace(const ExactMat<F>& a) {
  ExactMat<F> m = a;
  auto pivots = row_reduce(m, a.cols);
  std::vector<bool> is_pivot(std::size_t(a.cols), false);
  for (int c : pivots) is_pivot[std::size_t(c)] = true;
  std::vector<std::vector<F>> out;
  for (int free = 0; free < a.cols; ++free) {
    if (is_pivot[std::size_t(free)]) continue;
    std::vector<F> v(std::size_t(a.cols), F(0));
    v[std::size_t(free)] = F(1);
    for (int i = 0; i < int(pivots.size()); ++i)
      v[std::size_t(pivots[i])] = F(0) - m.at(i, free);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace g2cal
