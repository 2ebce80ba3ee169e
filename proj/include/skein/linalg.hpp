#pragma once

#include <map>
#include <optional>
#include <vector>

#include "skein/ratfunc.hpp"

namespace skein {

template <class F>
using Matrix = std::vector<std::vector<F>>;

inline bool is_zero(const Rational& x) { return x == 0; }

/// Reduced row echelon form over a field F (Rational or RatFunc).
template <class F>
struct RowEchelon {
  Matrix<F> rref;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

template <class F>
RowEchelon<F> row_reduce(Matrix<F> m, std::size_t cols) {
  RowEchelon<F> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && is_zero(m[pivot][col])) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const F inv = F(1) / m[row][col];
    for (std::size_t c = col; c < cols; ++c)
      if (!is_zero(m[row][c])) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || is_zero(m[r][col])) continue;
      const F factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c)
        if (!is_zero(m[row][c])) m[r][c] -= factor * m[row][c];
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.rref = std::move(m);
  return out;
}

template <class F>
struct KernelResult {
  std::size_t rank = 0;
  std::vector<std::vector<F>> kernel_basis;
};

/// Rank and a kernel basis (one vector per free column) of an r x cols matrix.
template <class F>
KernelResult<F> kernel_and_rank(const Matrix<F>& m, std::size_t cols) {
  const RowEchelon<F> e = row_reduce(m, cols);
  KernelResult<F> out;
  out.rank = e.rank();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, F(0));
    v[free] = F(1);
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) v[e.pivot_columns[i]] = -e.rref[i][free];
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

/// A solution of m * x = b, or nullopt when the system is inconsistent.
template <class F>
std::optional<std::vector<F>> solve_linear(const Matrix<F>& m, const std::vector<F>& b, std::size_t cols) {
  Matrix<F> aug = m;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  const RowEchelon<F> e = row_reduce(aug, cols + 1);
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == cols) return std::nullopt;
  std::vector<F> x(cols, F(0));
  for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) x[e.pivot_columns[i]] = e.rref[i][cols];
  return x;
}

KernelResult<RatFunc> kernel_and_rank_over_ratfunc(const Matrix<RatFunc>& m);

/// Incremental rank of sparse rows over Q(A); rows are column -> coefficient.
class SparseRank {
 public:
  using Row = std::map<std::size_t, RatFunc>;
  /// Returns true when the row increased the rank.
  bool insert(Row row);
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, Row> pivots_;  // keyed by leading column, leading coefficient 1
};

}  // namespace skein
