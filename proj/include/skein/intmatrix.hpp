#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  IntMatrix transposed() const;
  std::vector<Integer> column(std::size_t c) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// left * original * right == diag(invariant_factors, 0, ...), with
/// unimodular transforms and each factor dividing the next.
struct SnfDecomposition {
  std::vector<Integer> invariant_factors;
  IntMatrix left;
  IntMatrix right;

  std::size_t rank() const { return invariant_factors.size(); }
  IntMatrix diagonal(std::size_t rows, std::size_t cols) const;
};

/// Smith normal form. Pivot: smallest nonzero absolute value in the active
/// block, ties broken by row-major order.
SnfDecomposition snf(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

/// Some integer solution of m * x = b, or nullopt if none exists.
std::optional<std::vector<Integer>> solve_integer(const IntMatrix& m, const std::vector<Integer>& b);

/// Canonical invariant factors (each > 1, dividing the next) of the finite
/// abelian group Z/orders[0] + Z/orders[1] + ...; entries <= 1 are dropped.
std::vector<Integer> invariant_factors_of(const std::vector<Integer>& orders);

/// Nonnegative residue.
Integer mod_floor(const Integer& a, const Integer& n);

}  // namespace skein
