#include "skein/intmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace skein {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  std::vector<Integer> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += factor * (*this)(r, source);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<Integer> out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

IntMatrix SnfDecomposition::diagonal(std::size_t rows, std::size_t cols) const {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) d(i, i) = invariant_factors[i];
  return d;
}

Integer mod_floor(const Integer& a, const Integer& n) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Smallest nonzero |entry| in the block [t.., t..]; row-major tie-break.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t r = t; r < d.rows(); ++r)
    for (std::size_t c = t; c < d.cols(); ++c) {
      const Integer& x = d(r, c);
      if (x == 0) continue;
      Integer ax = abs(x);
      if (!found || ax < best) {
        found = true;
        best = ax;
        pr = r;
        pc = c;
      }
    }
  return found;
}

}  // namespace

SnfDecomposition snf(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix left = IntMatrix::identity(m.rows());
  IntMatrix right = IntMatrix::identity(m.cols());
  std::vector<Integer> factors;

  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(d, t, pr, pc)) break;
    d.swap_rows(t, pr);
    left.swap_rows(t, pr);
    d.swap_cols(t, pc);
    right.swap_cols(t, pc);

    for (;;) {
      bool dirty = false;
      // Clear column t below the pivot.
      for (std::size_t r = t + 1; r < d.rows(); ++r) {
        if (d(r, t) == 0) continue;
        const Integer q = floor_div(d(r, t), d(t, t));
        d.add_row_multiple(r, t, -q);
        left.add_row_multiple(r, t, -q);
        if (d(r, t) != 0) dirty = true;
      }
      // Clear row t right of the pivot.
      for (std::size_t c = t + 1; c < d.cols(); ++c) {
        if (d(t, c) == 0) continue;
        const Integer q = floor_div(d(t, c), d(t, t));
        d.add_col_multiple(c, t, -q);
        right.add_col_multiple(c, t, -q);
        if (d(t, c) != 0) dirty = true;
      }
      if (dirty) {
        // A smaller remainder appeared in row or column t; move it to the pivot.
        std::size_t br = t, bc = t;
        Integer best = abs(d(t, t));
        for (std::size_t r = t + 1; r < d.rows(); ++r)
          if (d(r, t) != 0 && abs(d(r, t)) < best) { best = abs(d(r, t)); br = r; bc = t; }
        for (std::size_t c = t + 1; c < d.cols(); ++c)
          if (d(t, c) != 0 && abs(d(t, c)) < best) { best = abs(d(t, c)); br = t; bc = c; }
        d.swap_rows(t, br);
        left.swap_rows(t, br);
        d.swap_cols(t, bc);
        right.swap_cols(t, bc);
        continue;
      }
      // Divisibility: the pivot must divide every remaining entry.
      bool fixed = false;
      for (std::size_t r = t + 1; r < d.rows() && !fixed; ++r)
        for (std::size_t c = t + 1; c < d.cols(); ++c)
          if (mod_floor(d(r, c), d(t, t)) != 0) {
            d.add_row_multiple(t, r, 1);
            left.add_row_multiple(t, r, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      left.negate_row(t);
    }
    factors.push_back(d(t, t));
  }
  return {std::move(factors), std::move(left), std::move(right)};
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& m, const std::vector<Integer>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_integer: rhs size mismatch");
  const SnfDecomposition s = snf(m);
  const std::vector<Integer> lb = s.left * b;
  std::vector<Integer> y(m.cols());
  for (std::size_t i = 0; i < lb.size(); ++i) {
    if (i < s.rank()) {
      if (mod_floor(lb[i], s.invariant_factors[i]) != 0) return std::nullopt;
      y[i] = lb[i] / s.invariant_factors[i];
    } else if (lb[i] != 0) {
      return std::nullopt;
    }
  }
  return s.right * y;
}

std::vector<Integer> invariant_factors_of(const std::vector<Integer>& orders) {
  IntMatrix d(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) d(i, i) = orders[i];
  std::vector<Integer> out;
  for (const auto& f : snf(d).invariant_factors)
    if (f > 1) out.push_back(f);
  return out;
}

}  // namespace skein
