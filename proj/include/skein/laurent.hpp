#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skein {

using Integer = mpz_class;
using Rational = mpq_class;

/// Finitely supported Laurent polynomial in one variable with rational
/// coefficients. Stored densely from the lowest nonzero exponent; the zero
/// polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Rational& c, int exponent);
  static LaurentPoly from_coefficients(int low, std::vector<Rational> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
  bool is_monomial() const { return coeffs_.size() == 1; }

  // The degree accessors require a nonzero polynomial.
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading_coefficient() const { return coeffs_.back(); }
  const Rational& trailing_coefficient() const { return coeffs_.front(); }
  Rational coefficient(int exponent) const;
  std::size_t term_count() const;

  LaurentPoly shifted(int k) const;  // multiplied by x^k
  LaurentPoly scaled(const Rational& c) const;
  /// Substitutes x -> x^k (k may be negative).
  LaurentPoly substituted_power(int k) const;
  Rational evaluate(const Rational& x) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a) { return a.scaled(-1); }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly pow(unsigned e) const;

  /// Human-readable form, highest exponent first, e.g. "-A^2 - A^-2".
  std::string to_string(std::string_view var = "A") const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

/// Euclidean division of ordinary polynomials (both arguments must have
/// lowest exponent >= 0, divisor nonzero).
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);

/// Monic gcd of the polynomial parts, ignoring powers of the variable.
/// gcd(0, 0) is 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient; throws std::domain_error if b does not divide a.
LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace skein
