#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

/// Element of Q(A). Canonical form: numerator and denominator coprime, the
/// denominator is an ordinary monic polynomial with nonzero constant term.
/// Equal values therefore have identical representations.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when den is zero.
  RatFunc(LaurentPoly num, LaurentPoly den);

  /// The variable A.
  static RatFunc A() { return A_power(1); }
  static RatFunc A_power(int k) { return RatFunc(LaurentPoly::monomial(1, k)); }

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_constant(); }

  RatFunc inverse() const;
  RatFunc pow(int e) const;
  /// Substitutes A -> A^k.
  RatFunc substituted_power(int k) const;

  /// Value at A = a; nullopt at a pole.
  std::optional<Rational> evaluate(const Rational& a) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string(std::string_view var = "A") const;
  /// Rewrites in q = A^2 when only even powers of A occur.
  std::optional<std::string> to_string_in_q(std::string_view var = "q") const;

 private:
  struct Raw {};
  RatFunc(LaurentPoly num, LaurentPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  /// Moves powers of A from den into num and makes den monic.
  void fix_denominator();

  LaurentPoly num_;
  LaurentPoly den_;
};

inline bool is_zero(const RatFunc& x) { return x.is_zero(); }

/// Sums many products of RatFuncs without normalizing each partial sum.
/// Terms are grouped by denominator and combined once in total().
class RatFuncAccumulator {
 public:
  void add(const RatFunc& x);
  void add_product(const RatFunc& x, const RatFunc& y, const LaurentPoly& factor);
  RatFunc total() const;
  bool empty() const { return groups_.empty(); }

 private:
  void add_raw(LaurentPoly num, const LaurentPoly& den);
  std::vector<std::pair<LaurentPoly, LaurentPoly>> groups_;  // (denominator, numerator)
};

}  // namespace skein
