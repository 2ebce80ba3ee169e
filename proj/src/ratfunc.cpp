#include "skein/ratfunc.hpp"

#include <sstream>

#include "skein/errors.hpp"

namespace skein {

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void RatFunc::fix_denominator() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const int shift = den_.low_degree();
  const Rational lead = den_.leading_coefficient();
  if (shift != 0) {
    den_ = den_.shifted(-shift);
    num_ = num_.shifted(-shift);
  }
  if (lead != 1) {
    den_ = den_.scaled(1 / lead);
    num_ = num_.scaled(1 / lead);
  }
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (!den_.is_monomial()) {
    LaurentPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  fix_denominator();
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  RatFunc r(den_, num_, Raw{});
  r.fix_denominator();
  return r;
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Raw{});
}

RatFunc RatFunc::substituted_power(int k) const {
  return RatFunc(num_.substituted_power(k), den_.substituted_power(k));
}

std::optional<Rational> RatFunc::evaluate(const Rational& a) const {
  const Rational d = den_.evaluate(a);
  if (d == 0) return std::nullopt;
  if (a == 0 && !num_.is_zero() && num_.low_degree() < 0) return std::nullopt;
  return num_.evaluate(a) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) {
      normalize();
    } else if (num_.is_zero()) {
      den_ = LaurentPoly(1);
    }
    return *this;
  }
  // Henrici: with g = gcd(b, d), the sum a/b + c/d only needs reduction by g.
  const LaurentPoly g = gcd(den_, o.den_);
  const LaurentPoly b_g = exact_quotient(den_, g);
  const LaurentPoly d_g = exact_quotient(o.den_, g);
  LaurentPoly num = num_ * d_g + o.num_ * b_g;
  LaurentPoly den = den_ * d_g;
  if (!g.is_constant() && !num.is_zero()) {
    const LaurentPoly h = gcd(num, g);
    if (!h.is_constant()) {
      num = exact_quotient(num, h);
      den = exact_quotient(den, h);
    }
  }
  num_ = std::move(num);
  den_ = std::move(den);
  fix_denominator();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  LaurentPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_constant()) {
    const LaurentPoly g1 = gcd(a, d);
    if (!g1.is_constant()) {
      a = exact_quotient(a, g1);
      d = exact_quotient(d, g1);
    }
  }
  if (!b.is_constant()) {
    const LaurentPoly g2 = gcd(c, b);
    if (!g2.is_constant()) {
      c = exact_quotient(c, g2);
      b = exact_quotient(b, g2);
    }
  }
  num_ = a * c;
  den_ = b * d;
  fix_denominator();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, RatFunc::Raw{}); }

std::string RatFunc::to_string(std::string_view var) const {
  if (den_ == LaurentPoly(1)) return num_.to_string(var);
  std::ostringstream os;
  os << "(" << num_.to_string(var) << ")/(" << den_.to_string(var) << ")";
  return os.str();
}

namespace {

std::optional<LaurentPoly> halve_exponents(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly out;
  for (int e = p.low_degree(); e <= p.high_degree(); ++e) {
    const Rational c = p.coefficient(e);
    if (c == 0) continue;
    if (e % 2 != 0) return std::nullopt;
    out += LaurentPoly::monomial(c, e / 2);
  }
  return out;
}

}  // namespace

std::optional<std::string> RatFunc::to_string_in_q(std::string_view var) const {
  auto n = halve_exponents(num_);
  auto d = halve_exponents(den_);
  if (!n || !d) return std::nullopt;
  if (*d == LaurentPoly(1)) return n->to_string(var);
  return "(" + n->to_string(var) + ")/(" + d->to_string(var) + ")";
}

void RatFuncAccumulator::add_raw(LaurentPoly num, const LaurentPoly& den) {
  if (num.is_zero()) return;
  for (auto& [d, n] : groups_) {
    if (d == den) {
      n += num;
      return;
    }
  }
  groups_.emplace_back(den, std::move(num));
}

void RatFuncAccumulator::add(const RatFunc& x) { add_raw(x.numerator(), x.denominator()); }

void RatFuncAccumulator::add_product(const RatFunc& x, const RatFunc& y, const LaurentPoly& factor) {
  // Both denominators are monic with constant term, so is their product.
  add_raw(x.numerator() * y.numerator() * factor, x.denominator() * y.denominator());
}

RatFunc RatFuncAccumulator::total() const {
  RatFunc sum;
  for (const auto& [d, n] : groups_) {
    if (!n.is_zero()) sum += RatFunc(n, d);
  }
  return sum;
}

}  // namespace skein
