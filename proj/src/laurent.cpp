#include "skein/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skein {

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(int low, std::vector<Rational> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

Rational LaurentPoly::coefficient(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  LaurentPoly p = *this;
  for (auto& x : p.coeffs_) x *= c;
  return p;
}

LaurentPoly LaurentPoly::substituted_power(int k) const {
  if (is_zero()) return {};
  if (k == 0) {
    Rational s = 0;
    for (const auto& c : coeffs_) s += c;
    return LaurentPoly(s);
  }
  LaurentPoly out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out += monomial(coeffs_[i], (low_ + static_cast<int>(i)) * k);
  }
  return out;
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  if (is_zero()) return 0;
  if (x == 0) {
    if (low_ < 0) throw std::domain_error("Laurent polynomial has a pole at 0");
    return low_ == 0 ? coeffs_.front() : Rational(0);
  }
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  Rational scale = 1;
  const Rational base = low_ >= 0 ? x : Rational(1 / x);
  for (int i = 0; i < std::abs(low_); ++i) scale *= base;
  return acc * scale;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high_degree(), o.high_degree());
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<std::size_t>(low_ - lo)] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i + static_cast<std::size_t>(o.low_ - lo)] += o.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly::from_coefficients(a.low_ + b.low_, std::move(out));
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::string LaurentPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = high_degree(); e >= low_; --e) {
    Rational c = coefficient(e);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = c == 1;
    if (!unit || e == 0) os << c.get_str();
    if (e != 0) {
      if (!unit) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if ((!a.is_zero() && a.low_degree() < 0) || b.low_degree() < 0)
    throw std::domain_error("divmod requires ordinary polynomials");
  LaurentPoly quotient;
  LaurentPoly remainder = a;
  const int db = b.high_degree();
  const Rational lead = b.leading_coefficient();
  while (!remainder.is_zero() && remainder.high_degree() >= db) {
    const int shift = remainder.high_degree() - db;
    const Rational c = remainder.leading_coefficient() / lead;
    const LaurentPoly term = LaurentPoly::monomial(c, shift);
    quotient += term;
    remainder -= term * b;
  }
  return {quotient, remainder};
}

namespace {

LaurentPoly polynomial_part(const LaurentPoly& p) {
  return p.is_zero() ? p : p.shifted(-p.low_degree());
}

LaurentPoly monic(const LaurentPoly& p) {
  return p.is_zero() ? p : p.scaled(1 / p.leading_coefficient());
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = polynomial_part(a);
  LaurentPoly y = polynomial_part(b);
  if (x.is_zero()) return monic(y);
  if (y.is_zero()) return monic(x);
  if (x.high_degree() < y.high_degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.high_degree() == 0) return LaurentPoly(1);
    LaurentPoly r = polynomial_part(divmod(x, y).second);
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_quotient by zero");
  if (a.is_zero()) return {};
  if (b.is_monomial()) return a.shifted(-b.low_degree()).scaled(1 / b.trailing_coefficient());
  auto [q, r] = divmod(polynomial_part(a), polynomial_part(b));
  if (!r.is_zero()) throw std::domain_error("exact_quotient: not divisible");
  return q.shifted(a.low_degree() - b.low_degree());
}

}  // namespace skein
