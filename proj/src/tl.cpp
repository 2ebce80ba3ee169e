#include "skein/tl.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "skein/errors.hpp"

namespace skein {

PlanarMatching::PlanarMatching(int bottom, int top, std::vector<int> partner)
    : bottom_(bottom), top_(top), partner_(std::move(partner)) {
  const int n = bottom + top;
  if (bottom < 0 || top < 0 || static_cast<int>(partner_.size()) != n)
    throw InvalidInput("planar matching: partner array has wrong size");
  for (int p = 0; p < n; ++p) {
    const int q = partner_[static_cast<std::size_t>(p)];
    if (q < 0 || q >= n || q == p || partner_[static_cast<std::size_t>(q)] != p)
      throw InvalidInput("planar matching: partner array is not a perfect matching");
  }
  std::vector<int> open;
  for (int pos = 0; pos < n; ++pos) {
    const int other = circular_position(partner_[static_cast<std::size_t>(point_at_circular_position(pos))]);
    if (other > pos) {
      open.push_back(pos);
    } else {
      if (open.empty() || open.back() != other) throw InvalidInput("planar matching: pairing crosses itself");
      open.pop_back();
    }
  }
}

PlanarMatching PlanarMatching::identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    p[static_cast<std::size_t>(i)] = n + i;
    p[static_cast<std::size_t>(n + i)] = i;
  }
  return PlanarMatching(n, n, std::move(p));
}

PlanarMatching PlanarMatching::cup_cap(int n, int i) {
  if (i < 0 || i + 1 >= n) throw InvalidInput("cup_cap: generator index out of range");
  PlanarMatching m = identity(n);
  auto& p = m.partner_;
  const auto b = static_cast<std::size_t>(i);
  const auto t = static_cast<std::size_t>(n + i);
  p[b] = i + 1;
  p[b + 1] = i;
  p[t] = n + i + 1;
  p[t + 1] = n + i;
  return m;
}

std::vector<std::pair<int, int>> PlanarMatching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < size(); ++p)
    if (partner(p) > p) out.emplace_back(p, partner(p));
  return out;
}

int PlanarMatching::circular_position(int point) const {
  return point < bottom_ ? point : bottom_ + (top_ - 1 - (point - bottom_));
}

int PlanarMatching::point_at_circular_position(int pos) const {
  return pos < bottom_ ? pos : bottom_ + (top_ - 1 - (pos - bottom_));
}

std::string PlanarMatching::to_string() const {
  auto label = [this](int p) {
    return p < bottom_ ? "b" + std::to_string(p) : "t" + std::to_string(p - bottom_);
  };
  std::string s = "[";
  bool first = true;
  for (auto [a, b] : pairs()) {
    if (!first) s += " ";
    first = false;
    s += label(a) + "-" + label(b);
  }
  return s + "]";
}

PlanarMatching matching_from_circular_pairs(int bottom, int top,
                                            const std::vector<std::pair<int, int>>& circular_pairs) {
  const int n = bottom + top;
  auto point = [&](int pos) { return pos < bottom ? pos : bottom + (top - 1 - (pos - bottom)); };
  std::vector<int> partner(static_cast<std::size_t>(n), -1);
  for (auto [a, b] : circular_pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidInput("circular pair out of range");
    partner[static_cast<std::size_t>(point(a))] = point(b);
    partner[static_cast<std::size_t>(point(b))] = point(a);
  }
  return PlanarMatching(bottom, top, std::move(partner));
}

namespace {

void enumerate_noncrossing(int lo, int hi, std::vector<std::pair<int, int>>& current,
                           const std::function<void()>& emit) {
  if (lo >= hi) {
    emit();
    return;
  }
  for (int k = lo + 1; k < hi; k += 2) {
    current.emplace_back(lo, k);
    enumerate_noncrossing(lo + 1, k, current, [&] { enumerate_noncrossing(k + 1, hi, current, emit); });
    current.pop_back();
  }
}

}  // namespace

std::vector<PlanarMatching> tl_basis(int bottom, int top) {
  std::vector<PlanarMatching> out;
  if (bottom < 0 || top < 0 || (bottom + top) % 2 != 0) return out;
  std::vector<std::pair<int, int>> current;
  enumerate_noncrossing(0, bottom + top, current,
                        [&] { out.push_back(matching_from_circular_pairs(bottom, top, current)); });
  std::sort(out.begin(), out.end());
  return out;
}

StackedMatching stack_matchings(const PlanarMatching& lower, const PlanarMatching& upper) {
  const int m = lower.bottom();
  const int n = lower.top();
  const int p = upper.top();
  if (upper.bottom() != n) throw InvalidInput("stack: boundary counts do not agree");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> partner(static_cast<std::size_t>(m + p), -1);

  // Follows a strand entering at (side, point) until it exits the stack.
  auto walk = [&](bool on_lower, int point) {
    for (;;) {
      if (on_lower) {
        const int q = lower.partner(point);
        if (q < m) return q;
        seen[static_cast<std::size_t>(q - m)] = true;
        on_lower = false;
        point = q - m;
      } else {
        const int r = upper.partner(point);
        if (r >= n) return m + (r - n);
        seen[static_cast<std::size_t>(r)] = true;
        on_lower = true;
        point = m + r;
      }
    }
  };
  for (int i = 0; i < m; ++i)
    if (partner[static_cast<std::size_t>(i)] < 0) {
      const int j = walk(true, i);
      partner[static_cast<std::size_t>(i)] = j;
      partner[static_cast<std::size_t>(j)] = i;
    }
  for (int k = 0; k < p; ++k)
    if (partner[static_cast<std::size_t>(m + k)] < 0) {
      const int j = walk(false, n + k);
      partner[static_cast<std::size_t>(m + k)] = j;
      partner[static_cast<std::size_t>(j)] = m + k;
    }
  int loops = 0;
  for (int j = 0; j < n; ++j) {
    if (seen[static_cast<std::size_t>(j)]) continue;
    ++loops;
    int cur = j;
    do {
      seen[static_cast<std::size_t>(cur)] = true;
      const int q = lower.partner(m + cur) - m;
      seen[static_cast<std::size_t>(q)] = true;
      cur = upper.partner(q);
    } while (cur != j);
  }
  return {PlanarMatching(m, p, std::move(partner)), loops};
}

PlanarMatching juxtapose(const PlanarMatching& left, const PlanarMatching& right) {
  const int m1 = left.bottom(), n1 = left.top();
  const int m2 = right.bottom(), n2 = right.top();
  const int m = m1 + m2;
  auto map_left = [&](int pt) { return pt < m1 ? pt : m + (pt - m1); };
  auto map_right = [&](int pt) { return pt < m2 ? m1 + pt : m + n1 + (pt - m2); };
  std::vector<int> partner(static_cast<std::size_t>(m + n1 + n2));
  for (int pt = 0; pt < left.size(); ++pt)
    partner[static_cast<std::size_t>(map_left(pt))] = map_left(left.partner(pt));
  for (int pt = 0; pt < right.size(); ++pt)
    partner[static_cast<std::size_t>(map_right(pt))] = map_right(right.partner(pt));
  return PlanarMatching(m, n1 + n2, std::move(partner));
}

int closure_loops(const PlanarMatching& f) {
  const int n = f.bottom();
  if (f.top() != n) throw InvalidInput("closure of a non-square matching");
  std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
  int loops = 0;
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++loops;
    int cur = start;
    do {
      seen[static_cast<std::size_t>(cur)] = true;
      const int other = f.partner(cur);
      seen[static_cast<std::size_t>(other)] = true;
      cur = other < n ? other + n : other - n;  // around the closing arc
    } while (cur != start);
  }
  return loops;
}

const LaurentPoly& loop_value_poly() {
  static const LaurentPoly delta = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  return delta;
}

RatFunc loop_value() { return RatFunc(loop_value_poly()); }

RatFunc quantum_integer(int k) {
  const LaurentPoly num = LaurentPoly::monomial(1, 2 * k) - LaurentPoly::monomial(1, -2 * k);
  const LaurentPoly den = LaurentPoly::monomial(1, 2) - LaurentPoly::monomial(1, -2);
  return RatFunc(num, den);
}

namespace {

const LaurentPoly& loop_power(int k) {
  static const std::vector<LaurentPoly> powers = [] {
    std::vector<LaurentPoly> v{LaurentPoly(1)};
    for (int i = 1; i <= 64; ++i) v.push_back(v.back() * loop_value_poly());
    return v;
  }();
  if (k < 0 || k >= static_cast<int>(powers.size())) throw Unsupported("too many loops in one composition");
  return powers[static_cast<std::size_t>(k)];
}

}  // namespace

TlElement TlElement::from_matching(const PlanarMatching& m, const RatFunc& c) {
  TlElement x(m.bottom(), m.top());
  x.add_term(m, c);
  return x;
}

RatFunc TlElement::coefficient(const PlanarMatching& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RatFunc() : it->second;
}

std::vector<RatFunc> TlElement::coordinates() const {
  std::vector<RatFunc> out;
  for (const auto& m : tl_basis(bottom_, top_)) out.push_back(coefficient(m));
  return out;
}

void TlElement::add_term(const PlanarMatching& m, const RatFunc& c) {
  if (m.bottom() != bottom_ || m.top() != top_) throw InvalidInput("TL term has the wrong boundary");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TlElement& TlElement::operator+=(const TlElement& o) {
  if (o.bottom_ != bottom_ || o.top_ != top_) throw InvalidInput("TL sum of different boundaries");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TlElement& TlElement::operator-=(const TlElement& o) { return *this += RatFunc(-1) * o; }

TlElement operator*(const RatFunc& c, const TlElement& x) {
  TlElement out(x.bottom_, x.top_);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : x.terms_) out.terms_.emplace(m, c * v);
  return out;
}

TlElement compose(const TlElement& lower, const TlElement& upper) {
  if (lower.top() != upper.bottom()) throw InvalidInput("compose: middle boundary counts disagree");
  std::map<PlanarMatching, RatFuncAccumulator> acc;
  for (const auto& [f, a] : lower.terms())
    for (const auto& [g, b] : upper.terms()) {
      StackedMatching s = stack_matchings(f, g);
      acc[s.result].add_product(a, b, loop_power(s.loops));
    }
  TlElement out(lower.bottom(), upper.top());
  for (const auto& [m, sum] : acc) out.add_term(m, sum.total());
  return out;
}

TlElement tensor(const TlElement& left, const TlElement& right) {
  TlElement out(left.bottom() + right.bottom(), left.top() + right.top());
  for (const auto& [f, a] : left.terms())
    for (const auto& [g, b] : right.terms()) out.add_term(juxtapose(f, g), a * b);
  return out;
}

RatFunc closure(const TlElement& f) {
  if (f.bottom() != f.top()) throw InvalidInput("closure of a non-square TL element");
  RatFuncAccumulator acc;
  for (const auto& [m, c] : f.terms()) acc.add_product(c, RatFunc(1), loop_power(closure_loops(m)));
  return acc.total();
}

TlElement jones_wenzl(int n) {
  if (n < 0) throw InvalidInput("jones_wenzl: negative strand count");
  TlElement p = TlElement::identity(0);
  if (n == 0) return p;
  p = TlElement::identity(1);
  // trace(P_k) = (-1)^k [k+1]
  auto trace = [](int k) { return (k % 2 == 0 ? RatFunc(1) : RatFunc(-1)) * quantum_integer(k + 1); };
  for (int k = 2; k <= n; ++k) {
    const TlElement q = tensor(p, TlElement::identity(1));
    const TlElement qeq = compose(compose(q, TlElement::generator(k, k - 2)), q);
    p = q - (trace(k - 2) / trace(k - 1)) * qeq;
  }
  return p;
}

std::string to_string(const TlElement& x) {
  std::ostringstream os;
  os << "TL(" << x.bottom() << "," << x.top() << "):";
  if (x.is_zero()) {
    os << " 0";
    return os.str();
  }
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    os << (first ? " " : "\n  + ") << "(" << c.to_string() << ") " << m.to_string();
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TlElement& x) { return os << to_string(x); }

}  // namespace skein
