#include "skein/bracket.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "skein/errors.hpp"

namespace skein {

namespace {

constexpr int kMaxStateSumCrossings = 24;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// Arc identifiers mapped to 0..n-1.
struct ArcIndex {
  std::vector<int> ids;
  std::map<int, std::size_t> index;

  explicit ArcIndex(const TangleDiagram& t) {
    ids = t.arc_ids();
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;
  }
  std::size_t operator[](int id) const { return index.at(id); }
};

std::map<int, int> occurrence_counts(const TangleDiagram& t) {
  std::map<int, int> count;
  for (const auto& c : t.crossings)
    for (int a : c.arcs) ++count[a];
  for (int a : t.bottom) ++count[a];
  for (int a : t.top) ++count[a];
  for (int a : t.free_loops) count[a] += 2;
  return count;
}

int next_free_id(const TangleDiagram& t) {
  const auto ids = t.arc_ids();
  return ids.empty() ? 1 : ids.back() + 1;
}

// Rebuilds a diagram after identifying arcs pairwise. Components that end up
// with no crossing and no boundary occurrence become free loops.
TangleDiagram glue(const std::vector<Crossing>& crossings, const std::vector<int>& bottom,
                   const std::vector<int>& top, const std::vector<int>& all_arcs,
                   const std::vector<std::pair<int, int>>& joins) {
  std::map<int, std::size_t> idx;
  for (int a : all_arcs) idx.emplace(a, idx.size());
  UnionFind uf(idx.size());
  for (auto [a, b] : joins) uf.unite(idx.at(a), idx.at(b));
  std::vector<int> rep_id(idx.size());
  for (const auto& [id, i] : idx) rep_id[i] = id;
  auto rename = [&](int a) { return rep_id[uf.find(idx.at(a))]; };

  TangleDiagram out;
  std::set<int> used;
  for (const auto& c : crossings) {
    Crossing d = c;
    for (int& a : d.arcs) used.insert(a = rename(a));
    out.crossings.push_back(d);
  }
  for (int a : bottom) used.insert(out.bottom.emplace_back(rename(a)));
  for (int a : top) used.insert(out.top.emplace_back(rename(a)));
  std::set<int> loops;
  for (int a : all_arcs)
    if (const int r = rename(a); !used.count(r)) loops.insert(r);
  out.free_loops.assign(loops.begin(), loops.end());
  return out;
}

TangleDiagram shifted(const TangleDiagram& t, int offset) {
  TangleDiagram out = t;
  for (auto& c : out.crossings)
    for (int& a : c.arcs) a += offset;
  for (int& a : out.bottom) a += offset;
  for (int& a : out.top) a += offset;
  for (int& a : out.free_loops) a += offset;
  return out;
}

// Per matching, per character exponent, the Laurent weight of all states.
using StateSum = std::map<PlanarMatching, std::map<int, LaurentPoly>>;

StateSum state_sum(const TangleDiagram& t, const std::vector<int>* arc_weight) {
  validate(t);
  const int n_cross = static_cast<int>(t.crossings.size());
  if (n_cross > kMaxStateSumCrossings)
    throw Unsupported("state sum limited to " + std::to_string(kMaxStateSumCrossings) + " crossings");

  ArcIndex idx(t);
  const std::size_t n_arcs = idx.ids.size();
  const int m = static_cast<int>(t.bottom.size());
  const int n_points = m + static_cast<int>(t.top.size());
  std::vector<std::vector<int>> boundary_points(n_arcs);
  for (int i = 0; i < m; ++i) boundary_points[idx[t.bottom[static_cast<std::size_t>(i)]]].push_back(i);
  for (std::size_t j = 0; j < t.top.size(); ++j) boundary_points[idx[t.top[j]]].push_back(m + static_cast<int>(j));

  std::vector<std::array<std::size_t, 4>> cross;
  for (const auto& c : t.crossings) {
    const auto a = c.normalized();
    cross.push_back({idx[a[0]], idx[a[1]], idx[a[2]], idx[a[3]]});
  }

  // counts[partner][(a-exponent, loops, character exponent)]
  std::map<std::vector<int>, std::map<std::tuple<int, int, int>, long>> counts;
  const unsigned long n_states = 1UL << n_cross;
  for (unsigned long state = 0; state < n_states; ++state) {
    UnionFind uf(n_arcs);
    int a_exp = 0;
    for (int k = 0; k < n_cross; ++k) {
      const auto& x = cross[static_cast<std::size_t>(k)];
      if ((state >> k) & 1UL) {
        uf.unite(x[0], x[3]);
        uf.unite(x[1], x[2]);
        --a_exp;
      } else {
        uf.unite(x[0], x[1]);
        uf.unite(x[2], x[3]);
        ++a_exp;
      }
    }
    std::map<std::size_t, std::vector<int>> ends;
    std::map<std::size_t, int> weight;
    for (std::size_t i = 0; i < n_arcs; ++i) {
      const std::size_t r = uf.find(i);
      auto& e = ends[r];
      e.insert(e.end(), boundary_points[i].begin(), boundary_points[i].end());
      if (arc_weight) weight[r] += (*arc_weight)[i];
    }
    std::vector<int> partner(static_cast<std::size_t>(n_points), -1);
    int loops = 0;
    int chi_exp = 0;
    for (const auto& [r, e] : ends) {
      if (e.empty()) {
        ++loops;
      } else if (e.size() == 2) {
        partner[static_cast<std::size_t>(e[0])] = e[1];
        partner[static_cast<std::size_t>(e[1])] = e[0];
      } else {
        throw InvalidInput("diagram component meets the boundary an odd number of times");
      }
      if (arc_weight) chi_exp += weight[r];
    }
    ++counts[partner][{a_exp, loops, chi_exp}];
  }

  std::vector<LaurentPoly> delta_pow{LaurentPoly(1)};
  StateSum out;
  for (const auto& [partner, terms] : counts) {
    PlanarMatching pm(m, n_points - m, partner);
    auto& slot = out[pm];
    for (const auto& [key, count] : terms) {
      const auto [a_exp, loops, chi_exp] = key;
      while (static_cast<int>(delta_pow.size()) <= loops) delta_pow.push_back(delta_pow.back() * loop_value_poly());
      LaurentPoly term = delta_pow[static_cast<std::size_t>(loops)].shifted(a_exp).scaled(Rational(count));
      slot[chi_exp] += term;
    }
  }
  return out;
}

void require_closed(const TangleDiagram& t) {
  if (!t.is_closed()) throw InvalidInput("bracket value needs a closed diagram");
}

}  // namespace

std::array<int, 4> Crossing::normalized() const {
  if (standard) return arcs;
  return {arcs[1], arcs[2], arcs[3], arcs[0]};
}

std::vector<int> TangleDiagram::arc_ids() const {
  std::set<int> s;
  for (const auto& c : crossings) s.insert(c.arcs.begin(), c.arcs.end());
  s.insert(bottom.begin(), bottom.end());
  s.insert(top.begin(), top.end());
  s.insert(free_loops.begin(), free_loops.end());
  return {s.begin(), s.end()};
}

void validate(const TangleDiagram& t) {
  for (const auto& [arc, n] : occurrence_counts(t))
    if (n != 2)
      throw InvalidInput("arc " + std::to_string(arc) + " occurs " + std::to_string(n) + " times; expected 2");
}

TangleDiagram parse_diagram(std::istream& in) {
  TangleDiagram t;
  std::string line;
  int lineno = 0;
  auto to_int = [&lineno](const std::string& tok) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::logic_error&) {
      throw InvalidInput("line " + std::to_string(lineno) + ": expected an arc number, got '" + tok + "'");
    }
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string s; ls >> s;) tok.push_back(s);
    if (tok.empty()) continue;
    const std::string& kind = tok[0];
    if (kind == "X") {
      if (tok.size() != 5 && tok.size() != 6)
        throw InvalidInput("line " + std::to_string(lineno) + ": crossing needs four arcs");
      Crossing c;
      for (std::size_t i = 0; i < 4; ++i) c.arcs[i] = to_int(tok[i + 1]);
      if (tok.size() == 6) {
        if (tok[5] == "-") {
          c.standard = false;
        } else if (tok[5] != "+") {
          throw InvalidInput("line " + std::to_string(lineno) + ": crossing flag must be + or -");
        }
      }
      t.crossings.push_back(c);
    } else if (kind == "B") {
      std::vector<int>* target = nullptr;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (tok[i] == "bottom:") {
          target = &t.bottom;
        } else if (tok[i] == "top:") {
          target = &t.top;
        } else if (target) {
          target->push_back(to_int(tok[i]));
        } else {
          throw InvalidInput("line " + std::to_string(lineno) + ": boundary arcs must follow bottom: or top:");
        }
      }
    } else if (kind == "O") {
      if (tok.size() != 2) throw InvalidInput("line " + std::to_string(lineno) + ": free loop takes one arc");
      t.free_loops.push_back(to_int(tok[1]));
    } else {
      throw InvalidInput("line " + std::to_string(lineno) + ": unknown record '" + kind + "'");
    }
  }
  validate(t);
  return t;
}

TangleDiagram parse_diagram(const std::string& text) {
  std::istringstream in(text);
  return parse_diagram(in);
}

std::string format_diagram(const TangleDiagram& t) {
  std::ostringstream os;
  for (const auto& c : t.crossings)
    os << "X " << c.arcs[0] << ' ' << c.arcs[1] << ' ' << c.arcs[2] << ' ' << c.arcs[3] << (c.standard ? "" : " -")
       << '\n';
  if (!t.is_closed()) {
    os << "B bottom:";
    for (int a : t.bottom) os << ' ' << a;
    os << " top:";
    for (int a : t.top) os << ' ' << a;
    os << '\n';
  }
  for (int a : t.free_loops) os << "O " << a << '\n';
  return os.str();
}

TangleDiagram stack(const TangleDiagram& lower, const TangleDiagram& upper) {
  validate(lower);
  validate(upper);
  if (lower.top.size() != upper.bottom.size()) throw InvalidInput("stack: boundary counts do not agree");
  const auto lower_ids = lower.arc_ids();
  const auto upper_ids = upper.arc_ids();
  const int lower_max = lower_ids.empty() ? 0 : lower_ids.back();
  const int off_upper = upper_ids.empty() ? 0 : lower_max + 1 - upper_ids.front();
  const TangleDiagram up = shifted(upper, off_upper);

  std::vector<Crossing> crossings = lower.crossings;
  crossings.insert(crossings.end(), up.crossings.begin(), up.crossings.end());
  std::vector<int> all = lower_ids;
  for (int a : upper_ids) all.push_back(a + off_upper);
  std::vector<std::pair<int, int>> joins;
  for (std::size_t i = 0; i < lower.top.size(); ++i) joins.emplace_back(lower.top[i], up.bottom[i]);
  return glue(crossings, lower.bottom, up.top, all, joins);
}

TangleDiagram trace_closure(const TangleDiagram& t) {
  validate(t);
  if (t.bottom.size() != t.top.size()) throw InvalidInput("trace closure needs equal boundary counts");
  std::vector<std::pair<int, int>> joins;
  for (std::size_t i = 0; i < t.top.size(); ++i) joins.emplace_back(t.top[i], t.bottom[i]);
  return glue(t.crossings, {}, {}, t.arc_ids(), joins);
}

TangleDiagram braid_tangle(int strands, const std::vector<int>& word) {
  if (strands < 1) throw InvalidInput("braid needs at least one strand");
  TangleDiagram t;
  std::vector<int> current(static_cast<std::size_t>(strands));
  int next = 1;
  for (int& a : current) a = next++;
  t.bottom = current;
  for (int g : word) {
    const int i = std::abs(g);
    if (g == 0 || i >= strands) throw InvalidInput("braid generator " + std::to_string(g) + " out of range");
    const auto l = static_cast<std::size_t>(i - 1);
    const int bl = current[l];
    const int br = current[l + 1];
    const int tl = next++;
    const int tr = next++;
    Crossing c;
    c.arcs = g > 0 ? std::array<int, 4>{tl, bl, br, tr} : std::array<int, 4>{bl, br, tr, tl};
    t.crossings.push_back(c);
    current[l] = tl;
    current[l + 1] = tr;
  }
  t.top = current;
  return t;
}

TangleDiagram braid_closure(int strands, const std::vector<int>& word) {
  return trace_closure(braid_tangle(strands, word));
}

TangleDiagram insert_kink(const TangleDiagram& t, int arc, bool positive) {
  validate(t);
  const auto counts = occurrence_counts(t);
  if (!counts.count(arc)) throw InvalidInput("kink on unknown arc " + std::to_string(arc));
  TangleDiagram out = t;
  const int k = next_free_id(t);
  const int x2 = k + 1;
  if (auto it = std::find(out.free_loops.begin(), out.free_loops.end(), arc); it != out.free_loops.end()) {
    out.free_loops.erase(it);
    Crossing c;
    c.arcs = positive ? std::array<int, 4>{k, k, arc, arc} : std::array<int, 4>{arc, k, k, arc};
    out.crossings.push_back(c);
    return out;
  }
  // Reroute the last occurrence of the arc through the curl.
  bool done = false;
  for (auto it = out.top.rbegin(); !done && it != out.top.rend(); ++it)
    if (*it == arc) *it = x2, done = true;
  for (auto it = out.bottom.rbegin(); !done && it != out.bottom.rend(); ++it)
    if (*it == arc) *it = x2, done = true;
  for (auto c = out.crossings.rbegin(); !done && c != out.crossings.rend(); ++c)
    for (auto a = c->arcs.rbegin(); !done && a != c->arcs.rend(); ++a)
      if (*a == arc) *a = x2, done = true;
  Crossing c;
  c.arcs = positive ? std::array<int, 4>{k, k, arc, x2} : std::array<int, 4>{arc, k, k, x2};
  out.crossings.push_back(c);
  return out;
}

CrossingExpansion derive_crossing_expansion(const RatFunc& alpha) {
  if (alpha.is_zero()) throw InvalidInput("crossing coefficient must be nonzero");
  // A crossing is alpha*id + beta*U and its mirror beta*id + alpha*U. Their
  // product must be the identity on two strands. Each product term is
  // recorded as alpha^i beta^j delta^loops using the composition engine.
  const PlanarMatching id = PlanarMatching::identity(2);
  const PlanarMatching u = PlanarMatching::cup_cap(2, 0);
  struct Term {
    int alpha_pow;
    int beta_pow;
    int loops;
  };
  std::map<PlanarMatching, std::vector<Term>> product;
  const std::vector<std::pair<PlanarMatching, bool>> crossing{{id, true}, {u, false}};
  const std::vector<std::pair<PlanarMatching, bool>> mirror{{id, false}, {u, true}};
  for (const auto& [x, x_alpha] : crossing) {
    for (const auto& [y, y_alpha] : mirror) {
      const auto st = stack_matchings(x, y);
      const int a = int(x_alpha) + int(y_alpha);
      product[st.result].push_back({a, 2 - a, st.loops});
    }
  }
  // Identity coefficient: must be 1 and is linear in beta.
  RatFunc id_coef_per_beta;
  for (const auto& t : product[id]) {
    if (t.beta_pow != 1 || t.loops != 0) throw Unsupported("identity coefficient is not linear in beta");
    id_coef_per_beta += alpha.pow(t.alpha_pow);
  }
  const RatFunc beta = RatFunc(1) / id_coef_per_beta;
  // Cup-cap coefficient: must vanish and is linear in delta.
  RatFunc constant;
  RatFunc linear;
  for (const auto& t : product[u]) {
    const RatFunc w = alpha.pow(t.alpha_pow) * beta.pow(t.beta_pow);
    if (t.loops == 0) {
      constant += w;
    } else if (t.loops == 1) {
      linear += w;
    } else {
      throw Unsupported("cup-cap coefficient is not linear in the loop value");
    }
  }
  return {alpha, beta, -constant / linear};
}

TlElement resolve(const TangleDiagram& t) {
  TlElement out(static_cast<int>(t.bottom.size()), static_cast<int>(t.top.size()));
  for (const auto& [m, by_chi] : state_sum(t, nullptr)) out.add_term(m, RatFunc(by_chi.at(0)));
  return out;
}

RatFunc bracket_value(const TangleDiagram& link) {
  require_closed(link);
  const TlElement r = resolve(link);
  return r.coefficient(PlanarMatching(0, 0, {}));
}

DefectMarking parse_defect(std::istream& in, const RatFunc& character, int center_order) {
  DefectMarking d;
  d.character = character;
  d.center_order = center_order;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind, arc, sign;
    if (!(ls >> kind)) continue;
    if (kind != "D" || !(ls >> arc >> sign))
      throw InvalidInput("defect line " + std::to_string(lineno) + ": expected 'D arc sign'");
    int s = 0;
    if (sign == "+" || sign == "+1") {
      s = 1;
    } else if (sign == "-" || sign == "-1") {
      s = -1;
    } else if (sign != "0") {
      throw InvalidInput("defect line " + std::to_string(lineno) + ": sign must be +, - or 0");
    }
    try {
      d.intersections.push_back({std::stoi(arc), s});
    } catch (const std::logic_error&) {
      throw InvalidInput("defect line " + std::to_string(lineno) + ": bad arc '" + arc + "'");
    }
  }
  return d;
}

RatFunc twisted_bracket(const TangleDiagram& link, const DefectMarking& defect) {
  require_closed(link);
  validate(link);
  if (defect.center_order < 1) throw InvalidInput("center order must be positive");
  if (defect.character.is_zero() || defect.character.pow(defect.center_order) != RatFunc(1))
    throw InvalidInput("character is not a root of unity of order dividing " + std::to_string(defect.center_order));

  ArcIndex idx(link);
  std::vector<int> weight(idx.ids.size(), 0);
  std::vector<int> hits(idx.ids.size(), 0);
  for (const auto& x : defect.intersections) {
    if (!idx.index.count(x.arc)) throw InvalidInput("defect meets unknown arc " + std::to_string(x.arc));
    if (x.sign == 0) throw InvalidInput("defect is not transverse to arc " + std::to_string(x.arc));
    if (x.sign != 1 && x.sign != -1) throw InvalidInput("defect intersection sign must be +1 or -1");
    weight[idx[x.arc]] += x.sign;
    ++hits[idx[x.arc]];
  }
  // A closed curve meets each closed link component an even number of times.
  UnionFind comp(idx.ids.size());
  for (const auto& c : link.crossings) {
    const auto a = c.normalized();
    comp.unite(idx[a[0]], idx[a[2]]);
    comp.unite(idx[a[1]], idx[a[3]]);
  }
  std::map<std::size_t, int> parity;
  for (std::size_t i = 0; i < idx.ids.size(); ++i) parity[comp.find(i)] += hits[i];
  for (const auto& [r, n] : parity)
    if (n % 2 != 0)
      throw InvalidInput("defect meets the link component through arc " + std::to_string(idx.ids[r]) +
                         " an odd number of times");

  RatFunc total;
  for (const auto& [m, by_chi] : state_sum(link, &weight)) {
    (void)m;
    for (const auto& [e, poly] : by_chi) total += defect.character.pow(e) * RatFunc(poly);
  }
  return total;
}

}  // namespace skein
