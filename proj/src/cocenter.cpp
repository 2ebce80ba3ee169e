#include "skein/cocenter.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "skein/errors.hpp"

namespace skein {

namespace {

SmallMatrix mat_mul(const SmallMatrix& a, const SmallMatrix& b) {
  const std::size_t n = a.size();
  SmallMatrix c(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

SmallMatrix transpose(const SmallMatrix& a) {
  SmallMatrix t(a.size(), std::vector<long>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
  return t;
}

SmallMatrix identity_matrix(std::size_t n) {
  SmallMatrix m(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::string matrix_string(const SmallMatrix& m) {
  return nlohmann::json(m).dump();
}

void check_square(const SmallMatrix& m, std::size_t n, const std::string& what) {
  if (m.size() != n) throw InvalidInput(what + " must be " + std::to_string(n) + "x" + std::to_string(n));
  for (const auto& row : m)
    if (row.size() != n) throw InvalidInput(what + " must be " + std::to_string(n) + "x" + std::to_string(n));
}

// Union-find over basis symbols. A relation A^a s = A^b t makes s and t
// proportional; a vertex is killed when its component forces it to zero.
class RelationGraph {
 public:
  std::size_t vertex(const LatticeSymbol& s) {
    auto [it, fresh] = ids_.emplace(s, parent_.size());
    if (fresh) {
      parent_.push_back(it->second);
      potential_.push_back(0);
      killed_.push_back(false);
    }
    return it->second;
  }

  // Root r and p with s_i = A^p r.
  std::pair<std::size_t, long> find(std::size_t i) {
    long p = 0;
    std::size_t x = i;
    while (parent_[x] != x) {
      p += potential_[x];
      x = parent_[x];
    }
    // Path compression with accumulated potentials.
    long acc = p;
    std::size_t y = i;
    while (parent_[y] != y) {
      const std::size_t next = parent_[y];
      const long step = potential_[y];
      parent_[y] = x;
      potential_[y] = acc;
      acc -= step;
      y = next;
    }
    return {x, p};
  }

  // A^a s_i - A^b s_j = 0.
  void relate(std::size_t i, long a, std::size_t j, long b) {
    if (i == j) {
      if (a != b) killed_[find(i).first] = true;
      return;
    }
    const auto [ri, pi] = find(i);
    const auto [rj, pj] = find(j);
    // s_i = A^{b-a} s_j, so A^pi ri = A^{b-a+pj} rj.
    const long shift = b - a + pj - pi;
    if (ri == rj) {
      if (shift != 0) killed_[ri] = true;
      return;
    }
    parent_[ri] = rj;
    potential_[ri] = shift;
    killed_[rj] = killed_[rj] || killed_[ri];
  }

  bool free_root(std::size_t i) {
    const auto r = find(i).first;
    return !killed_[r];
  }

 private:
  std::map<LatticeSymbol, std::size_t> ids_;
  std::vector<std::size_t> parent_;
  std::vector<long> potential_;
  std::vector<bool> killed_;
};

std::size_t window_count(const TwistedLatticeAlgebra& alg, long radius) {
  std::size_t c = alg.group_order();
  for (std::size_t i = 0; i < alg.rank(); ++i) c *= static_cast<std::size_t>(2 * radius + 1);
  return c;
}

SmallMatrix parse_matrix(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidInput(what + " must be a JSON matrix");
  SmallMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw InvalidInput(what + " must be a JSON matrix");
    std::vector<long> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw InvalidInput(what + " entries must be integers");
      r.push_back(x.get<long>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

nlohmann::json parse_json(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(what + " is not valid JSON: " + e.what());
  }
}

}  // namespace

TwistedLatticeAlgebra::TwistedLatticeAlgebra(SmallMatrix form, const std::vector<SmallMatrix>& generators,
                                             std::size_t max_group)
    : form_(std::move(form)) {
  const std::size_t n = form_.size();
  if (n == 0) throw InvalidInput("lattice rank must be positive");
  check_square(form_, n, "skew form");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (form_[i][j] != -form_[j][i]) throw InvalidInput("form is not skew-symmetric");
  for (const auto& g : generators) {
    check_square(g, n, "group generator");
    if (mat_mul(transpose(g), mat_mul(form_, g)) != form_)
      throw InvalidInput("group generator " + matrix_string(g) + " does not preserve the form");
  }

  elements_.push_back(identity_matrix(n));
  std::map<SmallMatrix, std::size_t> index{{elements_[0], 0}};
  for (std::size_t k = 0; k < elements_.size(); ++k)
    for (const auto& g : generators) {
      SmallMatrix h = mat_mul(elements_[k], g);
      if (index.count(h)) continue;
      if (elements_.size() == max_group)
        throw Unsupported("group generated exceeds " + std::to_string(max_group) + " elements");
      index.emplace(h, elements_.size());
      elements_.push_back(std::move(h));
    }

  const std::size_t order = elements_.size();
  table_.assign(order, std::vector<std::size_t>(order));
  inverse_.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      table_[a][b] = index.at(mat_mul(elements_[a], elements_[b]));
      if (table_[a][b] == 0) inverse_[a] = b;
    }
  class_of_.assign(order, order);
  for (std::size_t a = 0; a < order; ++a) {
    if (class_of_[a] != order) continue;
    const std::size_t c = class_reps_.size();
    class_reps_.push_back(a);
    for (std::size_t h = 0; h < order; ++h) class_of_[table_[table_[h][a]][inverse_[h]]] = c;
  }
}

IntVec TwistedLatticeAlgebra::act(std::size_t w, const IntVec& v) const {
  const auto& m = elements_[w];
  IntVec out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

long TwistedLatticeAlgebra::pairing(const IntVec& u, const IntVec& v) const {
  long s = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += u[i] * form_[i][j] * v[j];
  return s;
}

ScaledSymbol multiply(const TwistedLatticeAlgebra& alg, const LatticeSymbol& x, const LatticeSymbol& y) {
  if (x.v.size() != alg.rank() || y.v.size() != alg.rank()) throw InvalidInput("symbol has the wrong lattice rank");
  const IntVec wv = alg.act(x.w, y.v);
  ScaledSymbol out;
  out.exponent = alg.pairing(x.v, wv);
  out.symbol.v = x.v;
  for (std::size_t i = 0; i < wv.size(); ++i) out.symbol.v[i] += wv[i];
  out.symbol.w = alg.product(x.w, y.w);
  return out;
}

std::vector<LatticeSymbol> window_basis(const TwistedLatticeAlgebra& alg, long radius) {
  std::vector<LatticeSymbol> out;
  IntVec v(alg.rank(), -radius);
  while (true) {
    for (std::size_t w = 0; w < alg.group_order(); ++w) out.push_back({v, w});
    std::size_t i = v.size();
    while (i > 0 && v[i - 1] == radius) v[--i] = -radius;
    if (i == 0) return out;
    ++v[i - 1];
  }
}

WindowResult cocenter_dimension(const TwistedLatticeAlgebra& alg, long r, long R, std::size_t cap) {
  if (r < 0 || R < r) throw InvalidInput("windows need 0 <= r <= R");
  if (window_count(alg, R) > cap)
    throw Unsupported("generation window has " + std::to_string(window_count(alg, R)) + " symbols, cap is " +
                      std::to_string(cap));
  WindowResult res;
  res.r = r;
  res.R = R;
  const auto gens = window_basis(alg, R);
  const auto basis = window_basis(alg, r);
  res.basis_size = basis.size();

  RelationGraph graph;
  std::vector<std::size_t> basis_ids;
  for (const auto& b : basis) basis_ids.push_back(graph.vertex(b));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const auto xy = multiply(alg, gens[i], gens[j]);
      const auto yx = multiply(alg, gens[j], gens[i]);
      graph.relate(graph.vertex(xy.symbol), xy.exponent, graph.vertex(yx.symbol), yx.exponent);
      ++res.commutators;
    }

  std::vector<long> per_class(alg.class_count(), 0);
  std::map<std::size_t, std::size_t> seen_roots;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const std::size_t id = basis_ids[k];
    if (!graph.free_root(id)) continue;
    if (seen_roots.emplace(graph.find(id).first, k).second) ++per_class[alg.conjugacy_class(basis[k].w)];
  }
  for (std::size_t c = 0; c < per_class.size(); ++c) {
    const std::size_t rep = alg.class_representative(c);
    res.blocks.push_back({c, rep == 0 ? "identity" : "class of " + matrix_string(alg.element(rep)), per_class[c]});
    res.dim += per_class[c];
  }
  return res;
}

CocenterEstimate cocenter_window(const TwistedLatticeAlgebra& alg, long r, long R_max, std::size_t cap) {
  if (R_max < r + 2) throw InvalidInput("the stabilization test needs R_max >= r + 2");
  CocenterEstimate e;
  e.r = r;
  for (long R = r; R <= R_max; ++R) e.by_generation_radius.push_back(cocenter_dimension(alg, r, R, cap));
  e.final_value = e.by_generation_radius.back().dim;
  e.widened_value = cocenter_dimension(alg, r + 1, R_max, cap).dim;
  const auto& s = e.by_generation_radius;
  const std::size_t n = s.size();
  e.stabilized = s[n - 1].dim == s[n - 2].dim && s[n - 2].dim == s[n - 3].dim && e.widened_value == e.final_value;
  return e;
}

std::string CocenterEstimate::to_tsv() const {
  std::ostringstream os;
  os << "# ORACLE: window-truncated cocenter estimate; exploratory, not used by duality verdicts\n";
  os << "r\tR\tdim\tbasis\tcommutators\n";
  for (const auto& w : by_generation_radius)
    os << w.r << '\t' << w.R << '\t' << w.dim << '\t' << w.basis_size << '\t' << w.commutators << '\n';
  os << "block\tlabel\tdim\n";
  for (const auto& b : by_generation_radius.back().blocks) os << b.class_index << '\t' << b.label << '\t' << b.dim << '\n';
  os << "widened_r\t" << r + 1 << '\t' << widened_value << '\n';
  os << "stabilized\t" << (stabilized ? "yes" : "no") << '\n';
  os << "final\t" << final_value << '\n';
  return os.str();
}

std::string CocenterEstimate::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = "ORACLE: window-truncated cocenter estimate";
  j["r"] = r;
  auto& seq = j["sequence"] = nlohmann::ordered_json::array();
  for (const auto& w : by_generation_radius)
    seq.push_back({{"R", w.R}, {"dim", w.dim}, {"basis", w.basis_size}, {"commutators", w.commutators}});
  auto& blocks = j["blocks"] = nlohmann::ordered_json::array();
  for (const auto& b : by_generation_radius.back().blocks)
    blocks.push_back({{"class", b.class_index}, {"label", b.label}, {"dim", b.dim}});
  j["widened_value"] = widened_value;
  j["stabilized"] = stabilized;
  j["final"] = final_value;
  return j.dump(2) + "\n";
}

TwistedLatticeAlgebra parse_algebra(const std::string& form_json, const std::string& group_json) {
  nlohmann::json f = parse_json(form_json, "form");
  if (f.is_object()) {
    if (!f.contains("form")) throw InvalidInput("form object needs a \"form\" key");
    f = f["form"];
  }
  SmallMatrix form = parse_matrix(f, "form");
  std::vector<SmallMatrix> gens;
  if (group_json != "trivial" && !group_json.empty()) {
    nlohmann::json g = parse_json(group_json, "group");
    if (g.is_object()) {
      if (!g.contains("generators")) throw InvalidInput("group object needs a \"generators\" key");
      g = g["generators"];
    }
    if (!g.is_array()) throw InvalidInput("group must be a list of generator matrices");
    for (const auto& m : g) gens.push_back(parse_matrix(m, "group generator"));
  }
  return TwistedLatticeAlgebra(std::move(form), gens);
}

}  // namespace skein
