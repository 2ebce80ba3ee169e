#include "skein/homology.hpp"

#include <map>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "skein/errors.hpp"

namespace skein {

namespace {

// A cell complex of dimension <= 3 with named cells.
struct Cells {
  std::array<std::vector<std::string>, 4> labels;
  std::array<IntMatrix, 3> d;

  std::size_t count(int k) const { return k < 0 || k > 3 ? 0 : labels[static_cast<std::size_t>(k)].size(); }
  // Boundary of cell i in degree k as (cell, coefficient) pairs.
  std::vector<std::pair<std::size_t, Integer>> boundary_of(int k, std::size_t i) const {
    std::vector<std::pair<std::size_t, Integer>> out;
    if (k < 1) return out;
    const IntMatrix& m = d[static_cast<std::size_t>(k - 1)];
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m(r, i) != 0) out.emplace_back(r, m(r, i));
    return out;
  }
};

Cells circle() {
  Cells c;
  c.labels = {{{"v0", "v1"}, {"e0", "e1"}, {}, {}}};
  c.d[0] = IntMatrix{{-1, 1}, {1, -1}};
  c.d[1] = IntMatrix(2, 0);
  c.d[2] = IntMatrix(0, 0);
  return c;
}

Cells surface(int g) {
  Cells c;
  c.labels[0] = {"v"};
  for (int i = 1; i <= g; ++i) {
    c.labels[1].push_back("a" + std::to_string(i));
    c.labels[1].push_back("b" + std::to_string(i));
  }
  c.labels[2] = {"F"};
  // One face glued along the product of commutators: all boundaries vanish.
  c.d[0] = IntMatrix(1, static_cast<std::size_t>(2 * g));
  c.d[1] = IntMatrix(static_cast<std::size_t>(2 * g), 1);
  c.d[2] = IntMatrix(1, 0);
  return c;
}

Cells sphere() {
  Cells c;
  c.labels = {{{"v"}, {}, {"F"}, {}}};
  c.d[0] = IntMatrix(1, 0);
  c.d[1] = IntMatrix(0, 1);
  c.d[2] = IntMatrix(1, 0);
  return c;
}

// A product complex with the index of cell (p, i) x (q, j) in degree p + q.
struct Product {
  Cells cells;
  std::array<std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t>, 4> index;
};

Product product(const Cells& x, const Cells& y) {
  Product out;
  for (int k = 0; k <= 3; ++k) {
    auto& labels = out.cells.labels[static_cast<std::size_t>(k)];
    for (int p = 0; p <= k; ++p) {
      const int q = k - p;
      for (std::size_t i = 0; i < x.count(p); ++i)
        for (std::size_t j = 0; j < y.count(q); ++j) {
          out.index[static_cast<std::size_t>(k)][{p, i, j}] = labels.size();
          labels.push_back(x.labels[static_cast<std::size_t>(p)][i] + "x" + y.labels[static_cast<std::size_t>(q)][j]);
        }
    }
  }
  // Dimensions above 3 never occur for the registry products.
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q)
      if (p + q > 3 && x.count(p) > 0 && y.count(q) > 0) throw Unsupported("product complex exceeds dimension 3");

  for (int k = 1; k <= 3; ++k) {
    IntMatrix m(out.cells.count(k - 1), out.cells.count(k));
    for (const auto& [key, col] : out.index[static_cast<std::size_t>(k)]) {
      const auto [p, i, j] = key;
      const int q = k - p;
      for (const auto& [s, c] : x.boundary_of(p, i))
        m(out.index[static_cast<std::size_t>(k - 1)].at({p - 1, s, j}), col) += c;
      const Integer sign = p % 2 == 0 ? 1 : -1;
      for (const auto& [t, c] : y.boundary_of(q, j))
        m(out.index[static_cast<std::size_t>(k - 1)].at({p, i, t}), col) += sign * c;
    }
    out.cells.d[static_cast<std::size_t>(k - 1)] = m;
  }
  return out;
}

// Chain alpha (degree p in x) times chain beta (degree q in y).
std::vector<Integer> cross(const Product& prod, int p, const std::vector<Integer>& alpha, int q,
                           const std::vector<Integer>& beta) {
  const auto k = static_cast<std::size_t>(p + q);
  std::vector<Integer> out(prod.cells.labels[k].size());
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t j = 0; j < beta.size(); ++j)
      if (alpha[i] != 0 && beta[j] != 0) out[prod.index[k].at({p, i, j})] += alpha[i] * beta[j];
  return out;
}

std::vector<Integer> unit(std::size_t n, std::size_t i) {
  std::vector<Integer> v(n);
  v[i] = 1;
  return v;
}

ChainComplex to_complex(const std::string& name, const Cells& c) {
  ChainComplex out;
  out.name = name;
  for (int k = 0; k <= 3; ++k) out.cells[static_cast<std::size_t>(k)] = c.count(k);
  out.d = c.d;
  out.validate();
  return out;
}

// Projects a kernel basis of [m | N*I] onto its first m.cols() coordinates:
// a basis of {x : m x = 0 mod N}.
IntMatrix cycles_mod(const IntMatrix& m, long modulus) {
  const std::size_t n = m.cols();
  const std::size_t r = m.rows();
  IntMatrix aug(r, n + r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = modulus;
  }
  const SnfDecomposition s = snf(aug);
  IntMatrix basis(n, n + r - s.rank());
  for (std::size_t c = s.rank(); c < n + r; ++c)
    for (std::size_t i = 0; i < n; ++i) basis(i, c - s.rank()) = s.right(i, c);
  return basis;
}

std::vector<Integer> nontrivial_factors(const std::vector<Integer>& fs) {
  std::vector<Integer> out;
  for (const auto& f : fs)
    if (f > 1) out.push_back(f);
  return out;
}

void require_modulus(long modulus) {
  if (modulus < 2) throw InvalidInput("coefficient modulus must be at least 2");
}

// Solves [g | extra | N*I] z = v and returns the first g.cols() entries mod N.
std::optional<std::vector<Integer>> solve_mod(const IntMatrix& g, const IntMatrix& extra, const std::vector<Integer>& v,
                                              long modulus) {
  const std::size_t n = v.size();
  IntMatrix m(n, g.cols() + extra.cols() + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) m(i, j) = g(i, j);
    for (std::size_t j = 0; j < extra.cols(); ++j) m(i, g.cols() + j) = extra(i, j);
    m(i, g.cols() + extra.cols() + i) = modulus;
  }
  const auto z = solve_integer(m, v);
  if (!z) return std::nullopt;
  std::vector<Integer> out(g.cols());
  for (std::size_t j = 0; j < g.cols(); ++j) out[j] = mod_floor((*z)[j], modulus);
  return out;
}

IntMatrix columns(const std::vector<NamedChain>& chains, std::size_t n) {
  IntMatrix m(n, chains.size());
  for (std::size_t j = 0; j < chains.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = chains[j].chain[i];
  return m;
}

}  // namespace

void ChainComplex::validate() const {
  for (std::size_t k = 1; k <= 3; ++k) {
    const IntMatrix& m = d[k - 1];
    if (m.rows() != cells[k - 1] || m.cols() != cells[k])
      throw InvalidInput("d" + std::to_string(k) + " must be " + std::to_string(cells[k - 1]) + "x" +
                         std::to_string(cells[k]));
  }
  for (std::size_t k = 1; k < 3; ++k)
    if (!(d[k - 1] * d[k]).is_zero())
      throw InvalidInput("d" + std::to_string(k) + "*d" + std::to_string(k + 1) + " is nonzero");
}

IntMatrix ChainComplex::boundary(int k) const {
  if (k >= 1 && k <= 3) return d[static_cast<std::size_t>(k - 1)];
  if (k == 0) return IntMatrix(0, cells[0]);
  if (k == 4) return IntMatrix(cells[3], 0);
  throw InvalidInput("degree out of range");
}

std::optional<Integer> HomologyGroup::order() const {
  if (rank > 0) return std::nullopt;
  Integer n = 1;
  for (const auto& t : torsion) n *= t;
  return n;
}

std::string HomologyGroup::to_string() const {
  std::vector<std::string> parts;
  if (rank == 1) parts.push_back("Z");
  if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  for (std::size_t i = 0; i < torsion.size();) {
    std::size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    const std::string base = "Z/" + torsion[i].get_str();
    parts.push_back(j - i == 1 ? base : "(" + base + ")^" + std::to_string(j - i));
    i = j;
  }
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

HomologyGroup homology(const ChainComplex& c, int k, long modulus) {
  if (k < 0 || k > 3) throw InvalidInput("homology degree must be 0..3");
  c.validate();
  if (modulus != 0) return homology_direct(c, k, modulus);
  const auto n = c.cells[static_cast<std::size_t>(k)];
  const std::size_t rank_out = snf(c.boundary(k)).rank();
  const SnfDecomposition in = snf(c.boundary(k + 1));
  HomologyGroup h;
  h.rank = n - rank_out - in.rank();
  h.torsion = nontrivial_factors(in.invariant_factors);
  return h;
}

HomologyGroup homology_universal_coefficients(const ChainComplex& c, int k, long modulus) {
  require_modulus(modulus);
  const HomologyGroup hk = homology(c, k, 0);
  std::vector<Integer> orders(hk.rank, Integer(modulus));
  auto add_gcd = [&](const Integer& t) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), Integer(modulus).get_mpz_t());
    orders.push_back(g);
  };
  for (const auto& t : hk.torsion) add_gcd(t);
  if (k > 0)
    for (const auto& t : homology(c, k - 1, 0).torsion) add_gcd(t);
  return {0, invariant_factors_of(orders)};
}

HomologyGroup homology_direct(const ChainComplex& c, int k, long modulus) {
  require_modulus(modulus);
  if (k < 0 || k > 3) throw InvalidInput("homology degree must be 0..3");
  c.validate();
  const auto n = c.cells[static_cast<std::size_t>(k)];
  if (n == 0) return {};
  const IntMatrix z = cycles_mod(c.boundary(k), modulus);
  const IntMatrix in = c.boundary(k + 1);
  IntMatrix coords(z.cols(), in.cols() + n);
  auto place = [&](std::size_t col, const std::vector<Integer>& v) {
    const auto x = solve_integer(z, v);
    if (!x) throw std::logic_error("boundary outside the cycle lattice");
    for (std::size_t i = 0; i < x->size(); ++i) coords(i, col) = (*x)[i];
  };
  for (std::size_t j = 0; j < in.cols(); ++j) place(j, in.column(j));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Integer> v(n);
    v[j] = modulus;
    place(in.cols() + j, v);
  }
  const SnfDecomposition s = snf(coords);
  HomologyGroup h;
  h.rank = z.cols() - s.rank();
  h.torsion = nontrivial_factors(s.invariant_factors);
  return h;
}

Manifold registry(const std::string& name, int genus) {
  Manifold m;
  m.name = name;
  const Cells s1 = circle();
  const std::vector<Integer> loop{1, 1};
  const std::vector<Integer> base{1, 0};
  if (name == "torus3") {
    const Product t2 = product(s1, s1);
    const Product t3 = product(t2.cells, s1);
    const auto x2 = cross(t2, 1, loop, 0, base);
    const auto y2 = cross(t2, 0, base, 1, loop);
    const auto p2 = cross(t2, 0, base, 0, base);
    const auto f2 = cross(t2, 1, loop, 1, loop);
    m.complex = to_complex(name, t3.cells);
    m.cell_labels = t3.cells.labels;
    m.h1_basis = {{"x", cross(t3, 1, x2, 0, base)}, {"y", cross(t3, 1, y2, 0, base)}, {"z", cross(t3, 0, p2, 1, loop)}};
    m.h2_basis = {{"yz", cross(t3, 1, y2, 1, loop)}, {"xz", cross(t3, 1, x2, 1, loop)}, {"xy", cross(t3, 2, f2, 0, base)}};
    m.pairing = IntMatrix::identity(3);
  } else if (name == "sigma_g_x_s1") {
    if (genus < 1) throw InvalidInput("sigma_g_x_s1 needs genus >= 1");
    m.genus = genus;
    const Cells sg = surface(genus);
    const Product p = product(sg, s1);
    m.complex = to_complex(name + "(g=" + std::to_string(genus) + ")", p.cells);
    m.cell_labels = p.cells.labels;
    const auto n1 = static_cast<std::size_t>(2 * genus);
    m.h1_basis.push_back({"S1", cross(p, 0, {1}, 1, loop)});
    for (std::size_t i = 0; i < n1; ++i)
      m.h1_basis.push_back({"surface_" + std::to_string(i + 1), cross(p, 1, unit(n1, i), 0, base)});
    m.h2_basis.push_back({"Sigma", cross(p, 2, {1}, 0, base)});
    for (std::size_t i = 0; i < n1; ++i)
      m.h2_basis.push_back({"surface_" + std::to_string(i + 1) + "xS1", cross(p, 1, unit(n1, i), 1, loop)});
    // <Sigma, S1> = 1, <a_i x S1, b_i> = 1, <b_i x S1, a_i> = -1.
    IntMatrix pr(n1 + 1, n1 + 1);
    pr(0, 0) = 1;
    for (std::size_t i = 0; i < n1; i += 2) {
      pr(1 + i, 1 + i + 1) = 1;
      pr(1 + i + 1, 1 + i) = -1;
    }
    m.pairing = pr;
  } else if (name == "sphere2_x_s1") {
    const Product p = product(sphere(), s1);
    m.complex = to_complex(name, p.cells);
    m.cell_labels = p.cells.labels;
    m.h1_basis = {{"S1", cross(p, 0, {1}, 1, loop)}};
    m.h2_basis = {{"S2", cross(p, 2, {1}, 0, base)}};
    m.pairing = IntMatrix{{1}};
  } else {
    throw InvalidInput("unknown manifold '" + name + "'");
  }
  return m;
}

std::vector<std::string> registry_names() { return {"torus3", "sigma_g_x_s1", "sphere2_x_s1"}; }

ChainComplex parse_chain_complex(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("chain complex JSON: ") + e.what());
  }
  ChainComplex c;
  try {
    c.name = j.value("name", std::string("complex"));
    const auto cells = j.at("cells").get<std::vector<long>>();
    if (cells.size() != 4) throw InvalidInput("chain complex JSON: cells must list n0..n3");
    for (std::size_t k = 0; k < 4; ++k) {
      if (cells[k] < 0) throw InvalidInput("chain complex JSON: negative cell count");
      c.cells[k] = static_cast<std::size_t>(cells[k]);
    }
    for (std::size_t k = 1; k <= 3; ++k) {
      const std::string key = "d" + std::to_string(k);
      const auto rows = j.contains(key) ? j.at(key).get<std::vector<std::vector<long>>>() : std::vector<std::vector<long>>{};
      const std::size_t r = c.cells[k - 1];
      const std::size_t cols = c.cells[k];
      IntMatrix m(r, cols);
      if (!rows.empty() || (r > 0 && cols > 0)) {
        if (rows.size() != r) throw InvalidInput(key + " must have " + std::to_string(r) + " rows");
        for (std::size_t i = 0; i < r; ++i) {
          if (rows[i].size() != cols) throw InvalidInput(key + " row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
          for (std::size_t jj = 0; jj < cols; ++jj) m(i, jj) = rows[i][jj];
        }
      }
      c.d[k - 1] = m;
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("chain complex JSON: ") + e.what());
  }
  c.validate();
  return c;
}

Manifold manifold_from_complex(ChainComplex c) {
  c.validate();
  Manifold m;
  m.name = c.name;
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < c.cells[k]; ++i) m.cell_labels[k].push_back("c" + std::to_string(k) + "_" + std::to_string(i));
  m.complex = std::move(c);
  return m;
}

CycleOne make_cycle(const Manifold& m, std::vector<Integer> chain, long modulus) {
  require_modulus(modulus);
  if (chain.size() != m.complex.cells[1])
    throw InvalidInput("1-chain has " + std::to_string(chain.size()) + " entries; expected " +
                       std::to_string(m.complex.cells[1]));
  for (auto& x : chain) x = mod_floor(x, modulus);
  const auto bd = m.complex.d[0] * chain;
  for (std::size_t v = 0; v < bd.size(); ++v)
    if (mod_floor(bd[v], modulus) != 0)
      throw InvalidInput("incoming and outgoing labels do not balance at 0-cell " + m.cell_labels[0][v]);
  return {modulus, std::move(chain)};
}

PicardInfo picard(const Manifold& m, long modulus) {
  require_modulus(modulus);
  PicardInfo p;
  p.pi0 = homology(m.complex, 1, modulus);
  p.pi1 = homology(m.complex, 2, modulus);
  // Z/N is self-dual, so H_1 with dual coefficients has the order of pi0.
  p.duality_cardinality_ok = p.pi1.order() == homology(m.complex, 1, modulus).order();
  return p;
}

std::optional<std::vector<Integer>> homologous(const Manifold& m, const CycleOne& a, const CycleOne& b) {
  if (a.modulus != b.modulus) throw InvalidInput("cycles have different coefficient moduli");
  std::vector<Integer> diff(a.chain.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = b.chain[i] - a.chain[i];
  return solve_mod(m.complex.d[1], IntMatrix(diff.size(), 0), diff, a.modulus);
}

std::vector<Integer> class_coordinates(const Manifold& m, int degree, const std::vector<Integer>& cycle, long modulus) {
  require_modulus(modulus);
  if (degree != 1 && degree != 2) throw InvalidInput("class coordinates exist in degrees 1 and 2");
  const auto& basis = degree == 1 ? m.h1_basis : m.h2_basis;
  if (basis.empty() && m.complex.cells[static_cast<std::size_t>(degree)] > 0 && !m.pairing)
    throw Unsupported("no labelled basis for " + m.name);
  const std::size_t n = m.complex.cells[static_cast<std::size_t>(degree)];
  if (cycle.size() != n) throw InvalidInput("chain has the wrong length for degree " + std::to_string(degree));
  const auto bd = m.complex.boundary(degree) * cycle;
  for (const auto& x : bd)
    if (mod_floor(x, modulus) != 0) throw InvalidInput("chain is not a cycle mod " + std::to_string(modulus));
  const auto coords = solve_mod(columns(basis, n), m.complex.boundary(degree + 1), cycle, modulus);
  if (!coords) throw InvalidInput("cycle is outside the span of the labelled basis");
  return *coords;
}

Integer intersection_pairing(const Manifold& m, const std::vector<Integer>& sigma_coords,
                             const std::vector<Integer>& gamma_coords, long modulus) {
  require_modulus(modulus);
  if (!m.pairing) throw Unsupported("no intersection pairing stored for " + m.name);
  const IntMatrix& p = *m.pairing;
  if (sigma_coords.size() != p.rows() || gamma_coords.size() != p.cols())
    throw InvalidInput("pairing coordinates have the wrong length");
  Integer s = 0;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) s += sigma_coords[i] * p(i, j) * gamma_coords[j];
  return mod_floor(s, modulus);
}

}  // namespace skein
