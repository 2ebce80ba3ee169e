#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <set>

#include "skein/errors.hpp"
#include "skein/homology.hpp"
#include "support/random.hpp"

using namespace skein;
using skein::testing::Gen;

namespace {

std::vector<Manifold> registry_sample() {
  return {registry("torus3"), registry("sigma_g_x_s1", 1), registry("sigma_g_x_s1", 2),
          registry("sigma_g_x_s1", 3), registry("sphere2_x_s1")};
}

// |ker d_k / im d_{k+1}| over Z/N by enumerating all chains.
long brute_force_order(const ChainComplex& c, int k, long n) {
  const IntMatrix out = c.boundary(k);
  const IntMatrix in = c.boundary(k + 1);
  const std::size_t dim = c.cells[static_cast<std::size_t>(k)];
  auto reduce = [n](std::vector<Integer> v) {
    for (auto& x : v) x = mod_floor(x, n);
    return v;
  };
  auto enumerate = [n](std::size_t len, const std::function<void(const std::vector<Integer>&)>& f) {
    std::vector<Integer> v(len);
    while (true) {
      f(v);
      std::size_t i = 0;
      while (i < len && v[i] == n - 1) v[i++] = 0;
      if (i == len) return;
      v[i] += 1;
    }
  };
  long cycles = 0;
  enumerate(dim, [&](const std::vector<Integer>& v) {
    bool zero = true;
    for (const auto& x : reduce(out * v)) zero = zero && x == 0;
    if (zero) ++cycles;
  });
  std::set<std::vector<Integer>> boundaries;
  enumerate(in.cols(), [&](const std::vector<Integer>& v) { boundaries.insert(reduce(in * v)); });
  return cycles / static_cast<long>(boundaries.size());
}

// Random complex with known homology: elementary pieces Z -t-> Z and free
// summands, conjugated by random unimodular changes of basis.
struct KnownComplex {
  ChainComplex complex;
  std::array<std::size_t, 4> free{};
  std::array<std::vector<Integer>, 4> torsion;
};

KnownComplex random_complex(Gen& gen) {
  KnownComplex k;
  std::array<std::size_t, 4> n{};
  std::vector<std::tuple<int, std::size_t, std::size_t, long>> pieces;  // degree k+1 -> k
  for (int d = 0; d < 4; ++d) {
    k.free[static_cast<std::size_t>(d)] = static_cast<std::size_t>(gen.integer(0, 2));
    n[static_cast<std::size_t>(d)] += k.free[static_cast<std::size_t>(d)];
  }
  for (int d = 0; d < 3; ++d) {
    const int count = gen.integer(0, 2);
    for (int p = 0; p < count; ++p) {
      const long t = gen.integer(1, 6);
      pieces.emplace_back(d, n[static_cast<std::size_t>(d)]++, n[static_cast<std::size_t>(d) + 1]++, t);
      if (t > 1) k.torsion[static_cast<std::size_t>(d)].push_back(t);
    }
  }
  k.complex.name = "random";
  k.complex.cells = n;
  for (std::size_t d = 1; d <= 3; ++d) k.complex.d[d - 1] = IntMatrix(n[d - 1], n[d]);
  for (const auto& [d, row, col, t] : pieces) k.complex.d[static_cast<std::size_t>(d)](row, col) = t;

  // Change of basis in each degree: c' = U c, so d' = U_{k-1} d U_k^{-1}.
  for (std::size_t d = 0; d < 4; ++d) {
    IntMatrix u = IntMatrix::identity(n[d]);
    IntMatrix u_inv = IntMatrix::identity(n[d]);
    for (int step = 0; step < 6 && n[d] > 1; ++step) {
      const auto a = static_cast<std::size_t>(gen.integer(0, static_cast<int>(n[d]) - 1));
      auto b = static_cast<std::size_t>(gen.integer(0, static_cast<int>(n[d]) - 2));
      if (b >= a) ++b;
      const Integer f = gen.integer(-2, 2);
      u.add_row_multiple(a, b, f);
      u_inv.add_col_multiple(b, a, -f);
    }
    if (d >= 1) k.complex.d[d - 1] = k.complex.d[d - 1] * u_inv;
    if (d <= 2) k.complex.d[d] = u * k.complex.d[d];
  }
  k.complex.validate();
  return k;
}

}  // namespace

TEST_CASE("Integral homology of the registry manifolds", "[homology]") {
  const auto t3 = registry("torus3");
  CHECK(homology(t3.complex, 0) == HomologyGroup{1, {}});
  CHECK(homology(t3.complex, 1) == HomologyGroup{3, {}});
  CHECK(homology(t3.complex, 2) == HomologyGroup{3, {}});
  CHECK(homology(t3.complex, 3) == HomologyGroup{1, {}});
  CHECK(t3.h1_basis[0].label == "x");

  for (int g = 1; g <= 4; ++g) {
    const auto m = registry("sigma_g_x_s1", g);
    for (int k = 0; k <= 3; ++k) {
      const std::size_t expected = (k == 0 || k == 3) ? 1 : static_cast<std::size_t>(2 * g + 1);
      CHECK(homology(m.complex, k) == HomologyGroup{expected, {}});
    }
    CHECK(m.h1_basis.front().label == "S1");
    CHECK(m.h1_basis.back().label == "surface_" + std::to_string(2 * g));
  }
  const auto s = registry("sphere2_x_s1");
  for (int k = 0; k <= 3; ++k) CHECK(homology(s.complex, k) == HomologyGroup{1, {}});

  const auto sigma1 = registry("sigma_g_x_s1", 1);
  for (int k = 0; k <= 3; ++k) CHECK(homology(sigma1.complex, k) == homology(t3.complex, k));

  CHECK_THROWS_AS(registry("lens"), InvalidInput);
  CHECK_THROWS_AS(registry("sigma_g_x_s1", 0), InvalidInput);
}

TEST_CASE("Z/N homology: examples and the two routes agree", "[homology]") {
  CHECK(homology(registry("sigma_g_x_s1", 2).complex, 1, 2).order() == Integer(32));
  CHECK(homology(registry("sigma_g_x_s1", 2).complex, 1, 2).to_string() == "(Z/2)^5");
  CHECK(homology(registry("torus3").complex, 1, 6).to_string() == "(Z/6)^3");

  for (const auto& m : registry_sample())
    for (long n = 2; n <= 12; ++n) {
      for (int k = 0; k <= 3; ++k)
        CHECK(homology_direct(m.complex, k, n) == homology_universal_coefficients(m.complex, k, n));
      CHECK(homology(m.complex, 1, n).order() == homology(m.complex, 2, n).order());
    }
}

TEST_CASE("Random complexes with known homology", "[homology][property]") {
  Gen gen(99);
  for (int trial = 0; trial < 60; ++trial) {
    const auto k = random_complex(gen);
    for (std::size_t d = 0; d < 4; ++d) {
      const auto h = homology(k.complex, static_cast<int>(d));
      CHECK(h.rank == k.free[d]);
      CHECK(h.torsion == invariant_factors_of(k.torsion[d]));
      for (long n : {2L, 3L, 4L, 6L})
        CHECK(homology_direct(k.complex, static_cast<int>(d), n) ==
              homology_universal_coefficients(k.complex, static_cast<int>(d), n));
    }
  }
}

TEST_CASE("Z/N orders against enumeration", "[homology][oracle]") {
  const auto s = registry("sphere2_x_s1");
  for (long n : {2L, 3L, 4L})
    for (int k = 0; k <= 3; ++k) CHECK(homology(s.complex, k, n).order() == Integer(brute_force_order(s.complex, k, n)));
  const auto g1 = registry("sigma_g_x_s1", 1);
  for (int k = 0; k <= 3; ++k) CHECK(homology(g1.complex, k, 2).order() == Integer(brute_force_order(g1.complex, k, 2)));

  Gen gen(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto k = random_complex(gen);
    for (int d = 0; d <= 3; ++d) {
      if (k.complex.cells[static_cast<std::size_t>(d)] > 7) continue;
      if (d < 3 && k.complex.cells[static_cast<std::size_t>(d) + 1] > 7) continue;
      CHECK(homology(k.complex, d, 3).order() == Integer(brute_force_order(k.complex, d, 3)));
    }
  }
}

TEST_CASE("Picard groupoid data", "[homology]") {
  const auto t3 = picard(registry("torus3"), 2);
  CHECK(t3.pi0.order() == Integer(8));
  CHECK(t3.pi1.order() == Integer(8));
  CHECK(t3.duality_cardinality_ok);
  const auto s2 = picard(registry("sigma_g_x_s1", 2), 2);
  CHECK(s2.pi0.order() == Integer(32));
  CHECK(s2.pi1.order() == Integer(32));
  CHECK(picard(registry("sphere2_x_s1"), 3).pi0.order() == Integer(3));
  CHECK_THROWS_AS(picard(registry("torus3"), 1), InvalidInput);
}

TEST_CASE("Homologous cycles and witnesses", "[homology]") {
  const auto m = registry("torus3");
  const auto x = make_cycle(m, m.h1_basis[0].chain, 2);
  const auto y = make_cycle(m, m.h1_basis[1].chain, 2);
  const auto empty = make_cycle(m, std::vector<Integer>(m.complex.cells[1]), 2);

  const auto self = homologous(m, x, x);
  REQUIRE(self);
  for (const auto& e : m.complex.d[1] * *self) CHECK(mod_floor(e, 2) == 0);
  CHECK_FALSE(homologous(m, x, y));

  // The boundary of one 2-cell bounds that cell.
  std::vector<Integer> cell(m.complex.cells[2]);
  cell[5] = 1;
  const auto bd = make_cycle(m, m.complex.d[1] * cell, 2);
  const auto w = homologous(m, empty, bd);
  REQUIRE(w);
  const auto check = m.complex.d[1] * *w;
  for (std::size_t i = 0; i < check.size(); ++i) CHECK(mod_floor(check[i] - bd.chain[i], 2) == 0);

  CHECK_THROWS_AS(homologous(m, x, make_cycle(m, m.h1_basis[0].chain, 3)), InvalidInput);
  std::vector<Integer> open(m.complex.cells[1]);
  open[0] = 1;
  CHECK_THROWS_WITH(make_cycle(m, open, 2), Catch::Matchers::ContainsSubstring("0-cell"));

  // A witness exists exactly when the class coordinates agree.
  Gen gen(8);
  const auto s = registry("sigma_g_x_s1", 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Integer> a(s.complex.cells[1]);
    std::vector<Integer> b(s.complex.cells[1]);
    for (const auto& h : s.h1_basis) {
      const int ca = gen.integer(0, 2);
      const int cb = gen.coin() ? ca : gen.integer(0, 2);
      for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] += ca * h.chain[i];
        b[i] += cb * h.chain[i];
      }
    }
    std::vector<Integer> face(s.complex.cells[2]);
    face[static_cast<std::size_t>(gen.integer(0, static_cast<int>(face.size()) - 1))] = gen.integer(1, 2);
    const auto bface = s.complex.d[1] * face;
    for (std::size_t i = 0; i < b.size(); ++i) b[i] += bface[i];
    const auto ca = make_cycle(s, a, 3);
    const auto cb = make_cycle(s, b, 3);
    const bool same = class_coordinates(s, 1, ca.chain, 3) == class_coordinates(s, 1, cb.chain, 3);
    CHECK(homologous(s, ca, cb).has_value() == same);
  }
}

TEST_CASE("Intersection pairing", "[homology]") {
  const auto t3 = registry("torus3");
  const auto yz = class_coordinates(t3, 2, t3.h2_basis[0].chain, 2);
  const auto x = class_coordinates(t3, 1, t3.h1_basis[0].chain, 2);
  CHECK(intersection_pairing(t3, yz, x, 2) == 1);
  CHECK(intersection_pairing(t3, yz, {0, 0, 0}, 2) == 0);
  CHECK(mod_floor(determinant(*t3.pairing), 5) != 0);

  for (const auto& m : registry_sample()) {
    for (std::size_t i = 0; i < m.h1_basis.size(); ++i) {
      auto e = std::vector<Integer>(m.h1_basis.size());
      e[i] = 1;
      CHECK(class_coordinates(m, 1, m.h1_basis[i].chain, 7) == e);
    }
    for (long p : {2L, 3L, 5L, 7L}) CHECK(mod_floor(determinant(*m.pairing), p) != 0);
  }
  const auto s = registry("sigma_g_x_s1", 2);
  // <a_1 x S1, b_1> = 1 and <b_1 x S1, a_1> = -1.
  CHECK(intersection_pairing(s, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, 5) == 1);
  CHECK(intersection_pairing(s, {0, 0, 1, 0, 0}, {0, 1, 0, 0, 0}, 5) == 4);
  CHECK(intersection_pairing(s, {1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, 5) == 1);

  const auto user = manifold_from_complex(t3.complex);
  CHECK_THROWS_AS(intersection_pairing(user, yz, x, 2), Unsupported);
}

TEST_CASE("Chain complex JSON", "[homology]") {
  const auto c = parse_chain_complex(
      R"({"name":"circle","cells":[1,1,0,0],"d1":[[0]],"d2":[],"d3":[]})");
  CHECK(c.name == "circle");
  CHECK(homology(c, 1) == HomologyGroup{1, {}});
  const auto rp2 = parse_chain_complex(R"({"name":"rp2","cells":[1,1,1,0],"d1":[[0]],"d2":[[2]]})");
  CHECK(homology(rp2, 1) == HomologyGroup{0, {Integer(2)}});
  CHECK(homology(rp2, 2, 2).order() == Integer(2));

  CHECK_THROWS_WITH(parse_chain_complex(R"({"cells":[1,2,1,0],"d1":[[-1,1]],"d2":[[1],[0]]})"),
                    Catch::Matchers::ContainsSubstring("d1*d2"));
  CHECK_THROWS_AS(parse_chain_complex(R"({"cells":[1,1]})"), InvalidInput);
  CHECK_THROWS_AS(parse_chain_complex("not json"), InvalidInput);
  CHECK_THROWS_AS(parse_chain_complex(R"({"cells":[1,1,0,0],"d1":[[0,0]]})"), InvalidInput);
}
