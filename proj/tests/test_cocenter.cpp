#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "skein/cocenter.hpp"
#include "skein/errors.hpp"
#include "skein/linalg.hpp"
#include "support/random.hpp"

using namespace skein;
using skein::testing::Gen;

namespace {

const SmallMatrix kStandard{{0, 1}, {-1, 0}};
const SmallMatrix kNegation{{-1, 0}, {0, -1}};

// Dimension by elimination over Q(A): outside-window columns first, so the
// rank of the commutator span minus the rank of its outside projection is
// the dimension of its intersection with the window.
long oracle_dimension(const TwistedLatticeAlgebra& alg, long r, long R) {
  const auto basis = window_basis(alg, r);
  const auto gens = window_basis(alg, R);
  std::map<LatticeSymbol, bool> in_window;
  for (const auto& b : basis) in_window[b] = true;
  std::map<LatticeSymbol, std::size_t> column;
  std::size_t outside = 0;
  std::vector<std::vector<std::pair<LatticeSymbol, RatFunc>>> rows;
  for (const auto& x : gens)
    for (const auto& y : gens) {
      const auto xy = multiply(alg, x, y);
      const auto yx = multiply(alg, y, x);
      rows.push_back({{xy.symbol, RatFunc::A().pow(xy.exponent)}, {yx.symbol, -RatFunc::A().pow(yx.exponent)}});
      for (const auto* s : {&xy.symbol, &yx.symbol})
        if (!in_window.count(*s) && !column.count(*s)) column[*s] = outside++;
    }
  std::size_t next = outside;
  for (const auto& b : basis) column[b] = next++;

  SparseRank full;
  SparseRank projected;
  for (const auto& row : rows) {
    SparseRank::Row f;
    SparseRank::Row p;
    for (const auto& [s, c] : row) {
      const std::size_t col = column.at(s);
      f[col] += c;
      if (col < outside) p[col] += c;
    }
    for (auto* m : {&f, &p})
      for (auto it = m->begin(); it != m->end();) it = it->second.is_zero() ? m->erase(it) : std::next(it);
    full.insert(f);
    projected.insert(p);
  }
  return static_cast<long>(basis.size()) - static_cast<long>(full.rank() - projected.rank());
}

LatticeSymbol random_symbol(Gen& gen, const TwistedLatticeAlgebra& alg) {
  LatticeSymbol s;
  for (std::size_t i = 0; i < alg.rank(); ++i) s.v.push_back(gen.integer(-3, 3));
  s.w = static_cast<std::size_t>(gen.integer(0, static_cast<long>(alg.group_order()) - 1));
  return s;
}

}  // namespace

TEST_CASE("Quantum torus multiplication", "[cocenter]") {
  const TwistedLatticeAlgebra q(kStandard, {});
  const LatticeSymbol x{{1, 0}, 0};
  const LatticeSymbol y{{0, 1}, 0};
  const auto xy = multiply(q, x, y);
  const auto yx = multiply(q, y, x);
  CHECK(xy.symbol == yx.symbol);
  CHECK(xy.exponent - yx.exponent == 2);

  const LatticeSymbol one{{0, 0}, 0};
  CHECK(multiply(q, one, x) == ScaledSymbol{0, x});
  CHECK(multiply(q, x, one) == ScaledSymbol{0, x});
  const auto inv = multiply(q, LatticeSymbol{{2, -1}, 0}, LatticeSymbol{{-2, 1}, 0});
  CHECK(inv.symbol == one);
}

TEST_CASE("Multiplication is associative", "[cocenter][property]") {
  Gen gen(21);
  const std::vector<TwistedLatticeAlgebra> algebras{
      TwistedLatticeAlgebra(kStandard, {}),
      TwistedLatticeAlgebra(kStandard, {kNegation}),
      TwistedLatticeAlgebra(kStandard, {{{0, -1}, {1, 0}}}),
      TwistedLatticeAlgebra({{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}},
                            {{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}}),
  };
  CHECK(algebras[2].group_order() == 4);
  for (const auto& alg : algebras)
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = random_symbol(gen, alg);
      const auto b = random_symbol(gen, alg);
      const auto c = random_symbol(gen, alg);
      const auto ab = multiply(alg, a, b);
      const auto ab_c = multiply(alg, ab.symbol, c);
      const auto bc = multiply(alg, b, c);
      const auto a_bc = multiply(alg, a, bc.symbol);
      CHECK(ab_c.symbol == a_bc.symbol);
      CHECK(ab.exponent + ab_c.exponent == bc.exponent + a_bc.exponent);
    }
}

TEST_CASE("Algebra validation", "[cocenter]") {
  CHECK_THROWS_AS(TwistedLatticeAlgebra({{0, 1}, {1, 0}}, {}), InvalidInput);
  CHECK_THROWS_AS(TwistedLatticeAlgebra(kStandard, {{{1, 1}, {0, 1}}, {{0, 1}, {1, 0}}}), InvalidInput);
  CHECK_THROWS_AS(TwistedLatticeAlgebra(kStandard, {{{1, 1}, {0, 1}}}, 50), Unsupported);
  CHECK_THROWS_AS(TwistedLatticeAlgebra(kStandard, {{{1, 0}}}), InvalidInput);
  const auto parsed = parse_algebra("{\"form\": [[0,1],[-1,0]]}", "[[[-1,0],[0,-1]]]");
  CHECK(parsed.group_order() == 2);
  CHECK(parsed.class_count() == 2);
  CHECK(parse_algebra("[[0,2],[-2,0]]", "trivial").group_order() == 1);
  CHECK_THROWS_AS(parse_algebra("[[0,1]", "trivial"), InvalidInput);
  CHECK_THROWS_AS(parse_algebra("[[0,1],[-1,0]]", "{\"gens\": []}"), InvalidInput);
}

TEST_CASE("Cocenter windows match elimination over Q(A)", "[cocenter][oracle]") {
  const std::vector<TwistedLatticeAlgebra> algebras{
      TwistedLatticeAlgebra(kStandard, {}),
      TwistedLatticeAlgebra({{0, 0}, {0, 0}}, {}),
      TwistedLatticeAlgebra(kStandard, {kNegation}),
      TwistedLatticeAlgebra({{0, 2}, {-2, 0}}, {{{0, -1}, {1, 0}}}),
  };
  for (const auto& alg : algebras)
    for (long r = 0; r <= 1; ++r)
      for (long R = r; R <= 2; ++R) CHECK(cocenter_dimension(alg, r, R, 10000).dim == oracle_dimension(alg, r, R));
}

TEST_CASE("Quantum torus cocenter stabilizes to one", "[cocenter]") {
  const TwistedLatticeAlgebra q(kStandard, {});
  const auto e = cocenter_window(q, 2, 6, 100000);
  CHECK(e.stabilized);
  CHECK(e.final_value == 1);
  for (const auto& w : e.by_generation_radius) CHECK(w.dim == 1);

  const TwistedLatticeAlgebra flat({{0, 0}, {0, 0}}, {});
  const auto f = cocenter_window(flat, 2, 6, 100000);
  CHECK_FALSE(f.stabilized);
  CHECK(f.final_value == 25);
  CHECK(f.widened_value == 49);

  CHECK_THROWS_AS(cocenter_dimension(q, 2, 6, 100), Unsupported);
  CHECK_THROWS_AS(cocenter_window(q, 2, 3, 1000), InvalidInput);
  CHECK(e.to_tsv().rfind("# ORACLE", 0) == 0);
  CHECK(e.to_json().find("\"stabilized\": true") != std::string::npos);
}

TEST_CASE("Window monotonicity and block decomposition", "[cocenter][property]") {
  const std::vector<TwistedLatticeAlgebra> algebras{
      TwistedLatticeAlgebra(kStandard, {}),
      TwistedLatticeAlgebra({{0, 0}, {0, 0}}, {}),
      TwistedLatticeAlgebra(kStandard, {kNegation}),
      TwistedLatticeAlgebra({{0, 3}, {-3, 0}}, {{{0, -1}, {1, 0}}}),
      TwistedLatticeAlgebra({{0, 1}, {-1, 0}}, {{{0, -1}, {1, -1}}}),
  };
  for (const auto& alg : algebras) {
    for (long r = 0; r <= 2; ++r) {
      long prev = -1;
      for (long R = r; R <= 4; ++R) {
        const auto w = cocenter_dimension(alg, r, R, 100000);
        if (prev >= 0) CHECK(w.dim <= prev);
        prev = w.dim;
        long block_sum = 0;
        for (const auto& b : w.blocks) block_sum += b.dim;
        CHECK(block_sum == w.dim);
        CHECK(w.blocks.size() == alg.class_count());
      }
    }
    for (long R = 2; R <= 4; ++R) {
      long prev = -1;
      for (long r = 0; r <= 2; ++r) {
        const long d = cocenter_dimension(alg, r, R, 100000).dim;
        CHECK(d >= prev);
        prev = d;
      }
    }
  }
}

TEST_CASE("Negation on the rank-two torus", "[cocenter]") {
  const TwistedLatticeAlgebra z(kStandard, {kNegation});
  const auto e = cocenter_window(z, 2, 6, 100000);
  CHECK(e.stabilized);
  CHECK(e.final_value == 5);
  const auto& blocks = e.by_generation_radius.back().blocks;
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].dim == 1);
  CHECK(blocks[1].dim == 4);
}
