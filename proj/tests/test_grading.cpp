#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "skein/errors.hpp"
#include "skein/grading.hpp"
#include "support/random.hpp"

using namespace skein;
using skein::testing::Gen;

namespace {

// Class of the weight in P/Q, found by searching for a fundamental weight
// w_j (or 0) with lambda - w_j in the root lattice plus multiples of
// (1, ..., 1). Weights are written in the e-basis of Z^N.
long coset_by_search(int n, const IrrepLabel& c) {
  std::vector<long> lambda(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j <= i; ++j) lambda[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(i)];
  long sum = 0;
  for (long x : lambda) sum += x;
  for (int j = 0; j < n; ++j) {
    // lambda - w_j - t*(1,...,1) must have coordinate sum zero for some t.
    for (long t = -sum - n; t <= sum + n; ++t)
      if (sum - j - t * n == 0) return j;
  }
  return -1;
}

LabelledSkeinCycle along(const NamedChain& rep, const GroupDatum& g, const IrrepLabel& label) {
  LabelledSkeinCycle s;
  s.group = g;
  for (std::size_t i = 0; i < rep.chain.size(); ++i)
    if (rep.chain[i] != 0) s.edges.push_back({i, rep.chain[i] > 0 ? 1 : -1, label});
  return s;
}

}  // namespace

TEST_CASE("Center degree of type A labels", "[grading]") {
  const GroupDatum sl2{Family::SL, 2};
  CHECK(center_degree(sl2, {1}) == 1);
  CHECK(center_degree(sl2, {2}) == 0);
  CHECK(center_degree({Family::SL, 3}, {0, 1}) == 2);
  for (int n = 2; n <= 6; ++n) CHECK(center_degree({Family::SL, n}, IrrepLabel(static_cast<std::size_t>(n - 1), 0)) == 0);

  CHECK_THROWS_AS(center_degree({Family::PGL, 2}, {1}), InvalidInput);
  CHECK_THROWS_AS(center_degree(sl2, {1, 1}), InvalidInput);
  CHECK_THROWS_AS(center_degree(sl2, {-1}), InvalidInput);

  CHECK(GroupDatum{Family::SL, 3}.center_order() == 3);
  CHECK(GroupDatum{Family::SL, 3}.fundamental_group_order() == 1);
  CHECK(GroupDatum{Family::PGL, 3}.fundamental_group_order() == 3);
  CHECK(GroupDatum{Family::PGL, 3}.name() == "PGL3");
}

TEST_CASE("Center degree matches the weight-lattice quotient", "[grading][oracle]") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<IrrepLabel> labels{{}};
    for (int i = 0; i < n - 1; ++i) {
      std::vector<IrrepLabel> next;
      for (const auto& l : labels)
        for (long c = 0; c <= 3; ++c) {
          auto m = l;
          m.push_back(c);
          next.push_back(m);
        }
      labels = next;
    }
    for (const auto& l : labels) CHECK(center_degree({Family::SL, n}, l) == coset_by_search(n, l));
  }
}

TEST_CASE("Center degree is additive and detects PGL labels", "[grading][property]") {
  Gen gen(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen.integer(2, 6);
    IrrepLabel a(static_cast<std::size_t>(n - 1));
    IrrepLabel b(static_cast<std::size_t>(n - 1));
    IrrepLabel sum(static_cast<std::size_t>(n - 1));
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = gen.integer(0, 5);
      b[i] = gen.integer(0, 5);
      sum[i] = a[i] + b[i];
    }
    const GroupDatum g{Family::SL, n};
    CHECK(center_degree(g, sum) == (center_degree(g, a) + center_degree(g, b)) % n);
    CHECK(descends_to_adjoint(n, a) == (center_degree(g, a) == 0));
  }
  // PGL_2 keeps exactly the even labels.
  for (long k = 0; k < 10; ++k) CHECK(descends_to_adjoint(2, {k}) == (k % 2 == 0));
}

TEST_CASE("Skein cycles and their classes", "[grading]") {
  const GroupDatum sl2{Family::SL, 2};
  const auto m = registry("sigma_g_x_s1", 2);
  CHECK(skein_cycle_class(m, LabelledSkeinCycle{sl2, {}, {}}) == std::vector<Integer>(5, 0));

  const auto core = skein_cycle_class(m, along(m.h1_basis[0], sl2, {1}));
  CHECK(core == std::vector<Integer>{1, 0, 0, 0, 0});
  for (const auto& rep : m.h1_basis) {
    CHECK(skein_cycle_class(m, along(rep, sl2, {2})) == std::vector<Integer>(5, 0));
    // Equal-degree labels give the same class.
    CHECK(skein_cycle_class(m, along(rep, sl2, {1})) == skein_cycle_class(m, along(rep, sl2, {3})));
  }
  CHECK(skein_cycle_class(m, along(m.h1_basis[3], sl2, {1})) == std::vector<Integer>{0, 0, 0, 1, 0});

  // Cutting the core circle open leaves an unbalanced coupon.
  auto broken = along(m.h1_basis[0], sl2, {1});
  broken.edges.pop_back();
  CHECK_THROWS_WITH(degree_cycle(m, broken), Catch::Matchers::ContainsSubstring("0-cell"));
  // A V(2) arc is balanced even when open: its degree is zero.
  auto even = along(m.h1_basis[0], sl2, {2});
  even.edges.pop_back();
  CHECK_NOTHROW(degree_cycle(m, even));

  // Three V(1) edges into an SL_3 coupon balance: 3 = 0 mod 3.
  const auto t3 = registry("torus3");
  const GroupDatum sl3{Family::SL, 3};
  const auto x = along(t3.h1_basis[0], sl3, {1, 0});
  const auto xbar = along(t3.h1_basis[0], sl3, {0, 1});
  const auto cx = skein_cycle_class(t3, x);
  const auto cxbar = skein_cycle_class(t3, xbar);
  CHECK(cx == std::vector<Integer>{1, 0, 0});
  CHECK(cxbar == std::vector<Integer>{2, 0, 0});
}

TEST_CASE("H2 action eigenvalues", "[grading]") {
  const auto t3 = registry("torus3");
  const auto e = h2_action_eigenvalue(t3, {1, 0, 0}, {1, 0, 0}, 2);
  CHECK(e.as_rational() == -1);
  CHECK(h2_action_eigenvalue(t3, {1, 0, 0}, {0, 1, 0}, 2).is_one());
  CHECK(h2_action_eigenvalue(t3, {0, 0, 0}, {1, 1, 1}, 2).as_rational() == 1);
  CHECK(h2_action_eigenvalue(t3, {1, 0, 0}, {1, 0, 0}, 3).to_string() == "exp(2*pi*i*1/3)");
  CHECK_THROWS_AS(h2_action_eigenvalue(t3, {1, 0, 0}, {1, 0, 0}, 3).as_rational(), Unsupported);
  CHECK(RootOfUnity{4, 2} == RootOfUnity{2, 1});

  // For N prime the eigenvalues over a basis of H_2 determine the H_1 class.
  for (const auto& m : {registry("torus3"), registry("sigma_g_x_s1", 1), registry("sphere2_x_s1")}) {
    const long n = 3;
    const std::size_t r = m.h1_basis.size();
    std::map<std::vector<long>, std::vector<Integer>> seen;
    std::vector<Integer> a(r);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == r) {
        std::vector<long> sig;
        for (std::size_t s = 0; s < m.h2_basis.size(); ++s) {
          std::vector<Integer> sigma(m.h2_basis.size());
          sigma[s] = 1;
          sig.push_back(h2_action_eigenvalue(m, sigma, a, n).exponent);
        }
        CHECK(seen.emplace(sig, a).second);
        return;
      }
      for (long v = 0; v < n; ++v) {
        a[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
    CHECK(seen.size() == static_cast<std::size_t>(std::pow(3, r)));
  }
}
