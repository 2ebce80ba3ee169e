#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <numeric>

#include "skein/dims.hpp"
#include "skein/errors.hpp"
#include "support/random.hpp"

using namespace skein;
using skein::testing::Gen;

namespace {

// Partitions of n into parts of size at most max_part, by recursion.
long count_partitions(long n, long max_part) {
  if (n == 0) return 1;
  long c = 0;
  for (long p = std::min(n, max_part); p >= 1; --p) c += count_partitions(n - p, p);
  return c;
}

long coprime_triples(long n) {
  long c = 0;
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long d = 0; d < n; ++d)
        if (std::gcd(std::gcd(std::gcd(a, b), d), n) == 1) ++c;
  return c;
}

}  // namespace

TEST_CASE("Partition numbers", "[dims][oracle]") {
  CHECK(partition_number(0) == 1);
  CHECK(partition_number(4) == 5);
  CHECK(partition_number(10) == 42);
  CHECK(partition_number(100) == Integer("190569292"));
  for (long n = 0; n <= 30; ++n) CHECK(partition_number(n) == count_partitions(n, n));
}

TEST_CASE("Mobius and the third Jordan totient", "[dims][oracle]") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK_THROWS_AS(mobius(0), InvalidInput);
  CHECK(jordan_totient3(1) == 1);
  CHECK(jordan_totient3(2) == 7);
  CHECK(jordan_totient3(6) == jordan_totient3(2) * jordan_totient3(3));
  CHECK(jordan_totient3(6) == 182);
  for (long n = 1; n <= 12; ++n) CHECK(jordan_totient3(n) == coprime_triples(n));
}

TEST_CASE("Dirichlet convolution is associative and commutative", "[dims][property]") {
  Gen gen(11);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Integer> fv(61), gv(61), hv(61);
    for (long n = 1; n <= 60; ++n) {
      fv[n] = gen.integer(-5, 5);
      gv[n] = gen.integer(-5, 5);
      hv[n] = gen.integer(-5, 5);
    }
    const ArithmeticFunction f = [&](long n) -> Integer { return fv[n]; };
    const ArithmeticFunction g = [&](long n) -> Integer { return gv[n]; };
    const ArithmeticFunction h = [&](long n) -> Integer { return hv[n]; };
    const ArithmeticFunction fg = [&](long n) -> Integer { return dirichlet_convolution(f, g, n); };
    const ArithmeticFunction gh = [&](long n) -> Integer { return dirichlet_convolution(g, h, n); };
    for (long n = 1; n <= 60; ++n) {
      CHECK(dirichlet_convolution(f, g, n) == dirichlet_convolution(g, f, n));
      CHECK(dirichlet_convolution(fg, h, n) == dirichlet_convolution(f, gh, n));
    }
  }
}

TEST_CASE("SL2 on Sigma_g x S1", "[dims]") {
  CHECK(total_sl2_sigma(1) == 9);
  CHECK(total_sl2_sigma(2) == 35);
  CHECK(total_sl2_sigma(3) == 133);
  CHECK_THROWS_AS(total_sl2_sigma(0), InvalidInput);

  const auto g1 = graded_sl2_sigma(1);
  CHECK(g1.entries.size() == 8);
  CHECK(g1.find({0, 0, 0}, {0, 0, 0})->dim == 2);
  CHECK(g1.find({1, 0, 0}, {0, 0, 0})->dim == 1);
  CHECK(g1.find({1, 1, 0}, {0, 0, 0})->dim == 1);

  const auto c2 = cograded_sl2_sigma(2);
  CHECK(c2.find({0, 0, 0, 0, 0}, {0, 0, 0, 0, 0})->dim == 3);
  CHECK(c2.find({0, 0, 0, 0, 0}, {1, 0, 0, 0, 0})->dim == 2);
  CHECK(c2.find({0, 0, 0, 0, 0}, {0, 1, 0, 0, 1})->dim == 1);
  CHECK(c2.find({1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}) == nullptr);

  for (int g = 1; g <= 8; ++g) {
    CHECK(graded_sl2_sigma(g).sum() == total_sl2_sigma(g));
    CHECK(cograded_sl2_sigma(g).sum() == total_sl2_sigma(g));
  }
  for (const auto& e : g1.entries) CHECK_FALSE(e.provenance.empty());
}

TEST_CASE("SL_N on T3 totals", "[dims]") {
  CHECK(total_sln_t3(1) == 1);
  CHECK(total_sln_t3(2) == 9);
  CHECK(total_sln_t3(3) == 29);
  CHECK(total_sln_t3(4) == 75);
  CHECK(total_sln_t3(5) == 131);
  for (long n = 1; n <= 60; ++n) CHECK(total_sln_t3(n) == total_sln_t3_convolution(n));
  // Sigma_1 x S1 is T3.
  CHECK(total_sl2_sigma(1) == total_sln_t3(2));
}

TEST_CASE("SL_N on T3 graded tables under both readings", "[dims]") {
  const auto lit2 = graded_sln_t3(2, Reading::LiteralGcd);
  CHECK(lit2.find({0, 0, 0}, {0, 0, 0})->dim == 2);
  CHECK(graded_sln_t3(3, Reading::LiteralGcd).find({1, 2, 0}, {0, 0, 0})->dim == 1);

  for (long n : {2L, 3L}) {
    CHECK(graded_sln_t3(n, Reading::LiteralGcd).sum() == total_sln_t3(n));
    CHECK(graded_sln_t3(n, Reading::PartitionGcd).sum() == total_sln_t3(n));
  }
  CHECK(graded_sln_t3(4, Reading::LiteralGcd).sum() == 74);
  CHECK(graded_sln_t3(5, Reading::LiteralGcd).sum() == 129);
  for (long n = 2; n <= 12; ++n) {
    CHECK(graded_sln_t3(n, Reading::PartitionGcd).sum() == total_sln_t3(n));
    // Literal sum grouped by gcd value: sum of d * J3(N/d).
    CHECK(graded_sln_t3(n, Reading::LiteralGcd).sum() ==
          dirichlet_convolution([](long d) -> Integer { return d; }, jordan_totient3, n));
  }
  CHECK(parse_reading("partition-gcd") == Reading::PartitionGcd);
  CHECK_THROWS_AS(parse_reading("gcd"), InvalidInput);
}

TEST_CASE("Twisted T3 table for prime N", "[dims]") {
  const auto t2 = cograded_sln_t3_prime(2);
  CHECK(t2.find({0, 0, 0}, {1, 1, 0})->dim == 1);
  CHECK(t2.find({0, 0, 0}, {0, 0, 0})->dim == 2);
  const auto t3 = cograded_sln_t3_prime(3);
  CHECK(t3.find({0, 0, 0}, {0, 0, 0})->dim == 3);
  CHECK(t3.find({0, 0, 0}, {0, 0, 0})->provenance.find("derived residual") != std::string::npos);
  for (long p : {2L, 3L, 5L, 7L}) {
    CHECK(cograded_sln_t3_prime(p).sum() == total_sln_t3(p));
    CHECK(cograded_sln_t3_prime(p).find({0, 0, 0}, {0, 0, 0})->dim == partition_number(p));
  }
  CHECK_THROWS_AS(cograded_sln_t3_prime(4), InvalidInput);
}

TEST_CASE("Table emission", "[dims]") {
  const auto t = graded_sl2_sigma(1);
  const std::string tsv = t.to_tsv();
  CHECK(tsv.find("(0,0,0)\t(0,0,0)\t2\t") == 0);
  std::size_t rows = 0;
  for (char ch : tsv) rows += ch == '\n';
  CHECK(rows == 9);
  const std::string json = t.to_json();
  CHECK(json.find("\"total\": 9") != std::string::npos);
  CHECK(json.find("\"provenance\"") != std::string::npos);
}
