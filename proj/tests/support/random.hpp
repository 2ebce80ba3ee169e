#pragma once

#include <random>
#include <vector>

#include "skein/ratfunc.hpp"

namespace skein::testing {

/// Seeded generators for property tests; every test owns its own engine so
/// failures replay deterministically.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(int bound = 5) {
    int den = integer(1, bound);
    Rational r(integer(-bound, bound), den);
    r.canonicalize();
    return r;
  }

  LaurentPoly laurent(int max_terms = 3, int exp_bound = 3) {
    LaurentPoly p;
    const int terms = integer(0, max_terms);
    for (int i = 0; i < terms; ++i) p += LaurentPoly::monomial(rational(), integer(-exp_bound, exp_bound));
    return p;
  }

  RatFunc ratfunc() {
    LaurentPoly den = laurent(2, 2);
    if (den.is_zero()) den = LaurentPoly(1);
    return RatFunc(laurent(), den);
  }

  RatFunc nonzero_ratfunc() {
    RatFunc x;
    while (x.is_zero()) x = ratfunc();
    return x;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace skein::testing
