#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

/// Number of partitions of n; P(0) = 1.
Integer partition_number(long n);
int mobius(long n);
/// Sum over d | n of d^3 mu(n/d).
Integer jordan_totient3(long n);

using ArithmeticFunction = std::function<Integer(long)>;
Integer dirichlet_convolution(const ArithmeticFunction& f, const ArithmeticFunction& g, long n);
std::vector<long> divisors(long n);

/// How the gcd entry of the graded SL_N table on T^3 is read.
enum class Reading { LiteralGcd, PartitionGcd };
std::string to_string(Reading r);
Reading parse_reading(const std::string& s);

/// One entry of a bigraded dimension table: grading class a, twist class b.
struct DimEntry {
  std::vector<long> a;
  std::vector<long> b;
  Integer dim;
  std::string provenance;
};

struct GradedDimTable {
  std::string group;
  std::string manifold;
  long modulus = 0;
  std::vector<DimEntry> entries;
  std::optional<Integer> total;
  std::string total_provenance;

  Integer sum() const;
  /// Entry with grading a and twist b, if stored.
  const DimEntry* find(const std::vector<long>& a, const std::vector<long>& b) const;
  std::string to_tsv() const;
  std::string to_json() const;
};

std::string class_descriptor(const std::vector<long>& v);

/// 2^{2g+1} + 2g - 1.
Integer total_sl2_sigma(int g);
/// Classes a = (eps; v) in H_1(Sigma_g x S^1, Z/2), eps on the circle
/// factor: g+1 at (0;0), g at (1;0), 1 otherwise. Entries (a, 0).
GradedDimTable graded_sl2_sigma(int g);
/// The same case table for the twisted, degree-zero entries (0, a).
GradedDimTable cograded_sl2_sigma(int g);

/// Sum over N = d e f of P(d) e^3 mu(f).
Integer total_sln_t3(long n);
/// Sum over d | N of P(d) J_3(N/d).
Integer total_sln_t3_convolution(long n);
/// Entries ((a,b,c), 0): gcd(a,b,c,N) or P(gcd(a,b,c,N)).
GradedDimTable graded_sln_t3(long n, Reading reading);
/// Entries (0, (a,b,c)) for N prime: 1 off zero, and the residual
/// total - (N^3 - 1) at zero. Throws InvalidInput for composite N.
GradedDimTable cograded_sln_t3_prime(long n);

bool is_prime(long n);

}  // namespace skein
