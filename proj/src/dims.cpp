#include "skein/dims.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "skein/errors.hpp"

namespace skein {

namespace {

constexpr int kMaxSigmaGenus = 12;
constexpr long kMaxTorusN = 200;

// Every vector in (Z/m)^len in lexicographic order.
std::vector<std::vector<long>> all_classes(long m, std::size_t len) {
  std::vector<std::vector<long>> out;
  std::vector<long> v(len, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = len;
    while (i > 0 && v[i - 1] == m - 1) v[--i] = 0;
    if (i == 0) return out;
    ++v[i - 1];
  }
}

bool all_zero(const std::vector<long>& v) {
  for (long x : v)
    if (x != 0) return false;
  return true;
}

void check_genus(int g) {
  if (g < 1) throw InvalidInput("genus must be at least 1");
  if (g > kMaxSigmaGenus) throw Unsupported("tables are enumerated up to genus " + std::to_string(kMaxSigmaGenus));
}

void check_n(long n, long lo) {
  if (n < lo) throw InvalidInput("N must be at least " + std::to_string(lo));
}

GradedDimTable sl2_sigma_table(int g, bool twisted) {
  check_genus(g);
  GradedDimTable t;
  t.group = "SL2";
  t.manifold = "Sigma_" + std::to_string(g) + " x S1";
  t.modulus = 2;
  t.total = total_sl2_sigma(g);
  t.total_provenance = "closed form 2^(2g+1)+2g-1 for SL2 on Sigma_g x S1";
  const std::string which = twisted ? "twisted degree-zero component" : "untwisted graded component";
  const std::vector<long> zero(static_cast<std::size_t>(2 * g + 1), 0);
  for (const auto& a : all_classes(2, zero.size())) {
    DimEntry e;
    bool surface_zero = true;
    for (std::size_t i = 1; i < a.size(); ++i) surface_zero = surface_zero && a[i] == 0;
    if (surface_zero && a[0] == 0) {
      e.dim = g + 1;
      e.provenance = "SL2 Sigma_g x S1 " + which + ", case a=(0,0): g+1";
    } else if (surface_zero) {
      e.dim = g;
      e.provenance = "SL2 Sigma_g x S1 " + which + ", case a=(1,0): g";
    } else {
      e.dim = 1;
      e.provenance = "SL2 Sigma_g x S1 " + which + ", case otherwise: 1";
    }
    e.a = twisted ? zero : a;
    e.b = twisted ? a : zero;
    t.entries.push_back(std::move(e));
  }
  return t;
}

std::string integer_json(const Integer& x) { return x.get_str(); }

}  // namespace

Integer partition_number(long n) {
  if (n < 0) return 0;
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (long part = 1; part <= n; ++part)
    for (long k = part; k <= n; ++k) p[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k - part)];
  return p[static_cast<std::size_t>(n)];
}

int mobius(long n) {
  if (n < 1) throw InvalidInput("mobius is defined for n >= 1");
  int result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<long> divisors(long n) {
  if (n < 1) throw InvalidInput("divisors are defined for n >= 1");
  std::vector<long> small;
  std::vector<long> large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Integer dirichlet_convolution(const ArithmeticFunction& f, const ArithmeticFunction& g, long n) {
  Integer s = 0;
  for (long d : divisors(n)) s += f(d) * g(n / d);
  return s;
}

Integer jordan_totient3(long n) {
  return dirichlet_convolution([](long d) -> Integer { return Integer(d) * d * d; }, [](long d) -> Integer { return mobius(d); }, n);
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::string to_string(Reading r) { return r == Reading::LiteralGcd ? "literal-gcd" : "partition-gcd"; }

Reading parse_reading(const std::string& s) {
  if (s == "literal-gcd") return Reading::LiteralGcd;
  if (s == "partition-gcd") return Reading::PartitionGcd;
  throw InvalidInput("unknown reading '" + s + "' (expected literal-gcd or partition-gcd)");
}

std::string class_descriptor(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Integer GradedDimTable::sum() const {
  Integer s = 0;
  for (const auto& e : entries) s += e.dim;
  return s;
}

const DimEntry* GradedDimTable::find(const std::vector<long>& a, const std::vector<long>& b) const {
  for (const auto& e : entries)
    if (e.a == a && e.b == b) return &e;
  return nullptr;
}

std::string GradedDimTable::to_tsv() const {
  std::ostringstream os;
  for (const auto& e : entries)
    os << class_descriptor(e.a) << '\t' << class_descriptor(e.b) << '\t' << e.dim.get_str() << '\t' << e.provenance
       << '\n';
  if (total) os << "total\t\t" << total->get_str() << '\t' << total_provenance << '\n';
  return os.str();
}

std::string GradedDimTable::to_json() const {
  nlohmann::ordered_json j;
  j["group"] = group;
  j["manifold"] = manifold;
  j["modulus"] = modulus;
  auto& rows = j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries)
    rows.push_back({{"a", e.a}, {"b", e.b}, {"dim", nlohmann::ordered_json::parse(integer_json(e.dim))},
                    {"provenance", e.provenance}});
  if (total) {
    j["total"] = nlohmann::ordered_json::parse(integer_json(*total));
    j["total_provenance"] = total_provenance;
  }
  return j.dump(2) + "\n";
}

Integer total_sl2_sigma(int g) {
  if (g < 1) throw InvalidInput("genus must be at least 1");
  Integer p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(2 * g + 1));
  return p2 + 2 * g - 1;
}

GradedDimTable graded_sl2_sigma(int g) { return sl2_sigma_table(g, false); }
GradedDimTable cograded_sl2_sigma(int g) { return sl2_sigma_table(g, true); }

Integer total_sln_t3(long n) {
  check_n(n, 1);
  Integer s = 0;
  for (long d : divisors(n))
    for (long e : divisors(n / d)) {
      const long f = n / d / e;
      s += partition_number(d) * Integer(e) * e * e * mobius(f);
    }
  return s;
}

Integer total_sln_t3_convolution(long n) {
  check_n(n, 1);
  return dirichlet_convolution([](long d) -> Integer { return partition_number(d); }, jordan_totient3, n);
}

GradedDimTable graded_sln_t3(long n, Reading reading) {
  check_n(n, 2);
  if (n > kMaxTorusN) throw Unsupported("T3 tables are enumerated up to N = " + std::to_string(kMaxTorusN));
  GradedDimTable t;
  t.group = "SL" + std::to_string(n);
  t.manifold = "T3";
  t.modulus = n;
  t.total = total_sln_t3(n);
  t.total_provenance = "sum over N=d*e*f of P(d)*e^3*mu(f) for SL_N on T3";
  const std::vector<long> zero(3, 0);
  for (const auto& a : all_classes(n, 3)) {
    const long g = std::gcd(std::gcd(std::gcd(a[0], a[1]), a[2]), n);
    DimEntry e;
    e.a = a;
    e.b = zero;
    if (reading == Reading::LiteralGcd) {
      e.dim = g;
      e.provenance = "SL_N T3 graded component, gcd(a,b,c,N) read literally";
    } else {
      e.dim = partition_number(g);
      e.provenance = "SL_N T3 graded component, gcd(a,b,c,N) read as P(gcd)";
    }
    t.entries.push_back(std::move(e));
  }
  return t;
}

GradedDimTable cograded_sln_t3_prime(long n) {
  check_n(n, 2);
  if (!is_prime(n)) throw InvalidInput("twisted T3 table is stated for prime N only; got " + std::to_string(n));
  if (n > kMaxTorusN) throw Unsupported("T3 tables are enumerated up to N = " + std::to_string(kMaxTorusN));
  GradedDimTable t;
  t.group = "SL" + std::to_string(n);
  t.manifold = "T3";
  t.modulus = n;
  t.total = total_sln_t3(n);
  t.total_provenance = "sum over N=d*e*f of P(d)*e^3*mu(f) for SL_N on T3";
  const std::vector<long> zero(3, 0);
  for (const auto& b : all_classes(n, 3)) {
    DimEntry e;
    e.a = zero;
    e.b = b;
    if (all_zero(b)) {
      e.dim = *t.total - (Integer(n) * n * n - 1);
      e.provenance = "derived residual: total minus N^3-1 nonzero twisted classes";
    } else {
      e.dim = 1;
      e.provenance = "SL_N T3 twisted degree-zero component for prime N, nonzero twist: 1";
    }
    t.entries.push_back(std::move(e));
  }
  return t;
}

}  // namespace skein
