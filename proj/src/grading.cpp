#include "skein/grading.hpp"

#include <numeric>

#include "skein/errors.hpp"

namespace skein {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

void check_label(int n, const IrrepLabel& label) {
  if (n < 2) throw InvalidInput("rank parameter N must be at least 2");
  if (static_cast<int>(label.size()) != n - 1)
    throw InvalidInput("an SL_" + std::to_string(n) + " label needs " + std::to_string(n - 1) + " coordinates");
  for (long c : label)
    if (c < 0) throw InvalidInput("highest weight coordinates must be nonnegative");
}

}  // namespace

std::string GroupDatum::name() const { return (family == Family::SL ? "SL" : "PGL") + std::to_string(n); }

long center_degree(const GroupDatum& g, const IrrepLabel& label) {
  if (g.family != Family::SL) throw InvalidInput("center degree is defined for SL_N labels");
  check_label(g.n, label);
  long d = 0;
  for (std::size_t i = 0; i < label.size(); ++i) d = mod(d + static_cast<long>(i + 1) * mod(label[i], g.n), g.n);
  return d;
}

bool descends_to_adjoint(int n, const IrrepLabel& label) {
  return center_degree({Family::SL, n}, label) == 0;
}

CycleOne degree_cycle(const Manifold& m, const LabelledSkeinCycle& s) {
  const long n = s.group.n;
  std::vector<Integer> chain(m.complex.cells[1]);
  for (const auto& e : s.edges) {
    if (e.cell >= chain.size()) throw InvalidInput("edge on unknown 1-cell " + std::to_string(e.cell));
    if (e.orientation != 1 && e.orientation != -1) throw InvalidInput("edge orientation must be +1 or -1");
    chain[e.cell] += e.orientation * center_degree(s.group, e.label);
  }
  const auto bd = m.complex.d[0] * chain;
  for (std::size_t v = 0; v < bd.size(); ++v)
    if (mod_floor(bd[v], n) != 0) {
      const std::string where = m.cell_labels[0].empty() ? std::to_string(v) : m.cell_labels[0][v];
      throw InvalidInput("coupon at 0-cell " + where + ": incoming minus outgoing degree is " +
                         mod_floor(bd[v], n).get_str() + " mod " + std::to_string(n) + ", not 0");
    }
  return make_cycle(m, std::move(chain), n);
}

std::vector<Integer> skein_cycle_class(const Manifold& m, const LabelledSkeinCycle& s) {
  const CycleOne c = degree_cycle(m, s);
  return class_coordinates(m, 1, c.chain, c.modulus);
}

Rational RootOfUnity::as_rational() const {
  const long e = mod(exponent, order);
  if (e == 0) return 1;
  if (2 * e == order) return -1;
  throw Unsupported("root of unity " + to_string() + " is not rational");
}

std::string RootOfUnity::to_string() const {
  const long e = mod(exponent, order);
  if (e == 0) return "1";
  if (2 * e == order) return "-1";
  const long g = std::gcd(e, order);
  return "exp(2*pi*i*" + std::to_string(e / g) + "/" + std::to_string(order / g) + ")";
}

bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
  return mod(a.exponent, a.order) * b.order == mod(b.exponent, b.order) * a.order;
}

RootOfUnity h2_action_eigenvalue(const Manifold& m, const std::vector<Integer>& sigma_coords,
                                 const std::vector<Integer>& a_coords, long modulus, long chi_power) {
  const Integer p = intersection_pairing(m, sigma_coords, a_coords, modulus);
  const Integer e = mod_floor(p * chi_power, modulus);
  return {modulus, e.get_si()};
}

}  // namespace skein
