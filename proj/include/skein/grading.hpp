#pragma once

#include <string>
#include <vector>

#include "skein/homology.hpp"

namespace skein {

enum class Family { SL, PGL };

/// Type-A group datum. SL_N has center Z/N and trivial fundamental group;
/// PGL_N the other way round.
struct GroupDatum {
  Family family = Family::SL;
  int n = 2;

  int center_order() const { return family == Family::SL ? n : 1; }
  int fundamental_group_order() const { return family == Family::PGL ? n : 1; }
  std::string name() const;
};

/// Highest weight in fundamental-weight coordinates (c_1, ..., c_{N-1}).
using IrrepLabel = std::vector<long>;

/// Central character of V(label): sum of i * c_i mod N.
long center_degree(const GroupDatum& g, const IrrepLabel& label);
/// Whether V(label) descends to PGL_N: exactly the degree-zero labels.
bool descends_to_adjoint(int n, const IrrepLabel& label);

struct LabelledEdge {
  std::size_t cell = 0;
  int orientation = 1;
  IrrepLabel label;
};

/// A ribbon graph recorded on the 1-skeleton of a registry complex. Coupons
/// sit at 0-cells; strands meet nowhere else.
struct LabelledSkeinCycle {
  GroupDatum group;
  std::vector<LabelledEdge> edges;
  std::vector<std::size_t> coupons;
};

/// Degree-weighted 1-chain mod N. Throws InvalidInput naming the 0-cell
/// where the degrees do not sum to zero.
CycleOne degree_cycle(const Manifold& m, const LabelledSkeinCycle& s);
/// Coordinates of the degree cycle in the labelled H_1 basis, mod N.
std::vector<Integer> skein_cycle_class(const Manifold& m, const LabelledSkeinCycle& s);

/// exp(2 pi i exponent / order), kept exact.
struct RootOfUnity {
  long order = 1;
  long exponent = 0;

  bool is_one() const { return exponent % order == 0; }
  /// Only for values +1 and -1.
  Rational as_rational() const;
  std::string to_string() const;
  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b);
};

/// chi(<sigma, a>) for the character chi(k) = exp(2 pi i chi_power k / N).
RootOfUnity h2_action_eigenvalue(const Manifold& m, const std::vector<Integer>& sigma_coords,
                                 const std::vector<Integer>& a_coords, long modulus, long chi_power = 1);

}  // namespace skein
