#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skein/dims.hpp"

namespace skein {

enum class Verdict { Pass, Fail, Ambiguous };
std::string to_string(Verdict v);

/// The Langlands dual pair (SL_N, PGL_N).
struct DualPair {
  long n = 2;
  std::string name() const;  // "sl2-pgl2"
};
/// Accepts "slN-pglN" with matching N.
DualPair parse_pair(const std::string& s);

enum class DualManifold { SigmaTimesCircle, Torus3 };
std::string to_string(DualManifold m);
/// Accepts "sigma" or "t3" (and the registry names).
DualManifold parse_dual_manifold(const std::string& s);

struct DualitySetup {
  DualPair pair;
  DualManifold manifold = DualManifold::SigmaTimesCircle;
  int genus = 1;
  Reading reading = Reading::LiteralGcd;
};

/// Identification Z/N -> (Z/N)^dual given by multiplication by a unit.
struct CenterIso {
  long unit = 1;
  long modulus = 2;
  std::vector<long> apply(const std::vector<long>& a) const;
};
std::vector<long> units_mod(long n);

/// Simply connected tables and the adjoint side obtained by transport:
/// ad(a,0) := sc(0,a), ad(0,a) := sc(a,0).
struct AssembledTables {
  DualitySetup setup;
  GradedDimTable sc_graded;
  std::optional<GradedDimTable> sc_cograded;
  Integer sc_total;
  std::string sc_total_provenance;
  std::optional<GradedDimTable> ad_graded;
  std::optional<Integer> ad_total;
  std::string ad_total_provenance;
  /// Adjoint total where a closed form is stated for it.
  std::optional<Integer> stated_ad_total;
  std::string stated_ad_provenance;
};

AssembledTables assemble(const DualitySetup& setup);

struct CheckOutcome {
  std::string name;
  std::string anchor;
  std::vector<std::pair<std::string, std::string>> inputs;
  Verdict verdict = Verdict::Ambiguous;
  std::string notes;
  std::string expected;
  std::string expected_provenance;
  std::string computed;
  std::string computed_provenance;
};

CheckOutcome check_total(const AssembledTables& t);
/// dim^{a,0} = dim^{0,iso(a)} for every class a, for one identification.
CheckOutcome check_swap(const AssembledTables& t, const CenterIso& iso);
/// check_swap for the identity unit, with notes on whether every other
/// unit gives the same verdict.
CheckOutcome check_swap_all_isos(const AssembledTables& t);
CheckOutcome check_graded_sum(const AssembledTables& t);
/// Transported adjoint data against the adjoint statements.
CheckOutcome check_gauging(const AssembledTables& t);

struct DualityReport {
  DualitySetup setup;
  std::vector<CheckOutcome> checks;

  bool has_fail() const;
  std::string to_json() const;
  std::string to_tsv() const;
  std::string to_pretty() const;
};

DualityReport run_duality_checks(const DualitySetup& setup);

}  // namespace skein
