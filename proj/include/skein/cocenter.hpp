#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace skein {

using IntVec = std::vector<long>;
using SmallMatrix = std::vector<std::vector<long>>;

/// Lattice Z^n with a skew form S and a finite group W of integer matrices
/// preserving S. Basis symbols X^v w; see multiply.
class TwistedLatticeAlgebra {
 public:
  /// Closes the generators under multiplication. Throws InvalidInput if S
  /// is not skew or a generator does not preserve S, and Unsupported if the
  /// group exceeds max_group elements.
  TwistedLatticeAlgebra(SmallMatrix form, const std::vector<SmallMatrix>& generators, std::size_t max_group = 5040);

  std::size_t rank() const { return form_.size(); }
  const SmallMatrix& form() const { return form_; }
  std::size_t group_order() const { return elements_.size(); }
  const SmallMatrix& element(std::size_t w) const { return elements_[w]; }
  static constexpr std::size_t identity() { return 0; }
  std::size_t product(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t conjugacy_class(std::size_t a) const { return class_of_[a]; }
  std::size_t class_count() const { return class_reps_.size(); }
  std::size_t class_representative(std::size_t c) const { return class_reps_[c]; }

  IntVec act(std::size_t w, const IntVec& v) const;
  long pairing(const IntVec& u, const IntVec& v) const;

 private:
  SmallMatrix form_;
  std::vector<SmallMatrix> elements_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> class_reps_;
};

struct LatticeSymbol {
  IntVec v;
  std::size_t w = 0;
  auto operator<=>(const LatticeSymbol&) const = default;
};

/// A^exponent * symbol.
struct ScaledSymbol {
  long exponent = 0;
  LatticeSymbol symbol;
  bool operator==(const ScaledSymbol&) const = default;
};

/// (X^u w)(X^v w') = A^{u^T S (w v)} X^{u + w v} (w w').
ScaledSymbol multiply(const TwistedLatticeAlgebra& alg, const LatticeSymbol& x, const LatticeSymbol& y);

/// Basis symbols X^v w with |v|_inf <= radius.
std::vector<LatticeSymbol> window_basis(const TwistedLatticeAlgebra& alg, long radius);

struct CocenterBlock {
  std::size_t class_index = 0;
  std::string label;
  long dim = 0;
};

/// dim span{basis within r} / (span{[x,y] : x,y within R} meet span{basis within r}).
struct WindowResult {
  long r = 0;
  long R = 0;
  long dim = 0;
  std::size_t basis_size = 0;
  std::size_t commutators = 0;
  std::vector<CocenterBlock> blocks;
};

/// Throws Unsupported when the generation window has more than cap symbols.
WindowResult cocenter_dimension(const TwistedLatticeAlgebra& alg, long r, long R, std::size_t cap);

/// Estimates for R = r .. R_max at fixed r. Stabilized when the last three
/// values agree and widening the basis window to r+1 at R_max leaves the
/// value unchanged.
struct CocenterEstimate {
  long r = 0;
  std::vector<WindowResult> by_generation_radius;
  long widened_value = 0;
  bool stabilized = false;
  long final_value = 0;

  std::string to_tsv() const;
  std::string to_json() const;
};

CocenterEstimate cocenter_window(const TwistedLatticeAlgebra& alg, long r, long R_max, std::size_t cap);

/// Form as a JSON matrix, or {"form": matrix}. Group as "trivial", a JSON
/// list of generator matrices, or {"generators": [...]}.
TwistedLatticeAlgebra parse_algebra(const std::string& form_json, const std::string& group_json);

}  // namespace skein
