#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "skein/ratfunc.hpp"

namespace skein {

/// A planar perfect matching between `bottom` points and `top` points.
///
/// Points are numbered 0..bottom-1 along the bottom edge (left to right) and
/// bottom..bottom+top-1 along the top edge (left to right). The partner array
/// is the canonical form, so equal diagrams compare equal.
class PlanarMatching {
 public:
  PlanarMatching() = default;
  /// Validates that partner is an involution without fixed points and that
  /// the pairing is non-crossing on the rectangle boundary.
  PlanarMatching(int bottom, int top, std::vector<int> partner);

  static PlanarMatching identity(int n);
  /// Cup-cap generator e_i on n strands joining strands i and i+1 (0-based).
  static PlanarMatching cup_cap(int n, int i);

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int size() const { return bottom_ + top_; }
  int partner(int point) const { return partner_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& partners() const { return partner_; }
  std::vector<std::pair<int, int>> pairs() const;

  /// Position of a point when walking the boundary counterclockwise:
  /// bottom left to right, then top right to left.
  int circular_position(int point) const;
  int point_at_circular_position(int pos) const;

  friend auto operator<=>(const PlanarMatching&, const PlanarMatching&) = default;
  friend bool operator==(const PlanarMatching&, const PlanarMatching&) = default;

  std::string to_string() const;

 private:
  int bottom_ = 0;
  int top_ = 0;
  std::vector<int> partner_;
};

/// All planar matchings with the given boundary counts, sorted.
std::vector<PlanarMatching> tl_basis(int bottom, int top);

/// Builds a matching from pairs of circular positions (see circular_position).
PlanarMatching matching_from_circular_pairs(int bottom, int top,
                                            const std::vector<std::pair<int, int>>& circular_pairs);

struct StackedMatching {
  PlanarMatching result;
  int loops = 0;
};

/// Places `upper` on top of `lower` (lower.top() == upper.bottom()).
StackedMatching stack_matchings(const PlanarMatching& lower, const PlanarMatching& upper);
PlanarMatching juxtapose(const PlanarMatching& left, const PlanarMatching& right);
/// Number of loops after joining top point i to bottom point i around the right.
int closure_loops(const PlanarMatching& m);

/// The loop value -A^2 - A^-2.
const LaurentPoly& loop_value_poly();
RatFunc loop_value();
/// [k] = (A^{2k} - A^{-2k}) / (A^2 - A^{-2}).
RatFunc quantum_integer(int k);

/// Morphism in the Temperley-Lieb category: a Q(A)-linear combination of
/// planar matchings sharing the same boundary counts.
class TlElement {
 public:
  TlElement(int bottom = 0, int top = 0) : bottom_(bottom), top_(top) {}
  static TlElement from_matching(const PlanarMatching& m, const RatFunc& c = RatFunc(1));
  static TlElement identity(int n) { return from_matching(PlanarMatching::identity(n)); }
  static TlElement generator(int n, int i) { return from_matching(PlanarMatching::cup_cap(n, i)); }

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const std::map<PlanarMatching, RatFunc>& terms() const { return terms_; }
  RatFunc coefficient(const PlanarMatching& m) const;
  bool is_zero() const { return terms_.empty(); }
  /// Coordinates in tl_basis(bottom, top).
  std::vector<RatFunc> coordinates() const;

  void add_term(const PlanarMatching& m, const RatFunc& c);

  TlElement& operator+=(const TlElement& o);
  TlElement& operator-=(const TlElement& o);
  friend TlElement operator+(TlElement a, const TlElement& b) { return a += b; }
  friend TlElement operator-(TlElement a, const TlElement& b) { return a -= b; }
  friend TlElement operator*(const RatFunc& c, const TlElement& x);
  friend bool operator==(const TlElement&, const TlElement&) = default;

 private:
  int bottom_;
  int top_;
  std::map<PlanarMatching, RatFunc> terms_;
};

/// `upper` stacked on top of `lower`; closed loops become factors of the loop
/// value. Throws InvalidInput on a boundary mismatch.
TlElement compose(const TlElement& lower, const TlElement& upper);
TlElement tensor(const TlElement& left, const TlElement& right);
/// Markov trace of a square element.
RatFunc closure(const TlElement& f);
/// Jones-Wenzl idempotent on n strands via the Wenzl recursion.
TlElement jones_wenzl(int n);

std::string to_string(const TlElement& x);
std::ostream& operator<<(std::ostream& os, const TlElement& x);

}  // namespace skein
