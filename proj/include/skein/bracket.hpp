#pragma once

#include <array>
#include <istream>
#include <string>
#include <vector>

#include "skein/ratfunc.hpp"
#include "skein/tl.hpp"

namespace skein {

/// One crossing in arc-incidence form. Arcs are listed counterclockwise
/// starting from an incoming under-arc ('+', the usual PD convention); with
/// '-' the list starts from an over-arc instead, which is the same crossing
/// rotated by one step.
struct Crossing {
  std::array<int, 4> arcs{};
  bool standard = true;

  /// Arcs rotated so that arcs[0] is an under-arc.
  std::array<int, 4> normalized() const;
};

/// A framed tangle diagram in a rectangle. Every arc identifier occurs
/// exactly twice among crossings, boundary slots and free loops (a free loop
/// counts twice).
struct TangleDiagram {
  std::vector<Crossing> crossings;
  std::vector<int> bottom;
  std::vector<int> top;
  std::vector<int> free_loops;

  bool is_closed() const { return bottom.empty() && top.empty(); }
  std::vector<int> arc_ids() const;
};

/// Throws InvalidInput naming the offending arc.
void validate(const TangleDiagram& t);

/// Line format: `X a b c d [+|-]`, `B bottom: ... top: ...`, `O a`
/// (a crossingless circle), `#` comments.
TangleDiagram parse_diagram(std::istream& in);
TangleDiagram parse_diagram(const std::string& text);
std::string format_diagram(const TangleDiagram& t);

/// `upper` placed on top of `lower`; arcs are renumbered.
TangleDiagram stack(const TangleDiagram& lower, const TangleDiagram& upper);
/// Joins top slot i to bottom slot i around the right side.
TangleDiagram trace_closure(const TangleDiagram& t);

/// Braid word on `strands` strands; generator +i / -i crosses strands i and
/// i+1 (1-based). A positive generator resolves to A*id + A^-1*e_i.
TangleDiagram braid_tangle(int strands, const std::vector<int>& word);
TangleDiagram braid_closure(int strands, const std::vector<int>& word);
/// Inserts a curl into the given arc; a positive curl scales the bracket by -A^3.
TangleDiagram insert_kink(const TangleDiagram& t, int arc, bool positive);

/// Crossing resolution alpha*id + beta*(cup-cap) forced by Reidemeister II.
struct CrossingExpansion {
  RatFunc alpha;
  RatFunc beta;
  RatFunc loop_value;
};
CrossingExpansion derive_crossing_expansion(const RatFunc& alpha = RatFunc::A());

/// State sum over all smoothings.
TlElement resolve(const TangleDiagram& t);
/// Bracket of a closed diagram: empty link -> 1, unknot -> loop value.
RatFunc bracket_value(const TangleDiagram& link);

/// A closed defect curve, recorded by its signed transverse intersections
/// with arcs of the diagram, and the central character value it carries.
struct DefectMarking {
  struct Intersection {
    int arc;
    int sign;  // +1 or -1; 0 marks a tangency and is rejected
  };
  std::vector<Intersection> intersections;
  RatFunc character = RatFunc(1);
  int center_order = 2;
};

/// Parses lines `D arc +|-|0`.
DefectMarking parse_defect(std::istream& in, const RatFunc& character, int center_order);

/// Bracket in which every state is weighted by character^(signed
/// intersections of its loops with the defect).
RatFunc twisted_bracket(const TangleDiagram& link, const DefectMarking& defect);

}  // namespace skein
