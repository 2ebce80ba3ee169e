#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skein/ratfunc.hpp"
#include "skein/tl.hpp"

namespace skein {

/// One piece of a web layer. Every edge carries V(2).
struct WebPiece {
  enum class Kind { Strand, Cup, Cap, Vertex };
  Kind kind = Kind::Strand;
  int in = 1;
  int out = 1;

  static WebPiece strand() { return {Kind::Strand, 1, 1}; }
  static WebPiece cup() { return {Kind::Cup, 0, 2}; }
  static WebPiece cap() { return {Kind::Cap, 2, 0}; }
  static WebPiece vertex(int in, int out) { return {Kind::Vertex, in, out}; }
};

/// A web read bottom to top; each layer's input edge count must equal the
/// previous layer's output edge count.
struct WebDiagram {
  std::vector<std::vector<WebPiece>> layers;

  int bottom_edges() const;
  int top_edges() const;
};

/// Throws InvalidInput on a valence violation or an edge-count mismatch.
void validate(const WebDiagram& w);

/// A web after doubling every edge; clasped by jones_wenzl(2) on each edge.
struct CabledElement {
  TlElement element;
  int bottom_edges = 0;
  int top_edges = 0;
};

/// jones_wenzl(2) placed on each of `edges` doubled edges.
TlElement clasp(int edges);
/// Unclasped connector for one piece: edge e takes circular slots 2e, 2e+1
/// and slot 2e+1 is joined to slot 2e+2 (cyclically).
PlanarMatching cable_piece(const WebPiece& p);
CabledElement cable(const WebDiagram& w);

namespace webs {
WebDiagram identity2();
/// Two edges merge into one and split again.
WebDiagram h_vertical();
WebDiagram cup_cap();
/// The vertex pair rotated by a quarter turn.
WebDiagram h_horizontal();
WebDiagram circle();
WebDiagram theta();
}  // namespace webs

struct EndSpaceBasis {
  std::vector<std::string> labels;
  std::vector<CabledElement> elements;
  int rank = 0;
};

/// {identity, vertical vertex pair, cup-cap} in End(V(2) x V(2)); throws
/// Unsupported if they are not independent over Q(A).
EndSpaceBasis end_space_v2v2();

/// Clasped crossing of two doubled strands.
CabledElement cabled_braiding();

/// Coordinates of x against the listed elements; nullopt when x is outside
/// their span.
std::optional<std::vector<RatFunc>> coordinates_in(const TlElement& x, const std::vector<TlElement>& basis);

struct AbcSolution {
  RatFunc a;
  RatFunc b;
  RatFunc c;
  /// The quarter-turned vertex pair in the same basis.
  std::vector<RatFunc> h_horizontal;
  bool residual_zero = false;
};

/// braiding = a*identity + b*H + c*U.
AbcSolution solve_abc();

}  // namespace skein
