#include "skein/webs.hpp"

#include <optional>

#include "skein/bracket.hpp"
#include "skein/errors.hpp"
#include "skein/linalg.hpp"

namespace skein {

namespace {

void check_piece(const WebPiece& p) {
  using K = WebPiece::Kind;
  const bool ok = (p.kind == K::Strand && p.in == 1 && p.out == 1) || (p.kind == K::Cup && p.in == 0 && p.out == 2) ||
                  (p.kind == K::Cap && p.in == 2 && p.out == 0) ||
                  (p.kind == K::Vertex && p.in >= 0 && p.out >= 0 && p.in + p.out == 3);
  if (!ok)
    throw InvalidInput("valence violation: piece with " + std::to_string(p.in) + " inputs and " +
                       std::to_string(p.out) + " outputs");
}

int layer_in(const std::vector<WebPiece>& layer) {
  int n = 0;
  for (const auto& p : layer) n += p.in;
  return n;
}

int layer_out(const std::vector<WebPiece>& layer) {
  int n = 0;
  for (const auto& p : layer) n += p.out;
  return n;
}

TlElement cable_layer(const std::vector<WebPiece>& layer) {
  TlElement x = TlElement::identity(0);
  for (const auto& p : layer) x = tensor(x, TlElement::from_matching(cable_piece(p)));
  return x;
}

}  // namespace

int WebDiagram::bottom_edges() const { return layers.empty() ? 0 : layer_in(layers.front()); }
int WebDiagram::top_edges() const { return layers.empty() ? 0 : layer_out(layers.back()); }

void validate(const WebDiagram& w) {
  for (std::size_t i = 0; i < w.layers.size(); ++i) {
    for (const auto& p : w.layers[i]) check_piece(p);
    if (i > 0 && layer_in(w.layers[i]) != layer_out(w.layers[i - 1]))
      throw InvalidInput("web layer " + std::to_string(i) + " takes " + std::to_string(layer_in(w.layers[i])) +
                         " edges but receives " + std::to_string(layer_out(w.layers[i - 1])));
  }
}

TlElement clasp(int edges) {
  const TlElement p = jones_wenzl(2);
  TlElement x = TlElement::identity(0);
  for (int i = 0; i < edges; ++i) x = tensor(x, p);
  return x;
}

PlanarMatching cable_piece(const WebPiece& p) {
  check_piece(p);
  const int k = p.in + p.out;
  std::vector<std::pair<int, int>> pairs;
  for (int e = 0; e < k; ++e) pairs.emplace_back(2 * e + 1, (2 * e + 2) % (2 * k));
  return matching_from_circular_pairs(2 * p.in, 2 * p.out, pairs);
}

CabledElement cable(const WebDiagram& w) {
  validate(w);
  CabledElement c;
  c.bottom_edges = w.bottom_edges();
  c.top_edges = w.top_edges();
  TlElement x = clasp(c.bottom_edges);
  for (const auto& layer : w.layers) x = compose(compose(x, cable_layer(layer)), clasp(layer_out(layer)));
  c.element = std::move(x);
  return c;
}

namespace webs {

WebDiagram identity2() { return {{{WebPiece::strand(), WebPiece::strand()}}}; }
WebDiagram h_vertical() { return {{{WebPiece::vertex(2, 1)}, {WebPiece::vertex(1, 2)}}}; }
WebDiagram cup_cap() { return {{{WebPiece::cap()}, {WebPiece::cup()}}}; }
WebDiagram h_horizontal() {
  return {{{WebPiece::vertex(1, 2), WebPiece::strand()}, {WebPiece::strand(), WebPiece::vertex(2, 1)}}};
}
WebDiagram circle() { return {{{WebPiece::cup()}, {WebPiece::cap()}}}; }
WebDiagram theta() {
  return {{{WebPiece::cup()}, {WebPiece::vertex(1, 2), WebPiece::strand()}, {WebPiece::vertex(3, 0)}}};
}

}  // namespace webs

std::optional<std::vector<RatFunc>> coordinates_in(const TlElement& x, const std::vector<TlElement>& basis) {
  const auto target = x.coordinates();
  Matrix<RatFunc> m(target.size(), std::vector<RatFunc>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto col = basis[j].coordinates();
    for (std::size_t i = 0; i < col.size(); ++i) m[i][j] = col[i];
  }
  return solve_linear(m, target, basis.size());
}

EndSpaceBasis end_space_v2v2() {
  EndSpaceBasis b;
  b.labels = {"identity", "H", "U"};
  for (const auto& w : {webs::identity2(), webs::h_vertical(), webs::cup_cap()}) b.elements.push_back(cable(w));
  Matrix<RatFunc> m;
  for (const auto& e : b.elements) m.push_back(e.element.coordinates());
  b.rank = kernel_and_rank_over_ratfunc(m).rank;
  if (b.rank != 3) throw Unsupported("End(V(2) x V(2)) basis degenerated to rank " + std::to_string(b.rank));
  return b;
}

CabledElement cabled_braiding() {
  // Strands 1,2 cross over strands 3,4 as one ribbon.
  const TlElement crossing = resolve(braid_tangle(4, {2, 1, 3, 2}));
  return {compose(compose(clasp(2), crossing), clasp(2)), 2, 2};
}

AbcSolution solve_abc() {
  const EndSpaceBasis basis = end_space_v2v2();
  std::vector<TlElement> elems;
  for (const auto& e : basis.elements) elems.push_back(e.element);
  const TlElement braiding = cabled_braiding().element;
  const auto coords = coordinates_in(braiding, elems);
  if (!coords) throw Unsupported("braiding is not in the span of the basis");
  AbcSolution s;
  s.a = (*coords)[0];
  s.b = (*coords)[1];
  s.c = (*coords)[2];
  const TlElement residual = braiding - (s.a * elems[0] + s.b * elems[1] + s.c * elems[2]);
  s.residual_zero = residual.is_zero();
  const auto h = coordinates_in(cable(webs::h_horizontal()).element, elems);
  if (!h) throw Unsupported("rotated vertex pair is not in the span of the basis");
  s.h_horizontal = *h;
  return s;
}

}  // namespace skein
