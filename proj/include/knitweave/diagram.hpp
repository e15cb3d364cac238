#pragma once

// Oriented planar link diagrams as PD codes.
//
// A crossing records its four arcs by role. The cyclic (counterclockwise)
// port order is (under_in, over_in, under_out, over_out) for a positive
// crossing and (under_in, over_out, under_out, over_in) for a negative one.
// Every arc leaves exactly one port and enters exactly one port.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "knitweave/braid.hpp"
#include "knitweave/errors.hpp"

namespace knitweave {

struct Crossing {
  int under_in = 0;
  int over_in = 0;
  int under_out = 0;
  int over_out = 0;
  int sign = 1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

class PlanarDiagram {
 public:
  PlanarDiagram() = default;
  /// Throws InvalidDiagram unless every arc is entered once and left once.
  explicit PlanarDiagram(std::vector<Crossing> crossings, int free_loops = 0);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int free_loops() const { return free_loops_; }
  /// Sorted arc identifiers.
  std::vector<int> arcs() const;

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;

 private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
};

struct SeifertCircles {
  int count = 0;
  std::map<int, int> assignment;  // arc -> circle id in [0, count)
};

struct SeifertEdge {
  int circle_a = 0;
  int circle_b = 0;
  int sign = 1;
};

struct SeifertGraph {
  int vertex_count = 0;
  std::vector<SeifertEdge> edges;  // one per crossing, in crossing order
};

PlanarDiagram braid_closure(const BraidWord& w);

SeifertCircles seifert_circles(const PlanarDiagram& d);
SeifertGraph seifert_graph(const PlanarDiagram& d);
int writhe(const PlanarDiagram& d);
int component_count(const PlanarDiagram& d);
/// Genus-zero test of the ribbon graph given by the cyclic port orders.
bool planarity_check(const PlanarDiagram& d);

/// Relabeling-invariant key: two diagrams share it iff they are the same
/// PD code up to renaming arcs and reordering crossings.
std::vector<int> canonical_code(const PlanarDiagram& d);

// PD text: entries "X[a,b,c,d;+]" (under_in, over_in, under_out, over_out;
// sign) and "O" (free loop), separated by whitespace or commas; '#' starts a
// comment. Errors are ParseError with line/column.
PlanarDiagram parse_pd(std::string_view text);
std::string format_pd(const PlanarDiagram& d);

namespace detail {

/// Crossings grouped into connected pieces (shared arcs connect crossings).
std::vector<std::vector<Crossing>> split_pieces(const std::vector<Crossing>& crossings);

/// Canonical code of a connected, crossing-bearing piece. If relabeled is
/// non-null it receives the piece with arcs renamed to 0..2n-1 in the
/// canonical order.
std::vector<int> canonical_piece_code(const std::vector<Crossing>& piece, std::vector<Crossing>* relabeled = nullptr);

}  // namespace detail

}  // namespace knitweave
