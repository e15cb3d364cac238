#pragma once

// Knitted diagrams: braid boxes joined by crossing-free wiring.
//
// A box with n strands has input endpoints in0..in{n-1} and output endpoints
// out0..out{n-1}; strand position j runs from inj to outj, and a braid word on
// n strands fills the box. The wiring matches every output endpoint with an
// input endpoint. Seifert circles of the diagram are the cycles of the
// wiring composed with the identity pass-through inside each box.

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "knitweave/braid.hpp"
#include "knitweave/diagram.hpp"
#include "knitweave/hecke.hpp"
#include "knitweave/laurent.hpp"

namespace knitweave {

struct Endpoint {
  int box = 0;
  int pos = 0;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

struct Wire {
  Endpoint from;  // an output endpoint
  Endpoint to;    // an input endpoint
  friend bool operator==(const Wire&, const Wire&) = default;
};

enum class IssueKind { matching, planarity, repeated_box, shared_pair };

struct ValidationIssue {
  IssueKind kind;
  std::string message;
  std::vector<int> circles;
  std::vector<int> boxes;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  bool has(IssueKind kind) const;
  std::string to_string() const;
};

class KnittedTemplate {
 public:
  KnittedTemplate() = default;
  /// Throws std::invalid_argument for out-of-range endpoints; the matching
  /// and knitting conditions are left to validate().
  KnittedTemplate(std::vector<int> box_strands, std::vector<Wire> wiring);

  /// One n-strand box closed up position by position.
  static KnittedTemplate braid_closure(int n);
  /// Boxes and wires of b appended after those of a.
  static KnittedTemplate disjoint_union(const KnittedTemplate& a, const KnittedTemplate& b);

  int box_count() const { return static_cast<int>(box_strands_.size()); }
  const std::vector<int>& box_strands() const { return box_strands_; }
  const std::vector<Wire>& wiring() const { return wiring_; }

  friend bool operator==(const KnittedTemplate&, const KnittedTemplate&) = default;

 private:
  std::vector<int> box_strands_;
  std::vector<Wire> wiring_;
};

/// Seifert circles of a template whose wiring is a perfect matching.
struct TemplateCircles {
  int count = 0;
  std::vector<std::vector<int>> circle_of;              // [box][pos]
  std::vector<std::vector<Endpoint>> visits;            // per circle, in traversal order
};

ValidationReport validate(const KnittedTemplate& t);
/// Throws InvalidTemplate with the report text if validation fails.
void require_valid(const KnittedTemplate& t);

TemplateCircles template_circles(const KnittedTemplate& t);
int seifert_count(const KnittedTemplate& t);

class KnittedDiagram {
 public:
  KnittedDiagram() = default;
  /// Throws std::invalid_argument if word counts or strand counts mismatch.
  KnittedDiagram(KnittedTemplate tmpl, std::vector<BraidWord> words);

  static KnittedDiagram braid_closure(const BraidWord& w);
  /// All boxes filled with the empty word.
  static KnittedDiagram trivial(const KnittedTemplate& t);

  const KnittedTemplate& knitting() const { return template_; }
  const std::vector<BraidWord>& words() const { return words_; }
  KnittedDiagram with_words(std::vector<BraidWord> words) const;

  friend bool operator==(const KnittedDiagram&, const KnittedDiagram&) = default;

 private:
  KnittedTemplate template_;
  std::vector<BraidWord> words_;
};

/// Concrete PD code; crossings are exactly the box words' crossings.
PlanarDiagram compile(const KnittedDiagram& k);

/// Prefixes the positive full twist to every box word.
KnittedDiagram ft(const KnittedDiagram& k);

/// Framed HOMFLY through the PPB expansion of every box.
LaurentVZ eval_hecke(const KnittedDiagram& k);

/// H_-(k) from the top PPB coefficients of HT * B_i, times z^(1-s).
LaurentZ extreme_minus_fast(const KnittedDiagram& k);

enum class Evaluator { skein, hecke };

struct VerifyOptions {
  Evaluator evaluator = Evaluator::hecke;
  /// Test hook: added to the computed H_+(FT D) before comparison.
  LaurentZ inject_h_plus_offset;
};

struct TheoremReport {
  int seifert_count = 0;
  int sign = 1;  // (-1)^(s-1)
  LaurentZ h_minus;
  LaurentZ h_plus_ft;
  LaurentZ h_minus_fast;
  bool formula_holds = false;
  bool fast_path_agrees = false;

  bool passed() const { return formula_holds && fast_path_agrees; }
  std::string render() const;
};

TheoremReport verify_theorem(const KnittedDiagram& k, const VerifyOptions& options = {});

// ------------------------------------------------------------ bipartite graphs

/// A plane graph given by its rotation system: rotation[v] lists the
/// neighbours of v in counterclockwise order.
struct PlaneGraph {
  std::vector<std::vector<int>> rotation;
  int vertex_count() const { return static_cast<int>(rotation.size()); }
};

struct BipartiteKnitting {
  KnittedTemplate knitting;
  std::vector<std::pair<int, int>> box_edge;  // box -> graph edge (u, w)
  std::vector<int> color;                     // per vertex, 0 or 1
  /// Fills box i with the one-letter word sign[i] (+1 or -1).
  KnittedDiagram with_signs(const std::vector<int>& signs) const;
};

/// Reverse Seifert construction: one circle per vertex, one 2-strand box per
/// edge. Throws std::invalid_argument for non-simple, non-bipartite,
/// disconnected or non-planar input. reverse_orientation swaps which colour
/// class runs counterclockwise.
BipartiteKnitting from_bipartite_graph(const PlaneGraph& g, bool reverse_orientation = false);

// ----------------------------------------------------------------- JSON I/O

// {"boxes":[{"strands":3,"word":[1,-2,1]},...],"wiring":[["b0.out0","b1.in2"],...]}
KnittedDiagram knitted_from_json(const nlohmann::json& j);
nlohmann::json to_json(const KnittedDiagram& k);
KnittedDiagram parse_knitted(const std::string& text);

// ------------------------------------------------------------ random samples

struct RandomBounds {
  int max_boxes = 3;
  int max_strands = 3;
  int max_word_length = 4;
  int max_retries = 10000;
};

struct GeneratedTemplate {
  KnittedTemplate knitting;
  int retries = 0;  // rejected samples before this one
};

/// Rejection sampling: random box sizes, then uniformly random output->input
/// matchings until one passes validate(). Throws std::runtime_error once
/// max_retries matchings have been rejected.
GeneratedTemplate random_template(std::mt19937_64& rng, const RandomBounds& bounds);
BraidWord random_word(std::mt19937_64& rng, int strands, int max_length);
KnittedDiagram random_knitted_diagram(std::mt19937_64& rng, const RandomBounds& bounds, int* retries = nullptr);

/// Worker count for parallel loops: KNITWEAVE_THREADS if set, else the
/// hardware concurrency.
int worker_count();

}  // namespace knitweave
