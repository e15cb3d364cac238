#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "knitweave/knitted.hpp"
#include "support.hpp"

using namespace knitweave;
using testing::vz;
using testing::word;
using testing::zp;

namespace {

KnittedDiagram load(const std::string& name) {
  std::ifstream in(std::string(KNITWEAVE_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_knitted(ss.str());
}

Wire wire(int b0, int p0, int b1, int p1) { return {{b0, p0}, {b1, p1}}; }

// Rotation system from vertex coordinates (counterclockwise by angle).
PlaneGraph plane_graph(const std::vector<std::pair<double, double>>& xy, const std::vector<std::pair<int, int>>& edges) {
  PlaneGraph g;
  g.rotation.resize(xy.size());
  for (auto [a, b] : edges) {
    g.rotation[a].push_back(b);
    g.rotation[b].push_back(a);
  }
  for (size_t v = 0; v < xy.size(); ++v) {
    auto angle = [&](int u) { return std::atan2(xy[u].second - xy[v].second, xy[u].first - xy[v].first); };
    std::sort(g.rotation[v].begin(), g.rotation[v].end(), [&](int a, int b) { return angle(a) < angle(b); });
  }
  return g;
}

// The 2x3 ladder: vertices at grid points, bipartite with 6 vertices and 7 edges.
PlaneGraph ladder_graph() {
  return plane_graph({{0, 1.2}, {0, 0}, {1.2, 0}, {1.2, 1.2}, {2.4, 0}, {2.4, 1.2}},
                     {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
}

PlaneGraph square_graph() { return plane_graph({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

std::vector<int> random_signs(std::mt19937_64& rng, int n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<int> s(n);
  for (int& x : s) x = coin(rng) ? 1 : -1;
  return s;
}

}  // namespace

TEST_CASE("validate") {
  for (int n = 1; n <= 5; ++n) CHECK(validate(KnittedTemplate::braid_closure(n)).ok());

  KnittedTemplate shared({2, 2}, {wire(0, 0, 1, 0), wire(0, 1, 1, 1), wire(1, 0, 0, 0), wire(1, 1, 0, 1)});
  ValidationReport r1 = validate(shared);
  CHECK(r1.has(IssueKind::shared_pair));
  CHECK_FALSE(r1.has(IssueKind::repeated_box));

  KnittedTemplate twice({2}, {wire(0, 0, 0, 1), wire(0, 1, 0, 0)});
  ValidationReport r2 = validate(twice);
  CHECK(r2.has(IssueKind::repeated_box));
  REQUIRE_FALSE(r2.issues.empty());
  CHECK(r2.issues[0].boxes == std::vector<int>{0});

  // Three circles pairwise sharing one box: a triangle Seifert graph.
  KnittedTemplate triangle({2, 2, 2}, {wire(0, 0, 1, 1), wire(0, 1, 2, 1), wire(1, 0, 2, 0), wire(1, 1, 0, 0),
                                       wire(2, 0, 1, 0), wire(2, 1, 0, 1)});
  ValidationReport r3 = validate(triangle);
  CHECK(r3.issues.size() == 1);
  CHECK(r3.has(IssueKind::planarity));

  KnittedTemplate unmatched({2}, {wire(0, 0, 0, 0), wire(0, 1, 0, 0)});
  CHECK(validate(unmatched).has(IssueKind::matching));
  CHECK_THROWS_AS(require_valid(unmatched), InvalidTemplate);
  CHECK(validate(KnittedTemplate()).has(IssueKind::matching));
  CHECK_THROWS_AS(KnittedTemplate({2}, {wire(0, 0, 0, 2)}), std::invalid_argument);
}

TEST_CASE("seifert_count") {
  for (int n = 1; n <= 4; ++n) CHECK(seifert_count(KnittedTemplate::braid_closure(n)) == n);
  BipartiteKnitting ladder = from_bipartite_graph(ladder_graph());
  CHECK(ladder.knitting.box_count() == 7);
  CHECK(seifert_count(ladder.knitting) == 6);
  auto two = KnittedTemplate::disjoint_union(KnittedTemplate::braid_closure(2), KnittedTemplate::braid_closure(2));
  CHECK(seifert_count(two) == 4);
  CHECK_THROWS_AS(seifert_count(KnittedTemplate({2}, {wire(0, 0, 0, 1), wire(0, 1, 0, 0)})), InvalidTemplate);
}

TEST_CASE("compile") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    BraidWord w = random_word(rng, 3, 6);
    PlanarDiagram a = compile(KnittedDiagram::braid_closure(w));
    PlanarDiagram b = braid_closure(w);
    CHECK(a.free_loops() == b.free_loops());
    CHECK(canonical_code(a) == canonical_code(b));
  }
  KnittedDiagram empty = KnittedDiagram::trivial(from_bipartite_graph(ladder_graph()).knitting);
  PlanarDiagram d = compile(empty);
  CHECK(d.crossing_count() == 0);
  CHECK(d.free_loops() == 6);

  PlanarDiagram six_box = compile(load("six_box.json"));
  CHECK(six_box.crossing_count() == 12);
  CHECK(component_count(six_box) == 1);
  CHECK(planarity_check(six_box));
  CHECK(seifert_circles(six_box).count == 7);

  CHECK_THROWS_AS(KnittedDiagram(KnittedTemplate::braid_closure(2), {word(3, {})}), std::invalid_argument);
  CHECK_THROWS_AS(KnittedDiagram(KnittedTemplate::braid_closure(2), {}), std::invalid_argument);
}

TEST_CASE("ft") {
  auto box = [](int n, std::vector<int> letters) {
    return ft(KnittedDiagram(KnittedTemplate::braid_closure(n), {word(n, letters)})).words()[0].letters;
  };
  CHECK(box(2, {}) == std::vector<int>{1, 1});
  CHECK(box(2, {1}) == std::vector<int>{1, 1, 1});
  CHECK(box(3, {-1, 2}) == std::vector<int>{1, 2, 1, 1, 2, 1, -1, 2});
}

TEST_CASE("full twist commutes at diagram level") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 25; ++i) {
    KnittedDiagram k = random_knitted_diagram(rng, RandomBounds{});
    std::vector<BraidWord> suffixed;
    for (const auto& w : k.words()) suffixed.push_back(w * full_twist_word(w.strands));
    CHECK(homfly_framed(compile(ft(k))) == homfly_framed(compile(k.with_words(suffixed))));
  }
}

TEST_CASE("eval_hecke") {
  BipartiteKnitting ladder = from_bipartite_graph(ladder_graph());
  CHECK(eval_hecke(KnittedDiagram::trivial(ladder.knitting)) == delta_pow(5));
  CHECK(eval_hecke(KnittedDiagram::braid_closure(word(2, {1, 1}))) == vz({{-1, -1, 1}, {1, -1, -1}, {-1, 1, 1}}));
  CHECK(eval_hecke(load("six_box.json")) == vz({{-6, 0, 2}, {-6, 2, 3}, {-6, 4, 1},
                                             {-4, 0, -1}, {-4, 2, -2}, {-4, 4, -3}, {-4, 6, -1},
                                             {-2, 0, -1}, {-2, 2, -2}, {-2, 4, -3}, {-2, 6, -1},
                                             {0, 0, 2}, {0, 2, 3}, {0, 4, 1},
                                             {2, 0, -1}}));
}

TEST_CASE("eval_hecke agrees with the skein evaluator") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 120; ++i) {
    KnittedDiagram k = random_knitted_diagram(rng, RandomBounds{});
    PlanarDiagram d = compile(k);
    LaurentVZ h = eval_hecke(k);
    CHECK(h == homfly_framed(d));
    CHECK(testing::invariant_violation(d, h) == "");
    CHECK(extreme_minus_fast(k) == coeff_of_v(h, 1 - seifert_count(k.knitting())));
  }
}

TEST_CASE("eval_hecke result does not depend on the worker count") {
  KnittedDiagram k = ft(load("six_box.json"));
  const char* previous = std::getenv("KNITWEAVE_THREADS");
  std::string saved = previous ? previous : "";
  setenv("KNITWEAVE_THREADS", "1", 1);
  CHECK(worker_count() == 1);
  LaurentVZ one = eval_hecke(k);
  setenv("KNITWEAVE_THREADS", "4", 1);
  CHECK(worker_count() == 4);
  LaurentVZ four = eval_hecke(k);
  if (previous)
    setenv("KNITWEAVE_THREADS", saved.c_str(), 1);
  else
    unsetenv("KNITWEAVE_THREADS");
  CHECK(one == four);
}

TEST_CASE("extreme_minus_fast") {
  CHECK(extreme_minus_fast(KnittedDiagram::braid_closure(word(2, {}))) == zp({{-1, 1}}));
  CHECK(extreme_minus_fast(KnittedDiagram::braid_closure(word(2, {1}))) == LaurentZ(1));
  CHECK(extreme_minus_fast(KnittedDiagram::braid_closure(word(1, {}))) == LaurentZ(1));
  CHECK(extreme_minus_fast(load("six_box.json")) == zp({{0, 2}, {2, 3}, {4, 1}}));
}

TEST_CASE("verify_theorem") {
  TheoremReport hopf = verify_theorem(KnittedDiagram::braid_closure(word(2, {})));
  CHECK(hopf.h_minus == zp({{-1, 1}}));
  CHECK(hopf.h_plus_ft == zp({{-1, -1}}));
  CHECK(hopf.sign == -1);
  CHECK(hopf.passed());

  TheoremReport trefoil = verify_theorem(KnittedDiagram::braid_closure(word(2, {1})));
  CHECK(trefoil.h_minus == LaurentZ(1));
  CHECK(trefoil.h_plus_ft == LaurentZ(-1));
  CHECK(trefoil.passed());

  for (Evaluator e : {Evaluator::hecke, Evaluator::skein}) {
    VerifyOptions options;
    options.evaluator = e;
    TheoremReport six_box = verify_theorem(load("six_box.json"), options);
    CHECK(six_box.seifert_count == 7);
    CHECK(six_box.sign == 1);
    CHECK(six_box.h_minus == zp({{0, 2}, {2, 3}, {4, 1}}));
    CHECK(six_box.h_plus_ft == zp({{0, 2}, {2, 3}, {4, 1}}));
    CHECK(six_box.passed());
  }

  VerifyOptions corrupt;
  corrupt.inject_h_plus_offset = LaurentZ(1);
  TheoremReport bad = verify_theorem(KnittedDiagram::braid_closure(word(2, {1})), corrupt);
  CHECK_FALSE(bad.formula_holds);
  CHECK_FALSE(bad.passed());
  CHECK(bad.render().find("FAIL") != std::string::npos);
  CHECK(bad.render().find("mismatch") != std::string::npos);
}

TEST_CASE("theorem on disconnected and bipartite-graph diagrams") {
  auto split = KnittedTemplate::disjoint_union(KnittedTemplate::braid_closure(2), KnittedTemplate::braid_closure(3));
  CHECK(verify_theorem(KnittedDiagram(split, {word(2, {1, 1, 1}), word(3, {1, -2})})).passed());

  std::mt19937_64 rng(29);
  for (const auto& g : {ladder_graph(), square_graph()}) {
    for (bool reverse : {false, true}) {
      BipartiteKnitting b = from_bipartite_graph(g, reverse);
      CHECK(validate(b.knitting).ok());
      for (int i = 0; i < 5; ++i) {
        KnittedDiagram k = b.with_signs(random_signs(rng, b.knitting.box_count()));
        PlanarDiagram d = compile(k);
        CHECK(planarity_check(d));
        CHECK(seifert_graph(d).vertex_count == g.vertex_count());
        TheoremReport r = verify_theorem(k);
        CHECK(r.passed());
      }
    }
  }
}

TEST_CASE("from_bipartite_graph") {
  BipartiteKnitting edge = from_bipartite_graph(PlaneGraph{{{1}, {0}}});
  CHECK(edge.knitting.box_count() == 1);
  CHECK(seifert_count(edge.knitting) == 2);
  CHECK(edge.box_edge == std::vector<std::pair<int, int>>{{0, 1}});

  BipartiteKnitting square = from_bipartite_graph(square_graph());
  CHECK(square.knitting.box_count() == 4);
  TemplateCircles tc = template_circles(square.knitting);
  CHECK(tc.count == 4);
  for (const auto& visits : tc.visits) CHECK(visits.size() == 2);

  BipartiteKnitting ladder = from_bipartite_graph(ladder_graph());
  CHECK(ladder.knitting.box_count() == 7);
  CHECK(seifert_count(ladder.knitting) == 6);
  // The Seifert graph of the result is the input graph.
  SeifertGraph sg = seifert_graph(compile(ladder.with_signs(std::vector<int>(7, 1))));
  CHECK(sg.vertex_count == 6);
  CHECK(sg.edges.size() == 7);

  CHECK_THROWS_AS(from_bipartite_graph(plane_graph({{0, 0}, {1, 0}, {0, 1}}, {{0, 1}, {1, 2}, {2, 0}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(from_bipartite_graph(PlaneGraph{{{1, 1}, {0, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(from_bipartite_graph(PlaneGraph{{{1}, {0}, {3}, {2}}}), std::invalid_argument);
  CHECK_THROWS_AS(from_bipartite_graph(PlaneGraph{{{1}, {}}}), std::invalid_argument);
  // K_{3,3} is bipartite but has no planar rotation system.
  PlaneGraph k33{{{3, 4, 5}, {3, 4, 5}, {3, 4, 5}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}}};
  CHECK_THROWS_AS(from_bipartite_graph(k33), std::invalid_argument);
  // Planar graph, non-planar rotation: swap two neighbours at a degree-3 vertex.
  PlaneGraph twisted = ladder_graph();
  std::swap(twisted.rotation[2][0], twisted.rotation[2][1]);
  CHECK_THROWS_AS(from_bipartite_graph(twisted), std::invalid_argument);
  CHECK_THROWS_AS(ladder.with_signs({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ladder.with_signs(std::vector<int>(7, 2)), std::invalid_argument);
}

TEST_CASE("knitted JSON") {
  KnittedDiagram k = load("six_box.json");
  CHECK(k.knitting().box_count() == 6);
  CHECK(k.words()[0].letters == std::vector<int>{2, 1, 2, 1});
  CHECK(knitted_from_json(to_json(k)) == k);
  CHECK(parse_knitted(to_json(k).dump()) == k);

  CHECK_THROWS_AS(parse_knitted("{"), ParseError);
  CHECK_THROWS_AS(parse_knitted(R"({"boxes":[{"strands":2}],"wiring":[["b0.out0","b0.in0"]]})"), ParseError);
  CHECK_THROWS_AS(parse_knitted(R"({"boxes":[{"strands":2}],"wiring":[["b0.out0","b0.in0"],["b0.out0","b0.in1"]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_knitted(R"({"boxes":[{"strands":1}],"wiring":[["b0.in0","b0.out0"]]})"), ParseError);
  CHECK_THROWS_AS(parse_knitted(R"({"boxes":[{"strands":2,"word":[2]}],"wiring":[]})"), ParseError);
  CHECK_THROWS_AS(parse_knitted(R"({"boxes":[{"strands":1}],"wiring":[["b0.out1","b0.in0"]]})"), ParseError);
  CHECK_THROWS_AS(parse_knitted(R"({"wiring":[]})"), ParseError);
  // Structurally valid JSON, invalid template: parsing succeeds, validation reports it.
  KnittedDiagram twice = parse_knitted(R"({"boxes":[{"strands":2}],"wiring":[["b0.out0","b0.in1"],["b0.out1","b0.in0"]]})");
  CHECK_THROWS_AS(compile(twice), InvalidTemplate);
  CHECK_THROWS_AS(eval_hecke(twice), InvalidTemplate);
}

TEST_CASE("random templates") {
  RandomBounds bounds;
  std::mt19937_64 a(101), b(101);
  for (int i = 0; i < 30; ++i) {
    GeneratedTemplate x = random_template(a, bounds);
    GeneratedTemplate y = random_template(b, bounds);
    CHECK(x.knitting == y.knitting);
    CHECK(x.retries == y.retries);
    CHECK(validate(x.knitting).ok());
    CHECK(x.knitting.box_count() <= bounds.max_boxes);
    for (int n : x.knitting.box_strands()) CHECK(n <= bounds.max_strands);
  }
  RandomBounds hopeless{8, 4, 4, 0};
  std::mt19937_64 c(1);
  bool threw = false;
  for (int i = 0; i < 20 && !threw; ++i) {
    try {
      random_template(c, hopeless);
    } catch (const std::runtime_error&) {
      threw = true;
    }
  }
  CHECK(threw);
}
