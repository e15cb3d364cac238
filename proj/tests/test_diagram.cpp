#include <algorithm>
#include <numeric>
#include <set>
#include <random>

#include "doctest.h"
#include "knitweave/diagram.hpp"
#include "support.hpp"

using namespace knitweave;
using testing::word;

namespace {

int cycle_count(const Permutation& p) {
  std::vector<bool> seen(p.size() + 1, false);
  int cycles = 0;
  for (int x = 1; x <= p.size(); ++x) {
    if (seen[x]) continue;
    ++cycles;
    for (int y = x; !seen[y]; y = p(y)) seen[y] = true;
  }
  return cycles;
}

PlanarDiagram relabeled(const PlanarDiagram& d, std::mt19937_64& rng) {
  std::vector<int> arcs = d.arcs();
  std::vector<int> image(arcs.size());
  std::iota(image.begin(), image.end(), 100);
  std::shuffle(image.begin(), image.end(), rng);
  auto rename = [&](int a) { return image[std::lower_bound(arcs.begin(), arcs.end(), a) - arcs.begin()]; };
  std::vector<Crossing> cs = d.crossings();
  for (auto& c : cs) c = {rename(c.under_in), rename(c.over_in), rename(c.under_out), rename(c.over_out), c.sign};
  std::shuffle(cs.begin(), cs.end(), rng);
  return PlanarDiagram(cs, d.free_loops());
}

// Two crossings joining two components whose over/under alternates but whose
// signs disagree: no planar drawing exists.
const PlanarDiagram virtual_hopf({{1, 0, 2, 3, 1}, {3, 2, 0, 1, -1}});

}  // namespace

TEST_CASE("braid_closure") {
  PlanarDiagram d0 = braid_closure(word(3, {}));
  CHECK(d0.crossing_count() == 0);
  CHECK(d0.free_loops() == 3);
  PlanarDiagram d1 = braid_closure(word(2, {1}));
  CHECK(d1.crossing_count() == 1);
  CHECK(component_count(d1) == 1);
  PlanarDiagram d3 = braid_closure(word(2, {1, 1, 1}));
  CHECK(d3.crossing_count() == 3);
  CHECK(component_count(d3) == 1);
  // Untouched strands become free loops.
  PlanarDiagram partial = braid_closure(word(3, {1}));
  CHECK(partial.free_loops() == 1);
  CHECK(partial.crossing_count() == 1);
}

TEST_CASE("seifert_circles") {
  CHECK(seifert_circles(braid_closure(word(3, {}))).count == 3);
  CHECK(seifert_circles(braid_closure(word(2, {1, 1, 1}))).count == 2);
  CHECK(seifert_circles(braid_closure(word(3, {1, 2}))).count == 3);
  auto sc = seifert_circles(braid_closure(word(2, {1, 1, 1})));
  CHECK(sc.assignment.size() == 3 * 2);
}

TEST_CASE("seifert_graph") {
  SeifertGraph g1 = seifert_graph(braid_closure(word(2, {1})));
  CHECK(g1.vertex_count == 2);
  REQUIRE(g1.edges.size() == 1);
  CHECK(g1.edges[0].sign == 1);
  CHECK(g1.edges[0].circle_a != g1.edges[0].circle_b);

  SeifertGraph g2 = seifert_graph(braid_closure(word(2, {1, 1})));
  REQUIRE(g2.edges.size() == 2);
  CHECK(std::minmax(g2.edges[0].circle_a, g2.edges[0].circle_b) ==
        std::minmax(g2.edges[1].circle_a, g2.edges[1].circle_b));

  SeifertGraph path = seifert_graph(braid_closure(word(3, {1, -2})));
  CHECK(path.vertex_count == 3);
  REQUIRE(path.edges.size() == 2);
  CHECK(path.edges[0].sign == 1);
  CHECK(path.edges[1].sign == -1);
  // The two edges share exactly one circle: a path on three vertices.
  std::set<int> first{path.edges[0].circle_a, path.edges[0].circle_b};
  std::set<int> second{path.edges[1].circle_a, path.edges[1].circle_b};
  std::vector<int> common;
  std::set_intersection(first.begin(), first.end(), second.begin(), second.end(), std::back_inserter(common));
  CHECK(common.size() == 1);
}

TEST_CASE("writhe") {
  CHECK(writhe(PlanarDiagram({}, 1)) == 0);
  CHECK(writhe(braid_closure(word(2, {1, 1, 1}))) == 3);
  CHECK(writhe(braid_closure(word(2, {1, -1}))) == 0);
}

TEST_CASE("component_count") {
  CHECK(component_count(braid_closure(word(3, {}))) == 3);
  CHECK(component_count(braid_closure(word(2, {1, 1, 1}))) == 1);
  CHECK(component_count(braid_closure(word(2, {1, 1}))) == 2);
}

TEST_CASE("planarity_check") {
  CHECK(planarity_check(braid_closure(word(3, {1, -2, 1, 2}))));
  CHECK_FALSE(planarity_check(virtual_hopf));
  // Same code with matching signs is the Hopf link.
  CHECK(planarity_check(PlanarDiagram({{1, 0, 2, 3, 1}, {3, 2, 0, 1, 1}})));
  // A crossing whose strands each close on themselves.
  CHECK_FALSE(planarity_check(PlanarDiagram({{0, 1, 0, 1, 1}})));
  // Disjoint union of two planar diagrams.
  PlanarDiagram a = braid_closure(word(2, {1, 1, 1}));
  std::vector<Crossing> cs = a.crossings();
  const PlanarDiagram b = braid_closure(word(3, {1, -2}));
  for (auto c : b.crossings()) {
    for (int* x : {&c.under_in, &c.over_in, &c.under_out, &c.over_out}) *x += 1000;
    cs.push_back(c);
  }
  CHECK(planarity_check(PlanarDiagram(cs, 2)));
}

TEST_CASE("properties of random braid closures") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    std::uniform_int_distribution<int> strands(1, 5);
    BraidWord w = random_word(rng, strands(rng), 10);
    PlanarDiagram d = braid_closure(w);
    CHECK(d.crossing_count() == w.length());
    CHECK(seifert_circles(d).count == w.strands);
    CHECK(writhe(d) == writhe_word(w));
    CHECK(seifert_graph(d).edges.size() == static_cast<size_t>(w.length()));
    CHECK(planarity_check(d));
    CHECK(component_count(d) == cycle_count(perm_of_word(w)));
  }
}

TEST_CASE("invalid PD codes") {
  CHECK_THROWS_AS(PlanarDiagram({{0, 1, 2, 3, 1}}), InvalidDiagram);
  CHECK_THROWS_AS(PlanarDiagram({{0, 1, 1, 0, 2}}), InvalidDiagram);
  CHECK_THROWS_AS(PlanarDiagram({}, -1), InvalidDiagram);
}

TEST_CASE("PD text") {
  PlanarDiagram hopf = parse_pd("X[1,0,2,3;+] X[3,2,0,1;+]");
  CHECK(hopf == PlanarDiagram({{1, 0, 2, 3, 1}, {3, 2, 0, 1, 1}}));
  CHECK(parse_pd(format_pd(hopf)) == hopf);
  PlanarDiagram with_loops = parse_pd("# a kink plus a loop\nX[0,1,1,0;-], O\n");
  CHECK(with_loops.free_loops() == 1);
  CHECK(with_loops.crossings()[0].sign == -1);
  CHECK(parse_pd("O O").free_loops() == 2);
  CHECK(parse_pd(format_pd(with_loops)) == with_loops);

  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    PlanarDiagram d = braid_closure(random_word(rng, 4, 8));
    CHECK(parse_pd(format_pd(d)) == d);
  }
}

TEST_CASE("PD parse errors carry a location") {
  auto location = [](const char* text) {
    try {
      parse_pd(text);
    } catch (const ParseError& e) {
      return std::pair{e.line(), e.column()};
    }
    return std::pair{0, 0};
  };
  CHECK(location("X[1,0,2;+]") == std::pair{1, 8});
  CHECK(location("X[1,0,2,3;+]\nY") == std::pair{2, 1});
  CHECK(location("X[1,0,2,3;*]") == std::pair{1, 11});
  // Invariant violations point at the offending crossing.
  CHECK(location("X[1,0,2,3;+]\n  X[3,2,0,0;+]") == std::pair{2, 3});
  CHECK_THROWS_AS(parse_pd("X[1,0"), ParseError);
}

TEST_CASE("canonical_code") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 100; ++i) {
    PlanarDiagram d = braid_closure(random_word(rng, 4, 8));
    CHECK(canonical_code(relabeled(d, rng)) == canonical_code(d));
  }
  CHECK(canonical_code(braid_closure(word(2, {1, 1, 1}))) != canonical_code(braid_closure(word(2, {-1, -1, -1}))));
  CHECK(canonical_code(braid_closure(word(2, {1, 1}))) != canonical_code(braid_closure(word(2, {1, 1, 1}))));
}
