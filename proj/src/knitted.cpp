#include "knitweave/knitted.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "knitweave/errors.hpp"
#include "knitweave/skein.hpp"
#include "knitweave/parallel.hpp"
#include "union_find.hpp"

namespace knitweave {

namespace {

std::string endpoint_name(const Endpoint& e, bool output) {
  return "b" + std::to_string(e.box) + (output ? ".out" : ".in") + std::to_string(e.pos);
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

// Output endpoint -> input endpoint, assuming a perfect matching.
std::vector<std::vector<Endpoint>> next_input(const KnittedTemplate& t) {
  std::vector<std::vector<Endpoint>> next(t.box_count());
  for (int b = 0; b < t.box_count(); ++b) next[b].resize(t.box_strands()[b]);
  for (const auto& w : t.wiring()) next[w.from.box][w.from.pos] = w.to;
  return next;
}

bool matching_ok(const KnittedTemplate& t, std::vector<ValidationIssue>* issues) {
  std::vector<std::vector<int>> from_count(t.box_count()), to_count(t.box_count());
  for (int b = 0; b < t.box_count(); ++b) {
    from_count[b].assign(t.box_strands()[b], 0);
    to_count[b].assign(t.box_strands()[b], 0);
  }
  for (const auto& w : t.wiring()) {
    ++from_count[w.from.box][w.from.pos];
    ++to_count[w.to.box][w.to.pos];
  }
  bool ok = true;
  for (int b = 0; b < t.box_count(); ++b) {
    for (int j = 0; j < t.box_strands()[b]; ++j) {
      for (auto [count, output] : {std::pair{from_count[b][j], true}, std::pair{to_count[b][j], false}}) {
        if (count == 1) continue;
        ok = false;
        if (issues)
          issues->push_back({IssueKind::matching,
                             endpoint_name({b, j}, output) + " is wired " + std::to_string(count) + " times",
                             {},
                             {b}});
      }
    }
  }
  return ok;
}

// Genus-zero test of the ribbon graph with one vertex per box, ports in the
// cyclic order in0..in{n-1}, out{n-1}..out0, and one edge per wire.
bool template_planar(const KnittedTemplate& t) {
  const int m = t.box_count();
  std::vector<int> offset(m + 1, 0);
  for (int b = 0; b < m; ++b) offset[b + 1] = offset[b] + 2 * t.box_strands()[b];
  const int darts = offset[m];
  std::vector<int> box_of(darts);
  for (int b = 0; b < m; ++b)
    for (int d = offset[b]; d < offset[b + 1]; ++d) box_of[d] = b;
  auto in_dart = [&](const Endpoint& e) { return offset[e.box] + e.pos; };
  auto out_dart = [&](const Endpoint& e) { return offset[e.box] + 2 * t.box_strands()[e.box] - 1 - e.pos; };
  std::vector<int> across(darts);
  detail::UnionFind uf(m);
  for (const auto& w : t.wiring()) {
    int a = out_dart(w.from), b = in_dart(w.to);
    across[a] = b;
    across[b] = a;
    uf.unite(w.from.box, w.to.box);
  }
  std::vector<bool> seen(darts, false);
  std::map<int, int> faces, vertices, edges;
  for (int start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    ++faces[uf.find(box_of[start])];
    for (int d = start; !seen[d];) {
      seen[d] = true;
      int o = across[d];
      int b = box_of[o];
      d = offset[b] + (o - offset[b] + 1) % (offset[b + 1] - offset[b]);
    }
  }
  for (int b = 0; b < m; ++b) {
    ++vertices[uf.find(b)];
    edges[uf.find(b)] += t.box_strands()[b];
  }
  for (const auto& [root, v] : vertices)
    if (v - edges[root] + faces[root] != 2) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------- templates

bool ValidationReport::has(IssueKind kind) const {
  return std::any_of(issues.begin(), issues.end(), [&](const auto& i) { return i.kind == kind; });
}

std::string ValidationReport::to_string() const {
  if (issues.empty()) return "valid knitted template";
  std::string out;
  for (const auto& issue : issues) out += issue.message + "\n";
  return out;
}

KnittedTemplate::KnittedTemplate(std::vector<int> box_strands, std::vector<Wire> wiring)
    : box_strands_(std::move(box_strands)), wiring_(std::move(wiring)) {
  for (int n : box_strands_)
    if (n < 1) throw std::invalid_argument("knitted template: every box needs at least one strand");
  auto check = [&](const Endpoint& e) {
    if (e.box < 0 || e.box >= box_count() || e.pos < 0 || e.pos >= box_strands_[e.box])
      throw std::invalid_argument("knitted template: endpoint b" + std::to_string(e.box) + "." +
                                  std::to_string(e.pos) + " out of range");
  };
  for (const auto& w : wiring_) {
    check(w.from);
    check(w.to);
  }
}

KnittedTemplate KnittedTemplate::braid_closure(int n) {
  std::vector<Wire> wiring;
  for (int j = 0; j < n; ++j) wiring.push_back({{0, j}, {0, j}});
  return KnittedTemplate({n}, std::move(wiring));
}

KnittedTemplate KnittedTemplate::disjoint_union(const KnittedTemplate& a, const KnittedTemplate& b) {
  std::vector<int> strands = a.box_strands_;
  strands.insert(strands.end(), b.box_strands_.begin(), b.box_strands_.end());
  std::vector<Wire> wiring = a.wiring_;
  const int shift = a.box_count();
  for (Wire w : b.wiring_) {
    w.from.box += shift;
    w.to.box += shift;
    wiring.push_back(w);
  }
  return KnittedTemplate(std::move(strands), std::move(wiring));
}

TemplateCircles template_circles(const KnittedTemplate& t) {
  if (!matching_ok(t, nullptr)) throw InvalidTemplate("knitted template: wiring is not a perfect matching");
  auto next = next_input(t);
  TemplateCircles tc;
  tc.circle_of.resize(t.box_count());
  for (int b = 0; b < t.box_count(); ++b) tc.circle_of[b].assign(t.box_strands()[b], -1);
  for (int b = 0; b < t.box_count(); ++b) {
    for (int j = 0; j < t.box_strands()[b]; ++j) {
      if (tc.circle_of[b][j] >= 0) continue;
      tc.visits.emplace_back();
      for (Endpoint e{b, j}; tc.circle_of[e.box][e.pos] < 0; e = next[e.box][e.pos]) {
        tc.circle_of[e.box][e.pos] = tc.count;
        tc.visits.back().push_back(e);
      }
      ++tc.count;
    }
  }
  return tc;
}

int seifert_count(const KnittedTemplate& t) {
  require_valid(t);
  return template_circles(t).count;
}

ValidationReport validate(const KnittedTemplate& t) {
  ValidationReport report;
  if (t.box_count() == 0) {
    report.issues.push_back({IssueKind::matching, "knitted template has no boxes", {}, {}});
    return report;
  }
  if (!matching_ok(t, &report.issues)) return report;

  TemplateCircles tc = template_circles(t);
  for (int c = 0; c < tc.count; ++c) {
    std::map<int, int> passes;
    for (const auto& e : tc.visits[c]) ++passes[e.box];
    for (const auto& [box, count] : passes)
      if (count > 1)
        report.issues.push_back({IssueKind::repeated_box,
                                 "Seifert circle " + std::to_string(c) + " passes through box " +
                                     std::to_string(box) + " " + std::to_string(count) + " times",
                                 {c},
                                 {box}});
  }

  std::map<std::pair<int, int>, std::set<int>> shared;
  for (int b = 0; b < t.box_count(); ++b) {
    std::set<int> through(tc.circle_of[b].begin(), tc.circle_of[b].end());
    for (auto i = through.begin(); i != through.end(); ++i)
      for (auto j = std::next(i); j != through.end(); ++j) shared[{*i, *j}].insert(b);
  }
  for (const auto& [pair, boxes] : shared) {
    if (boxes.size() < 2) continue;
    std::vector<int> box_list(boxes.begin(), boxes.end());
    report.issues.push_back({IssueKind::shared_pair,
                             "Seifert circles " + std::to_string(pair.first) + " and " + std::to_string(pair.second) +
                                 " both pass through boxes " + join(box_list),
                             {pair.first, pair.second},
                             box_list});
  }

  if (!template_planar(t))
    report.issues.push_back({IssueKind::planarity, "wiring cannot be drawn without crossings", {}, {}});
  return report;
}

void require_valid(const KnittedTemplate& t) {
  ValidationReport r = validate(t);
  if (!r.ok()) throw InvalidTemplate("invalid knitted template:\n" + r.to_string());
}

// ---------------------------------------------------------------- diagrams

KnittedDiagram::KnittedDiagram(KnittedTemplate tmpl, std::vector<BraidWord> words)
    : template_(std::move(tmpl)), words_(std::move(words)) {
  if (static_cast<int>(words_.size()) != template_.box_count())
    throw std::invalid_argument("knitted diagram: " + std::to_string(words_.size()) + " words for " +
                                std::to_string(template_.box_count()) + " boxes");
  for (int b = 0; b < template_.box_count(); ++b)
    if (words_[b].strands != template_.box_strands()[b])
      throw std::invalid_argument("knitted diagram: word for box " + std::to_string(b) + " has " +
                                  std::to_string(words_[b].strands) + " strands, box has " +
                                  std::to_string(template_.box_strands()[b]));
}

KnittedDiagram KnittedDiagram::braid_closure(const BraidWord& w) {
  return KnittedDiagram(KnittedTemplate::braid_closure(w.strands), {w});
}

KnittedDiagram KnittedDiagram::trivial(const KnittedTemplate& t) {
  std::vector<BraidWord> words;
  for (int n : t.box_strands()) words.emplace_back(n, std::vector<int>{});
  return KnittedDiagram(t, std::move(words));
}

KnittedDiagram KnittedDiagram::with_words(std::vector<BraidWord> words) const {
  return KnittedDiagram(template_, std::move(words));
}

PlanarDiagram compile(const KnittedDiagram& k) {
  const KnittedTemplate& t = k.knitting();
  require_valid(t);
  const int m = t.box_count();
  // Wire i is arc i. wire_into / wire_out_of index wires by endpoint.
  std::vector<std::vector<int>> wire_into(m), wire_out_of(m);
  for (int b = 0; b < m; ++b) {
    wire_into[b].resize(t.box_strands()[b]);
    wire_out_of[b].resize(t.box_strands()[b]);
  }
  const int wires = static_cast<int>(t.wiring().size());
  for (int i = 0; i < wires; ++i) {
    wire_out_of[t.wiring()[i].from.box][t.wiring()[i].from.pos] = i;
    wire_into[t.wiring()[i].to.box][t.wiring()[i].to.pos] = i;
  }
  int total_letters = 0;
  for (const auto& w : k.words()) total_letters += w.length();
  detail::UnionFind same_arc(wires + 2 * total_letters);
  int next_arc = wires;
  std::vector<Crossing> crossings;
  for (int b = 0; b < m; ++b) {
    const BraidWord& word = k.words()[b];
    const int n = word.strands;
    std::vector<int> last_touch(n, -1);
    for (int s = 0; s < word.length(); ++s) {
      int p = std::abs(word.letters[s]) - 1;
      last_touch[p] = last_touch[p + 1] = s;
    }
    std::vector<int> current = wire_into[b];
    for (int s = 0; s < word.length(); ++s) {
      const int g = word.letters[s];
      const int p = std::abs(g) - 1;
      const int out_left = last_touch[p] == s ? wire_out_of[b][p] : next_arc++;
      const int out_right = last_touch[p + 1] == s ? wire_out_of[b][p + 1] : next_arc++;
      Crossing c;
      c.sign = g > 0 ? 1 : -1;
      if (g > 0) {
        c.over_in = current[p];
        c.under_in = current[p + 1];
        c.over_out = out_right;
        c.under_out = out_left;
      } else {
        c.under_in = current[p];
        c.over_in = current[p + 1];
        c.under_out = out_right;
        c.over_out = out_left;
      }
      crossings.push_back(c);
      current[p] = out_left;
      current[p + 1] = out_right;
    }
    for (int p = 0; p < n; ++p)
      if (last_touch[p] < 0) same_arc.unite(wire_into[b][p], wire_out_of[b][p]);
  }
  std::vector<bool> used(next_arc, false);
  for (auto& c : crossings) {
    for (int* a : {&c.under_in, &c.over_in, &c.under_out, &c.over_out}) {
      *a = same_arc.find(*a);
      used[*a] = true;
    }
  }
  int loops = 0;
  for (int a = 0; a < wires; ++a)
    if (same_arc.find(a) == a && !used[a]) ++loops;
  return PlanarDiagram(std::move(crossings), loops);
}

KnittedDiagram ft(const KnittedDiagram& k) {
  std::vector<BraidWord> words;
  for (const auto& w : k.words()) words.push_back(full_twist_word(w.strands) * w);
  return k.with_words(std::move(words));
}

int worker_count() {
  if (const char* env = std::getenv("KNITWEAVE_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

LaurentVZ eval_hecke(const KnittedDiagram& k) {
  require_valid(k.knitting());
  const int m = k.knitting().box_count();
  std::vector<std::vector<std::pair<Permutation, LaurentZ>>> expansions(m);
  long total = 1;
  for (int b = 0; b < m; ++b) {
    HeckeElement x = expand_word(k.words()[b]);
    expansions[b].assign(x.coeffs().begin(), x.coeffs().end());
    total *= static_cast<long>(expansions[b].size());
  }
  const int workers = worker_count();
  std::vector<LaurentVZ> partial(std::max(1, std::min<int>(workers, static_cast<int>(total))));
  detail::parallel_for(static_cast<int>(total), static_cast<int>(partial.size()), [&](int worker, int index) {
    std::vector<BraidWord> words;
    LaurentZ weight(1);
    long rest = index;
    for (int b = 0; b < m; ++b) {
      const long size = static_cast<long>(expansions[b].size());
      const auto& [w, c] = expansions[b][rest % size];
      rest /= size;
      words.push_back(reduced_word(w));
      weight *= c;
    }
    LaurentVZ h = homfly_framed(compile(k.with_words(std::move(words))));
    partial[worker] += LaurentVZ::from_z(weight) * h;
  });
  LaurentVZ sum;
  for (const auto& p : partial) sum += p;
  return sum;
}

LaurentZ extreme_minus_fast(const KnittedDiagram& k) {
  const int s = seifert_count(k.knitting());
  LaurentZ product(1);
  for (const auto& w : k.words()) product *= top_coeff(expand_word(half_twist_word(w.strands) * w));
  return product.shifted(1 - s);
}

std::string TheoremReport::render() const {
  std::string out;
  out += "s(D)          = " + std::to_string(seifert_count) + "\n";
  out += "sign          = " + std::string(sign > 0 ? "+1" : "-1") + "\n";
  out += "H-(D)         = " + h_minus.to_string() + "\n";
  out += "H+(FT D)      = " + h_plus_ft.to_string() + "\n";
  out += "H-(D) (Hecke) = " + h_minus_fast.to_string() + "\n";
  if (!formula_holds) {
    LaurentZ diff = h_minus - h_plus_ft * LaurentZ(sign);
    out += "mismatch      : H-(D) - sign*H+(FT D) = " + diff.to_string() + "\n";
  }
  if (!fast_path_agrees) out += "mismatch      : Hecke top-coefficient formula disagrees with H-(D)\n";
  out += std::string("verdict       = ") + (passed() ? "PASS" : "FAIL") + "\n";
  return out;
}

TheoremReport verify_theorem(const KnittedDiagram& k, const VerifyOptions& options) {
  TheoremReport r;
  r.seifert_count = seifert_count(k.knitting());
  r.sign = (r.seifert_count - 1) % 2 == 0 ? 1 : -1;
  auto evaluate = [&](const KnittedDiagram& d) {
    return options.evaluator == Evaluator::hecke ? eval_hecke(d) : homfly_framed(compile(d));
  };
  const int s = r.seifert_count;
  r.h_minus = coeff_of_v(evaluate(k), 1 - s);
  r.h_plus_ft = coeff_of_v(evaluate(ft(k)), s - 1) + options.inject_h_plus_offset;
  r.h_minus_fast = extreme_minus_fast(k);
  r.formula_holds = r.h_minus == r.h_plus_ft * LaurentZ(r.sign);
  r.fast_path_agrees = r.h_minus_fast == r.h_minus;
  return r;
}

// ------------------------------------------------------------ bipartite graphs

KnittedDiagram BipartiteKnitting::with_signs(const std::vector<int>& signs) const {
  if (static_cast<int>(signs.size()) != knitting.box_count())
    throw std::invalid_argument("with_signs: one sign per box required");
  std::vector<BraidWord> words;
  for (int s : signs) {
    if (s != 1 && s != -1) throw std::invalid_argument("with_signs: signs must be +1 or -1");
    words.emplace_back(2, std::vector<int>{s});
  }
  return KnittedDiagram(knitting, std::move(words));
}

BipartiteKnitting from_bipartite_graph(const PlaneGraph& g, bool reverse_orientation) {
  const int nv = g.vertex_count();
  if (nv < 2) throw std::invalid_argument("bipartite graph: need at least one edge");
  std::set<std::pair<int, int>> arcs;
  for (int v = 0; v < nv; ++v) {
    std::set<int> seen;
    for (int u : g.rotation[v]) {
      if (u < 0 || u >= nv) throw std::invalid_argument("bipartite graph: neighbour out of range");
      if (u == v) throw std::invalid_argument("bipartite graph: self-loop at vertex " + std::to_string(v));
      if (!seen.insert(u).second)
        throw std::invalid_argument("bipartite graph: multiple edges between " + std::to_string(v) + " and " +
                                    std::to_string(u));
      arcs.insert({v, u});
    }
  }
  for (const auto& [v, u] : arcs)
    if (!arcs.count({u, v})) throw std::invalid_argument("bipartite graph: rotation system is not symmetric");

  std::vector<int> color(nv, -1);
  std::queue<int> q;
  color[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : g.rotation[v]) {
      if (color[u] < 0) {
        color[u] = 1 - color[v];
        q.push(u);
      } else if (color[u] == color[v]) {
        throw std::invalid_argument("bipartite graph: odd cycle through vertex " + std::to_string(u));
      }
    }
  }
  if (std::count(color.begin(), color.end(), -1) > 0) throw std::invalid_argument("bipartite graph: not connected");

  // Faces of the rotation system.
  auto index_in = [&](int u, int v) {
    const auto& r = g.rotation[u];
    return static_cast<int>(std::find(r.begin(), r.end(), v) - r.begin());
  };
  std::set<std::pair<int, int>> dart_seen;
  int faces = 0;
  for (int v = 0; v < nv; ++v) {
    for (int i = 0; i < static_cast<int>(g.rotation[v].size()); ++i) {
      if (dart_seen.count({v, i})) continue;
      ++faces;
      for (std::pair<int, int> d{v, i}; !dart_seen.count(d);) {
        dart_seen.insert(d);
        int u = g.rotation[d.first][d.second];
        d = {u, (index_in(u, d.first) + 1) % static_cast<int>(g.rotation[u].size())};
      }
    }
  }
  const int ne = static_cast<int>(arcs.size()) / 2;
  if (nv - ne + faces != 2) throw std::invalid_argument("bipartite graph: rotation system is not planar");

  BipartiteKnitting out;
  out.color = color;
  std::map<std::pair<int, int>, int> box_of_edge;
  for (int v = 0; v < nv; ++v)
    for (int u : g.rotation[v])
      if (v < u) {
        box_of_edge[{v, u}] = static_cast<int>(out.box_edge.size());
        out.box_edge.emplace_back(v, u);
      }
  const int ccw_color = reverse_orientation ? 1 : 0;
  // The counterclockwise circle of an edge runs in position 0 of its box.
  auto pos_of = [&](int v) { return color[v] == ccw_color ? 0 : 1; };
  auto box_of = [&](int v, int u) { return box_of_edge.at(std::minmax(v, u)); };
  std::vector<Wire> wiring;
  for (int v = 0; v < nv; ++v) {
    std::vector<int> order = g.rotation[v];
    if (color[v] != ccw_color) std::reverse(order.begin(), order.end());
    const int d = static_cast<int>(order.size());
    for (int k = 0; k < d; ++k) {
      int here = box_of(v, order[k]);
      int there = box_of(v, order[(k + 1) % d]);
      wiring.push_back({{here, pos_of(v)}, {there, pos_of(v)}});
    }
  }
  out.knitting = KnittedTemplate(std::vector<int>(out.box_edge.size(), 2), std::move(wiring));
  return out;
}

// ----------------------------------------------------------------- JSON I/O

namespace {

Endpoint parse_endpoint(const std::string& name, bool output) {
  const std::string tag = output ? ".out" : ".in";
  auto bad = [&] {
    return ParseError("knitted JSON: expected \"b<i>" + tag + "<j>\", got \"" + name + "\"");
  };
  if (name.size() < 2 || name[0] != 'b') throw bad();
  size_t dot = name.find('.');
  if (dot == std::string::npos || name.compare(dot, tag.size(), tag) != 0) throw bad();
  auto to_int = [&](const std::string& digits) {
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) throw bad();
    return std::stoi(digits);
  };
  return {to_int(name.substr(1, dot - 1)), to_int(name.substr(dot + tag.size()))};
}

}  // namespace

KnittedDiagram knitted_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("boxes") || !j.at("boxes").is_array())
    throw ParseError("knitted JSON: expected an object with a \"boxes\" array");
  if (!j.contains("wiring") || !j.at("wiring").is_array())
    throw ParseError("knitted JSON: expected a \"wiring\" array");
  std::vector<int> strands;
  std::vector<BraidWord> words;
  for (const auto& box : j.at("boxes")) {
    if (!box.is_object() || !box.contains("strands") || !box.at("strands").is_number_integer())
      throw ParseError("knitted JSON: box " + std::to_string(strands.size()) + " needs an integer \"strands\"");
    int n = box.at("strands").get<int>();
    std::vector<int> letters;
    if (box.contains("word")) {
      if (!box.at("word").is_array()) throw ParseError("knitted JSON: \"word\" must be an array");
      for (const auto& g : box.at("word")) {
        if (!g.is_number_integer()) throw ParseError("knitted JSON: word letters must be integers");
        letters.push_back(g.get<int>());
      }
    }
    try {
      words.emplace_back(n, std::move(letters));
    } catch (const std::invalid_argument& e) {
      throw ParseError("knitted JSON: box " + std::to_string(strands.size()) + ": " + e.what());
    }
    strands.push_back(n);
  }
  std::vector<Wire> wiring;
  std::set<Endpoint> outs, ins;
  for (const auto& pair : j.at("wiring")) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      throw ParseError("knitted JSON: each wire is a pair [\"b<i>.out<j>\", \"b<k>.in<l>\"]");
    Wire w{parse_endpoint(pair[0].get<std::string>(), true), parse_endpoint(pair[1].get<std::string>(), false)};
    if (!outs.insert(w.from).second)
      throw ParseError("knitted JSON: " + pair[0].get<std::string>() + " is wired twice");
    if (!ins.insert(w.to).second) throw ParseError("knitted JSON: " + pair[1].get<std::string>() + " is wired twice");
    wiring.push_back(w);
  }
  KnittedTemplate t;
  try {
    t = KnittedTemplate(strands, std::move(wiring));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("knitted JSON: ") + e.what());
  }
  for (int b = 0; b < static_cast<int>(strands.size()); ++b)
    for (int p = 0; p < strands[b]; ++p) {
      if (!outs.count({b, p})) throw ParseError("knitted JSON: " + endpoint_name({b, p}, true) + " is not wired");
      if (!ins.count({b, p})) throw ParseError("knitted JSON: " + endpoint_name({b, p}, false) + " is not wired");
    }
  return KnittedDiagram(std::move(t), std::move(words));
}

nlohmann::json to_json(const KnittedDiagram& k) {
  nlohmann::json boxes = nlohmann::json::array();
  for (const auto& w : k.words()) boxes.push_back({{"strands", w.strands}, {"word", w.letters}});
  nlohmann::json wiring = nlohmann::json::array();
  for (const auto& w : k.knitting().wiring()) wiring.push_back({endpoint_name(w.from, true), endpoint_name(w.to, false)});
  return {{"boxes", boxes}, {"wiring", wiring}};
}

KnittedDiagram parse_knitted(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("knitted JSON: ") + e.what());
  }
  return knitted_from_json(j);
}

// ------------------------------------------------------------ random samples

BraidWord random_word(std::mt19937_64& rng, int strands, int max_length) {
  if (strands < 2) return BraidWord(strands, {});
  std::uniform_int_distribution<int> length(0, max_length);
  std::uniform_int_distribution<int> index(1, strands - 1);
  std::bernoulli_distribution positive(0.5);
  std::vector<int> letters(length(rng));
  for (int& g : letters) g = positive(rng) ? index(rng) : -index(rng);
  return BraidWord(strands, std::move(letters));
}

GeneratedTemplate random_template(std::mt19937_64& rng, const RandomBounds& bounds) {
  // Box sizes are kept for a few matchings before being redrawn, so that
  // larger templates, whose matchings are rarely valid, still show up.
  constexpr int kMatchingsPerShape = 64;
  std::uniform_int_distribution<int> box_count(1, std::max(1, bounds.max_boxes));
  std::uniform_int_distribution<int> strand_count(1, std::max(1, bounds.max_strands));
  int attempt = 0;
  while (attempt <= bounds.max_retries) {
    std::vector<int> strands(box_count(rng));
    for (int& n : strands) n = strand_count(rng);
    std::vector<Endpoint> inputs;
    for (int b = 0; b < static_cast<int>(strands.size()); ++b)
      for (int p = 0; p < strands[b]; ++p) inputs.push_back({b, p});
    for (int k = 0; k < kMatchingsPerShape && attempt <= bounds.max_retries; ++k, ++attempt) {
      std::vector<Endpoint> targets = inputs;
      std::shuffle(targets.begin(), targets.end(), rng);
      std::vector<Wire> wiring;
      for (size_t i = 0; i < inputs.size(); ++i) wiring.push_back({inputs[i], targets[i]});
      KnittedTemplate t(strands, std::move(wiring));
      if (validate(t).ok()) return {std::move(t), attempt};
    }
  }
  throw std::runtime_error("random_template: no valid template within the retry budget");
}

KnittedDiagram random_knitted_diagram(std::mt19937_64& rng, const RandomBounds& bounds, int* retries) {
  GeneratedTemplate g = random_template(rng, bounds);
  if (retries) *retries = g.retries;
  std::vector<BraidWord> words;
  for (int n : g.knitting.box_strands()) words.push_back(random_word(rng, n, bounds.max_word_length));
  return KnittedDiagram(std::move(g.knitting), std::move(words));
}

}  // namespace knitweave
