#include "knitweave/skein.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <map>
#include <numeric>
#include <mutex>
#include <stdexcept>

#include "union_find.hpp"

namespace knitweave {

namespace {

struct Reduced {
  std::vector<Crossing> crossings;
  int new_loops = 0;
};

enum class Glue { kink, smooth, straight };

// Deletes the listed crossings and glues their arcs: all four into one strand
// for a kink, along the oriented smoothing (under_in~over_out,
// over_in~under_out), or straight through (under_in~under_out,
// over_in~over_out).
Reduced remove_crossings(const std::vector<Crossing>& crossings, std::initializer_list<size_t> removed, Glue glue) {
  std::vector<int> ports;
  for (size_t i : removed) {
    const Crossing& c = crossings[i];
    ports.insert(ports.end(), {c.under_in, c.over_in, c.under_out, c.over_out});
  }
  const int slots = static_cast<int>(ports.size());
  detail::UnionFind uf(slots);
  auto slot_of = [&](int arc) {
    for (int k = 0; k < slots; ++k)
      if (ports[k] == arc) return k;
    return -1;
  };
  // Identical labels are the same arc already.
  for (int x = 0; x < slots; ++x)
    for (int y = x + 1; y < slots; ++y)
      if (ports[x] == ports[y]) uf.unite(x, y);
  for (int base = 0; base < slots; base += 4) {
    switch (glue) {
      case Glue::kink:
        uf.unite(base, base + 1);
        uf.unite(base, base + 2);
        uf.unite(base, base + 3);
        break;
      case Glue::smooth:
        uf.unite(base, base + 3);
        uf.unite(base + 1, base + 2);
        break;
      case Glue::straight:
        uf.unite(base, base + 2);
        uf.unite(base + 1, base + 3);
        break;
    }
  }
  Reduced out;
  out.crossings.reserve(crossings.size() - removed.size());
  std::vector<bool> used(slots, false);
  for (size_t j = 0; j < crossings.size(); ++j) {
    if (std::find(removed.begin(), removed.end(), j) != removed.end()) continue;
    Crossing d = crossings[j];
    for (int* arc : {&d.under_in, &d.over_in, &d.under_out, &d.over_out}) {
      int k = slot_of(*arc);
      if (k < 0) continue;
      int root = uf.find(k);
      *arc = ports[root];
      used[root] = true;
    }
    out.crossings.push_back(d);
  }
  for (int k = 0; k < slots; ++k)
    if (uf.find(k) == k && !used[k]) ++out.new_loops;
  return out;
}

// Counterclockwise port order, matching planarity_check. Slots 1 and 3 carry
// the over strand in both orders.
std::array<int, 4> cyclic_ports(const Crossing& c) {
  if (c.sign > 0) return {c.under_in, c.over_in, c.under_out, c.over_out};
  return {c.under_in, c.over_out, c.under_out, c.over_in};
}

bool is_over_slot(int slot) { return slot == 1 || slot == 3; }

// A bigon face whose two crossings have opposite signs and share the over
// strand; returns the two crossing indices, or {-1, -1}.
std::pair<int, int> find_reidemeister_two(const std::vector<Crossing>& cs) {
  const int n = static_cast<int>(cs.size());
  std::unordered_map<int, std::pair<int, int>> ends;  // arc -> both darts
  for (int i = 0; i < n; ++i) {
    auto ports = cyclic_ports(cs[i]);
    for (int s = 0; s < 4; ++s) {
      auto [it, inserted] = ends.try_emplace(ports[s], 4 * i + s, -1);
      if (!inserted) it->second.second = 4 * i + s;
    }
  }
  auto across = [&](int dart) {
    const auto& c = cs[dart / 4];
    const auto& e = ends.at(cyclic_ports(c)[dart % 4]);
    return e.first == dart ? e.second : e.first;
  };
  auto next = [](int dart) { return 4 * (dart / 4) + (dart % 4 + 1) % 4; };
  for (int d = 0; d < 4 * n; ++d) {
    const int o = across(d);
    if (o < 0 || o / 4 == d / 4) continue;
    const int d2 = next(o);
    const int back = across(d2);
    if (back < 0 || back / 4 != d / 4 || next(back) != d) continue;
    const int c1 = d / 4, c2 = o / 4;
    if (cs[c1].sign == cs[c2].sign) continue;
    // Arc of d runs from slot d%4 at c1 to slot o%4 at c2; arc of d2 from
    // slot d2%4 at c2 to slot back%4 at c1.
    const bool first_over = is_over_slot(d % 4) && is_over_slot(o % 4);
    const bool second_over = is_over_slot(d2 % 4) && is_over_slot(back % 4);
    if (first_over || second_over) return {c1, c2};
  }
  return {-1, -1};
}

Crossing switched(const Crossing& c) {
  return {c.over_in, c.under_in, c.over_out, c.under_out, -c.sign};
}

// Bad crossings of the descending walk with the fewest such crossings among
// the plans tried: every base point per component, and every component order
// (greedy beyond seven components). Ties keep the first plan found, so the
// result depends only on the labeled diagram.
std::vector<int> descending_plan(const std::vector<Crossing>& diagram) {
  const int n = static_cast<int>(diagram.size());
  const int arc_count = 2 * n;
  std::vector<int> head(arc_count), continues(arc_count);
  std::vector<bool> enters_under(arc_count, false);
  for (int i = 0; i < n; ++i) {
    const auto& c = diagram[i];
    head[c.under_in] = head[c.over_in] = i;
    continues[c.under_in] = c.under_out;
    continues[c.over_in] = c.over_out;
    enters_under[c.under_in] = true;
  }
  std::vector<int> component_of(arc_count, -1);
  std::vector<std::vector<int>> cycles;
  for (int a = 0; a < arc_count; ++a) {
    if (component_of[a] >= 0) continue;
    cycles.emplace_back();
    for (int b = a; component_of[b] < 0; b = continues[b]) {
      component_of[b] = static_cast<int>(cycles.size()) - 1;
      cycles.back().push_back(b);
    }
  }
  const int k = static_cast<int>(cycles.size());

  // Best rotation of each cycle for its self-crossings.
  std::vector<int> start(k, 0);
  std::vector<int> first_visit(n);
  for (int comp = 0; comp < k; ++comp) {
    const auto& cyc = cycles[comp];
    const int len = static_cast<int>(cyc.size());
    int best = -1;
    for (int r = 0; r < len; ++r) {
      std::fill(first_visit.begin(), first_visit.end(), 0);
      int count = 0;
      for (int t = 0; t < len; ++t) {
        const int a = cyc[(r + t) % len];
        const auto& c = diagram[head[a]];
        if (component_of[c.under_in] != component_of[c.over_in]) continue;
        if (first_visit[head[a]]++ == 0 && enters_under[a]) ++count;
      }
      if (best < 0 || count < best) {
        best = count;
        start[comp] = r;
      }
    }
  }

  // under[i][j]: crossings where component i passes under component j.
  std::vector<std::vector<int>> under(k, std::vector<int>(k, 0));
  for (const auto& c : diagram) {
    const int i = component_of[c.under_in], j = component_of[c.over_in];
    if (i != j) ++under[i][j];
  }
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  auto cost = [&](const std::vector<int>& ord) {
    int total = 0;
    for (int x = 0; x < k; ++x)
      for (int y = x + 1; y < k; ++y) total += under[ord[x]][ord[y]];
    return total;
  };
  if (k <= 7) {
    std::vector<int> perm = order;
    int best = cost(order);
    while (std::next_permutation(perm.begin(), perm.end())) {
      if (int c = cost(perm); c < best) {
        best = c;
        order = perm;
      }
    }
  } else {
    std::vector<bool> placed(k, false);
    for (int x = 0; x < k; ++x) {
      int pick = -1, pick_cost = 0;
      for (int i = 0; i < k; ++i) {
        if (placed[i]) continue;
        int c = 0;
        for (int j = 0; j < k; ++j)
          if (!placed[j] && j != i) c += under[i][j];
        if (pick < 0 || c < pick_cost) {
          pick = i;
          pick_cost = c;
        }
      }
      placed[pick] = true;
      order[x] = pick;
    }
  }

  std::vector<bool> crossing_seen(n, false);
  std::vector<int> bad;
  for (int comp : order) {
    const auto& cyc = cycles[comp];
    const int len = static_cast<int>(cyc.size());
    for (int t = 0; t < len; ++t) {
      const int a = cyc[(start[comp] + t) % len];
      if (crossing_seen[head[a]]) continue;
      crossing_seen[head[a]] = true;
      if (enters_under[a]) bad.push_back(head[a]);
    }
  }
  return bad;
}

}  // namespace

std::size_t SkeinEvaluator::CodeHash::operator()(const std::vector<int>& code) const noexcept {
  std::size_t h = code.size();
  for (int x : code) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

LaurentVZ SkeinEvaluator::framed(const PlanarDiagram& d) {
  if (!planarity_check(d)) throw NonPlanarDiagram("homfly: diagram is not planar");
  if (d.crossing_count() == 0 && d.free_loops() == 0) throw std::invalid_argument("homfly: empty diagram");
  return eval(d.crossings(), d.free_loops());
}

std::size_t SkeinEvaluator::cache_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

void SkeinEvaluator::clear_cache() {
  std::unique_lock lock(mutex_);
  memo_.clear();
}

LaurentVZ SkeinEvaluator::eval(std::vector<Crossing> crossings, int free_loops) {
  int v_shift = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < crossings.size(); ++i) {
      const Crossing& c = crossings[i];
      if (c.under_out == c.over_in || c.over_out == c.under_in) {
        v_shift -= c.sign;
        Reduced r = remove_crossings(crossings, {i}, Glue::kink);
        crossings = std::move(r.crossings);
        free_loops += r.new_loops;
        changed = true;
        break;
      }
    }
    if (changed) continue;
    if (auto [c1, c2] = find_reidemeister_two(crossings); c1 >= 0) {
      Reduced r = remove_crossings(crossings, {size_t(c1), size_t(c2)}, Glue::straight);
      crossings = std::move(r.crossings);
      free_loops += r.new_loops;
      changed = true;
    }
  }
  auto pieces = detail::split_pieces(crossings);
  const int split_count = static_cast<int>(pieces.size()) + free_loops;
  LaurentVZ result = delta_pow(split_count - 1).shifted(v_shift, 0);
  for (const auto& piece : pieces) result *= eval_piece(piece);
  return result;
}

LaurentVZ SkeinEvaluator::eval_piece(const std::vector<Crossing>& piece) {
  std::vector<Crossing> diagram;
  std::vector<int> code = detail::canonical_piece_code(piece, &diagram);
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(code); it != memo_.end()) return it->second;
  }

  // Arcs are 0..2n-1 after canonical relabeling. A crossing first reached
  // along its under strand is out of descending position; the walk plan
  // (base points and component order) is chosen to keep those few.
  const int n = static_cast<int>(diagram.size());
  std::vector<int> bad = descending_plan(diagram);
  int components = 0;
  {
    const int arc_count = 2 * n;
    std::vector<int> continues(arc_count);
    for (const auto& c : diagram) {
      continues[c.under_in] = c.under_out;
      continues[c.over_in] = c.over_out;
    }
    std::vector<bool> seen(arc_count, false);
    for (int a = 0; a < arc_count; ++a) {
      if (seen[a]) continue;
      ++components;
      for (int b = a; !seen[b]; b = continues[b]) seen[b] = true;
    }
  }

  int final_writhe = 0;
  for (const auto& c : diagram) final_writhe += c.sign;
  for (int c : bad) final_writhe -= 2 * diagram[c].sign;
  LaurentVZ result = delta_pow(components - 1).shifted(-final_writhe, 0);

  // H(D_i) = H(D_{i+1}) + sign * z * H(D_i smoothed at c_i), where D_{i+1}
  // is D_i with c_i switched.
  std::vector<Crossing> current = diagram;
  for (int c : bad) {
    Reduced smoothed = remove_crossings(current, {size_t(c)}, Glue::smooth);
    LaurentVZ term = eval(std::move(smoothed.crossings), smoothed.new_loops).shifted(0, 1);
    if (current[c].sign > 0)
      result += term;
    else
      result -= term;
    current[c] = switched(current[c]);
  }

  std::unique_lock lock(mutex_);
  memo_.try_emplace(std::move(code), result);
  return result;
}

SkeinEvaluator& default_evaluator() {
  static SkeinEvaluator evaluator;
  return evaluator;
}

LaurentVZ homfly_framed(const PlanarDiagram& d) { return default_evaluator().framed(d); }

LaurentVZ homfly_unframed(const PlanarDiagram& d) { return homfly_framed(d).shifted(writhe(d), 0); }

HomflyResult homfly(const PlanarDiagram& d) {
  HomflyResult r;
  r.framed = homfly_framed(d);
  r.writhe = writhe(d);
  r.unframed = r.framed.shifted(r.writhe, 0);
  r.seifert_count = seifert_circles(d).count;
  return r;
}

ExtremeCoeffs extreme_coeffs(const LaurentVZ& h, int s) { return {coeff_of_v(h, 1 - s), coeff_of_v(h, s - 1)}; }

bool mfw_check(const LaurentVZ& h, int s) {
  if (h.is_zero()) return true;
  return *h.min_v_degree() >= 1 - s && *h.max_v_degree() <= s - 1;
}

bool parity_check(const LaurentVZ& h, int s, int components) {
  auto odd = [](int x) { return (x % 2 + 2) % 2; };
  for (const auto& [e, c] : h.terms())
    if (odd(e.first) != odd(s - 1) || odd(e.second) != odd(components - 1)) return false;
  return true;
}

MpPrediction mp_vanishing(const PlanarDiagram& d) {
  SeifertGraph g = seifert_graph(d);
  std::map<std::pair<int, int>, std::vector<int>> between;
  for (const auto& e : g.edges) between[std::minmax(e.circle_a, e.circle_b)].push_back(e.sign);
  MpPrediction p;
  for (const auto& [pair, signs] : between) {
    if (signs.size() != 1) continue;
    if (signs.front() > 0)
      p.predicts_plus_zero = true;
    else
      p.predicts_minus_zero = true;
  }
  return p;
}

}  // namespace knitweave
