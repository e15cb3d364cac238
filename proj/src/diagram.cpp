#include "knitweave/diagram.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <set>
#include <unordered_map>

#include "union_find.hpp"

namespace knitweave {

using detail::DenseIndex;
using detail::UnionFind;

namespace {

struct PortUse {
  int in = 0;
  int out = 0;
};

std::string validation_error(const std::vector<Crossing>& crossings, int free_loops) {
  if (free_loops < 0) return "negative free loop count";
  std::map<int, PortUse> use;
  for (const auto& c : crossings) {
    if (c.sign != 1 && c.sign != -1) return "crossing sign must be +1 or -1";
    ++use[c.under_in].in;
    ++use[c.over_in].in;
    ++use[c.under_out].out;
    ++use[c.over_out].out;
  }
  for (const auto& [arc, u] : use) {
    if (u.in != 1) return "arc " + std::to_string(arc) + " enters " + std::to_string(u.in) + " ports";
    if (u.out != 1) return "arc " + std::to_string(arc) + " leaves " + std::to_string(u.out) + " ports";
  }
  return {};
}

// Counterclockwise port order; see the header comment.
std::array<int, 4> cyclic_ports(const Crossing& c) {
  if (c.sign > 0) return {c.under_in, c.over_in, c.under_out, c.over_out};
  return {c.under_in, c.over_out, c.under_out, c.over_in};
}

bool is_input_slot(const Crossing& c, int slot) {
  // In both orders slot 0 is under_in; slot 1 is over_in only when positive.
  if (slot == 0) return true;
  if (slot == 2) return false;
  return (slot == 1) == (c.sign > 0);
}

}  // namespace

PlanarDiagram::PlanarDiagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  if (auto err = validation_error(crossings_, free_loops_); !err.empty()) throw InvalidDiagram("PD code: " + err);
}

std::vector<int> PlanarDiagram::arcs() const {
  std::set<int> s;
  for (const auto& c : crossings_) s.insert({c.under_in, c.over_in, c.under_out, c.over_out});
  return {s.begin(), s.end()};
}

PlanarDiagram braid_closure(const BraidWord& w) {
  const int n = w.strands;
  // Arc p is the strand entering position p at the bottom of the braid; it
  // is also the arc leaving the last crossing at that position.
  std::vector<int> last_touch(n, -1);
  for (int t = 0; t < w.length(); ++t) {
    int p = std::abs(w.letters[t]) - 1;
    last_touch[p] = last_touch[p + 1] = t;
  }
  std::vector<int> current(n);
  std::iota(current.begin(), current.end(), 0);
  int next_arc = n;
  std::vector<Crossing> crossings;
  for (int t = 0; t < w.length(); ++t) {
    const int g = w.letters[t];
    const int p = std::abs(g) - 1;
    const int out_left = last_touch[p] == t ? p : next_arc++;
    const int out_right = last_touch[p + 1] == t ? p + 1 : next_arc++;
    Crossing c;
    c.sign = g > 0 ? 1 : -1;
    if (g > 0) {
      // left strand passes over and moves right
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
  int loops = 0;
  for (int p = 0; p < n; ++p)
    if (last_touch[p] < 0) ++loops;
  return PlanarDiagram(std::move(crossings), loops);
}

SeifertCircles seifert_circles(const PlanarDiagram& d) {
  DenseIndex idx;
  for (int a : d.arcs()) idx(a);
  UnionFind uf(idx.size());
  for (const auto& c : d.crossings()) {
    uf.unite(idx.at(c.under_in), idx.at(c.over_out));
    uf.unite(idx.at(c.over_in), idx.at(c.under_out));
  }
  SeifertCircles out;
  std::unordered_map<int, int> circle_of_root;
  for (int i = 0; i < idx.size(); ++i) {
    auto [it, inserted] = circle_of_root.try_emplace(uf.find(i), out.count);
    if (inserted) ++out.count;
    out.assignment[idx.label(i)] = it->second;
  }
  out.count += d.free_loops();
  return out;
}

SeifertGraph seifert_graph(const PlanarDiagram& d) {
  SeifertCircles circles = seifert_circles(d);
  SeifertGraph g;
  g.vertex_count = circles.count;
  for (const auto& c : d.crossings())
    g.edges.push_back({circles.assignment.at(c.under_in), circles.assignment.at(c.over_in), c.sign});
  return g;
}

int writhe(const PlanarDiagram& d) {
  int w = 0;
  for (const auto& c : d.crossings()) w += c.sign;
  return w;
}

int component_count(const PlanarDiagram& d) {
  DenseIndex idx;
  for (int a : d.arcs()) idx(a);
  UnionFind uf(idx.size());
  int classes = idx.size();
  for (const auto& c : d.crossings()) {
    if (uf.unite(idx.at(c.under_in), idx.at(c.under_out))) --classes;
    if (uf.unite(idx.at(c.over_in), idx.at(c.over_out))) --classes;
  }
  return classes + d.free_loops();
}

bool planarity_check(const PlanarDiagram& d) {
  const auto& cs = d.crossings();
  const int n = static_cast<int>(cs.size());
  if (n == 0) return true;
  // Darts are (crossing, slot) pairs encoded as 4*crossing + slot.
  std::unordered_map<int, int> in_dart, out_dart;
  for (int i = 0; i < n; ++i) {
    auto ports = cyclic_ports(cs[i]);
    for (int s = 0; s < 4; ++s) (is_input_slot(cs[i], s) ? in_dart : out_dart)[ports[s]] = 4 * i + s;
  }
  std::vector<int> across(4 * n);
  UnionFind components(n);
  for (const auto& [arc, out] : out_dart) {
    int in = in_dart.at(arc);
    across[out] = in;
    across[in] = out;
    components.unite(out / 4, in / 4);
  }
  // Face permutation: cross the arc, then turn to the next slot.
  std::vector<bool> seen(4 * n, false);
  std::unordered_map<int, int> faces_per_component;
  for (int start = 0; start < 4 * n; ++start) {
    if (seen[start]) continue;
    ++faces_per_component[components.find(start / 4)];
    for (int dart = start; !seen[dart];) {
      seen[dart] = true;
      int other = across[dart];
      dart = 4 * (other / 4) + (other % 4 + 1) % 4;
    }
  }
  std::unordered_map<int, int> vertices;
  for (int i = 0; i < n; ++i) ++vertices[components.find(i)];
  for (const auto& [root, v] : vertices) {
    // V - E + F with E = 2V
    if (v - 2 * v + faces_per_component[root] != 2) return false;
  }
  return true;
}

namespace detail {

std::vector<std::vector<Crossing>> split_pieces(const std::vector<Crossing>& crossings) {
  const int n = static_cast<int>(crossings.size());
  UnionFind uf(n);
  std::unordered_map<int, int> first_owner;
  for (int i = 0; i < n; ++i) {
    const auto& c = crossings[i];
    for (int a : {c.under_in, c.over_in, c.under_out, c.over_out}) {
      auto [it, inserted] = first_owner.try_emplace(a, i);
      if (!inserted) uf.unite(i, it->second);
    }
  }
  std::unordered_map<int, int> piece_of_root;
  std::vector<std::vector<Crossing>> pieces;
  for (int i = 0; i < n; ++i) {
    auto [it, inserted] = piece_of_root.try_emplace(uf.find(i), static_cast<int>(pieces.size()));
    if (inserted) pieces.emplace_back();
    pieces[it->second].push_back(crossings[i]);
  }
  return pieces;
}

std::vector<int> canonical_piece_code(const std::vector<Crossing>& piece, std::vector<Crossing>* relabeled) {
  const int n = static_cast<int>(piece.size());
  DenseIndex idx;
  for (const auto& c : piece) {
    idx(c.under_in);
    idx(c.over_in);
  }
  const int arc_count = idx.size();
  // head[a] = crossing that arc a enters; continues[a] = arc leaving on the same strand.
  std::vector<int> head(arc_count), continues(arc_count);
  std::vector<std::array<int, 4>> dense(n);
  for (int i = 0; i < n; ++i) {
    const auto& c = piece[i];
    dense[i] = {idx.at(c.under_in), idx.at(c.over_in), idx.at(c.under_out), idx.at(c.over_out)};
    head[dense[i][0]] = head[dense[i][1]] = i;
    continues[dense[i][0]] = dense[i][2];
    continues[dense[i][1]] = dense[i][3];
  }

  std::vector<int> best, code, label(arc_count), order;
  std::vector<bool> queued(n);
  code.reserve(5 * n);
  order.reserve(n);
  for (int start = 0; start < arc_count; ++start) {
    std::fill(label.begin(), label.end(), -1);
    std::fill(queued.begin(), queued.end(), false);
    order.clear();
    int next_label = 0;
    auto walk = [&](int a) {
      while (label[a] < 0) {
        label[a] = next_label++;
        int c = head[a];
        if (!queued[c]) {
          queued[c] = true;
          order.push_back(c);
        }
        a = continues[a];
      }
    };
    walk(start);
    for (size_t k = 0; k < order.size(); ++k) {
      const auto& ports = dense[order[k]];
      walk(ports[0]);
      walk(ports[1]);
    }
    code.clear();
    for (int c : order) {
      for (int p : dense[c]) code.push_back(label[p]);
      code.push_back(piece[c].sign);
    }
    if (best.empty() || code < best) {
      best = code;
      if (relabeled) {
        relabeled->clear();
        for (int c : order)
          relabeled->push_back({label[dense[c][0]], label[dense[c][1]], label[dense[c][2]], label[dense[c][3]],
                                piece[c].sign});
      }
    }
  }
  return best;
}

}  // namespace detail

std::vector<int> canonical_code(const PlanarDiagram& d) {
  std::vector<std::vector<int>> codes;
  for (const auto& piece : detail::split_pieces(d.crossings())) codes.push_back(detail::canonical_piece_code(piece));
  std::sort(codes.begin(), codes.end());
  std::vector<int> out{d.free_loops(), static_cast<int>(codes.size())};
  for (const auto& c : codes) {
    out.push_back(static_cast<int>(c.size()));
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

// ----------------------------------------------------------------- PD text

namespace {

class PdScanner {
 public:
  explicit PdScanner(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_separators();
    return pos_ >= text_.size();
  }

  void skip_separators() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == ';') {
        advance();
      } else {
        break;
      }
    }
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char ch) {
    skip_ws();
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    advance();
  }

  int integer() {
    skip_ws();
    size_t start = pos_;
    if (peek() == '-' || peek() == '+') advance();
    while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    int value = 0;
    const char* first = text_.data() + start + (start < text_.size() && text_[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
    if (start == pos_ || ec != std::errc() || ptr != text_.data() + pos_) fail("expected an integer");
    return value;
  }

  int sign() {
    skip_ws();
    int s = 0;
    if (peek() == '+') s = 1;
    if (peek() == '-') s = -1;
    if (s == 0) fail("expected crossing sign '+' or '-'");
    advance();
    if (peek() == '1') advance();
    return s;
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError("PD code: " + what, line_, col_); }

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

PlanarDiagram parse_pd(std::string_view text) {
  PdScanner scan(text);
  std::vector<Crossing> crossings;
  std::vector<std::pair<int, int>> where;  // entry positions
  int loops = 0;
  while (!scan.at_end()) {
    const int line = scan.line(), col = scan.col();
    char head = scan.peek();
    if (head == 'O' || head == 'o') {
      scan.advance();
      ++loops;
      continue;
    }
    if (head != 'X' && head != 'x') scan.fail("expected 'X[...]' or 'O'");
    scan.advance();
    scan.expect('[');
    Crossing c;
    c.under_in = scan.integer();
    scan.expect(',');
    c.over_in = scan.integer();
    scan.expect(',');
    c.under_out = scan.integer();
    scan.expect(',');
    c.over_out = scan.integer();
    scan.skip_ws();
    if (scan.peek() != ';' && scan.peek() != ',') scan.fail("expected ';' before the crossing sign");
    scan.advance();
    c.sign = scan.sign();
    scan.expect(']');
    crossings.push_back(c);
    where.emplace_back(line, col);
  }
  // Re-check the port invariant entry by entry so errors point at a location.
  std::map<int, std::pair<int, int>> first_in, first_out;
  for (size_t i = 0; i < crossings.size(); ++i) {
    const auto& c = crossings[i];
    auto [line, col] = where[i];
    for (int a : {c.under_in, c.over_in})
      if (!first_in.try_emplace(a, where[i]).second)
        throw ParseError("PD code: arc " + std::to_string(a) + " enters two ports", line, col);
    for (int a : {c.under_out, c.over_out})
      if (!first_out.try_emplace(a, where[i]).second)
        throw ParseError("PD code: arc " + std::to_string(a) + " leaves two ports", line, col);
  }
  for (const auto& [a, pos] : first_in)
    if (!first_out.count(a))
      throw ParseError("PD code: arc " + std::to_string(a) + " is never left", pos.first, pos.second);
  for (const auto& [a, pos] : first_out)
    if (!first_in.count(a))
      throw ParseError("PD code: arc " + std::to_string(a) + " is never entered", pos.first, pos.second);
  return PlanarDiagram(std::move(crossings), loops);
}

std::string format_pd(const PlanarDiagram& d) {
  std::string out;
  for (const auto& c : d.crossings()) {
    if (!out.empty()) out += " ";
    out += "X[" + std::to_string(c.under_in) + "," + std::to_string(c.over_in) + "," + std::to_string(c.under_out) +
           "," + std::to_string(c.over_out) + ";" + (c.sign > 0 ? "+" : "-") + "]";
  }
  for (int i = 0; i < d.free_loops(); ++i) out += out.empty() ? "O" : " O";
  return out;
}

}  // namespace knitweave
