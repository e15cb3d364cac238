#include "knitweave/table.hpp"

#include <algorithm>
#include <vector>

namespace knitweave {

namespace {

std::string pad_left(const std::string& s, size_t width) {
  return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

}  // namespace

std::string render_table(const LaurentVZ& h) {
  if (h.is_zero()) return "(zero polynomial)\n";
  int v_min = h.terms().begin()->first.first, v_max = v_min;
  int z_min = h.terms().begin()->first.second, z_max = z_min;
  for (const auto& [e, c] : h.terms()) {
    v_min = std::min(v_min, e.first);
    v_max = std::max(v_max, e.first);
    z_min = std::min(z_min, e.second);
    z_max = std::max(z_max, e.second);
  }
  // Exponents off the step-2 lattice still get their own column or row.
  int v_step = 2, z_step = 2;
  for (const auto& [e, c] : h.terms()) {
    if ((e.first - v_min) % 2 != 0) v_step = 1;
    if ((e.second - z_min) % 2 != 0) z_step = 1;
  }
  std::vector<int> vs, zs;
  for (int a = v_min; a <= v_max; a += v_step) vs.push_back(a);
  for (int b = z_min; b <= z_max; b += z_step) zs.push_back(b);

  std::vector<std::string> row_labels;
  for (int b : zs) row_labels.push_back("z^" + std::to_string(b));
  size_t label_width = 3;
  for (const auto& l : row_labels) label_width = std::max(label_width, l.size());

  size_t cell_width = 1;
  for (int a : vs) cell_width = std::max(cell_width, std::to_string(a).size());
  for (const auto& [e, c] : h.terms()) cell_width = std::max(cell_width, c.get_str().size());

  std::string out;
  for (int r = static_cast<int>(zs.size()) - 1; r >= 0; --r) {
    std::string line = pad_left(row_labels[r], label_width) + " |";
    for (int a : vs) {
      const Integer c = h.coeff(a, zs[r]);
      line += " " + pad_left(c == 0 ? "" : c.get_str(), cell_width);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  out += std::string(label_width, ' ') + " +" + std::string(vs.size() * (cell_width + 1), '-') + "\n";
  std::string axis = pad_left("v^", label_width) + "  ";
  for (int a : vs) axis += " " + pad_left(std::to_string(a), cell_width);
  out += axis + "\n";
  return out;
}

}  // namespace knitweave
