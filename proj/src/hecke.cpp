#include "knitweave/hecke.hpp"

#include <algorithm>
#include <stdexcept>

namespace knitweave {

std::string to_string(Basis b) { return b == Basis::ppb ? "PPB" : "NPB"; }

HeckeElement::HeckeElement(int strands, Basis basis) : strands_(strands), basis_(basis) {
  if (strands < 1) throw std::invalid_argument("HeckeElement: strand count must be positive");
}

HeckeElement HeckeElement::one(int strands, Basis basis) {
  return basis_element(Permutation::identity(strands), basis);
}

HeckeElement HeckeElement::basis_element(const Permutation& w, Basis basis) {
  HeckeElement x(w.size(), basis);
  x.add_term(w, LaurentZ(1));
  return x;
}

LaurentZ HeckeElement::coeff(const Permutation& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? LaurentZ() : it->second;
}

void HeckeElement::add_term(const Permutation& w, const LaurentZ& c) {
  if (w.size() != strands_) throw std::invalid_argument("HeckeElement: permutation outside S_n");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  if (other.strands_ != strands_ || other.basis_ != basis_)
    throw std::invalid_argument("HeckeElement: adding elements of different algebras or bases");
  for (const auto& [w, c] : other.coeffs_) add_term(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& other) {
  return *this += other.scaled(LaurentZ(-1));
}

HeckeElement HeckeElement::scaled(const LaurentZ& c) const {
  HeckeElement out(strands_, basis_);
  if (c.is_zero()) return out;
  for (const auto& [w, a] : coeffs_) out.add_term(w, a * c);
  return out;
}

std::string HeckeElement::render() const {
  if (coeffs_.empty()) return "0\n";
  std::vector<std::pair<int, const Permutation*>> order;
  for (const auto& [w, c] : coeffs_) order.emplace_back(coxeter_length(w), &w);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : *a.second < *b.second;
  });
  std::string out;
  for (const auto& [len, w] : order) {
    std::string one_line;
    // Digits run together below ten strands, as in 312.
    for (int x : w->images()) one_line += (one_line.empty() || strands_ < 10 ? "" : ",") + std::to_string(x);
    out += one_line + " : " + coeffs_.at(*w).to_string() + "\n";
  }
  return out;
}

HeckeElement mul_generator(const HeckeElement& x, int i, int sign) {
  if (x.basis() != Basis::ppb) throw std::invalid_argument("mul_generator: element must be in the PPB basis");
  if (i < 1 || i > x.strands() - 1)
    throw std::out_of_range("mul_generator: generator index " + std::to_string(i) + " out of range");
  const LaurentZ z = LaurentZ::monomial(1, 1);
  HeckeElement out(x.strands());
  for (const auto& [w, c] : x.coeffs()) {
    Permutation ws = w.then_simple(i);
    out.add_term(ws, c);
    if (!w.length_increases(i)) out.add_term(w, c * z);
  }
  // sigma^-1 = sigma - z
  if (sign < 0) out -= x.scaled(z);
  return out;
}

HeckeElement expand_word(const BraidWord& w) {
  HeckeElement x = HeckeElement::one(w.strands);
  for (int g : w.letters) x = mul_generator(x, std::abs(g), g > 0 ? 1 : -1);
  return x;
}

HeckeElement npb_in_ppb(const Permutation& w) {
  BraidWord word = reduced_word(w);
  for (int& g : word.letters) g = -g;
  return expand_word(word);
}

HeckeElement convert(const HeckeElement& x, Basis target) {
  if (x.basis() == target) return x;
  const int n = x.strands();
  if (target == Basis::ppb) {
    HeckeElement out(n, Basis::ppb);
    for (const auto& [w, c] : x.coeffs()) out += npb_in_ppb(w).scaled(c);
    return out;
  }
  // U_w = T_w + (terms of strictly smaller length), so peel off the longest
  // remaining T-term each round.
  HeckeElement remaining = x;
  HeckeElement out(n, Basis::npb);
  while (!remaining.is_zero()) {
    const Permutation* top = nullptr;
    int top_len = -1;
    for (const auto& [w, c] : remaining.coeffs()) {
      int len = coxeter_length(w);
      if (len > top_len) {
        top_len = len;
        top = &w;
      }
    }
    const Permutation w = *top;
    const LaurentZ c = remaining.coeff(w);
    out.add_term(w, c);
    remaining -= npb_in_ppb(w).scaled(c);
  }
  return out;
}

LaurentZ top_coeff(const HeckeElement& x) { return x.coeff(Permutation::longest(x.strands())); }

HeckeElement multiply(const HeckeElement& x, const HeckeElement& y) {
  if (x.strands() != y.strands()) throw std::invalid_argument("multiply: strand mismatch");
  if (x.basis() != Basis::ppb || y.basis() != Basis::ppb)
    throw std::invalid_argument("multiply: both factors must be in the PPB basis");
  HeckeElement out(x.strands());
  for (const auto& [w, c] : y.coeffs()) {
    HeckeElement partial = x;
    for (int g : reduced_word(w).letters) partial = mul_generator(partial, g, 1);
    out += partial.scaled(c);
  }
  return out;
}

}  // namespace knitweave
