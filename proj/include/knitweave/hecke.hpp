#pragma once

// The type-A Hecke algebra H_n over Z[z, z^-1], presented as the braid group
// algebra modulo sigma_i - sigma_i^-1 = z.
//
// Elements are expanded in the positive permutation braid basis {T_w}; the
// negative permutation braid basis {U_w} is reachable through convert().

#include <map>
#include <string>
#include <vector>

#include "knitweave/braid.hpp"
#include "knitweave/laurent.hpp"

namespace knitweave {

enum class Basis { ppb, npb };

std::string to_string(Basis b);

class HeckeElement {
 public:
  using CoeffMap = std::map<Permutation, LaurentZ>;

  explicit HeckeElement(int strands, Basis basis = Basis::ppb);

  /// 1 * T_e (or U_e).
  static HeckeElement one(int strands, Basis basis = Basis::ppb);
  static HeckeElement basis_element(const Permutation& w, Basis basis = Basis::ppb);

  int strands() const { return strands_; }
  Basis basis() const { return basis_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  LaurentZ coeff(const Permutation& w) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(const Permutation& w, const LaurentZ& c);

  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement& operator-=(const HeckeElement& other);
  /// Scalar multiplication by a Laurent polynomial in z.
  HeckeElement scaled(const LaurentZ& c) const;

  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  /// Lines "w_one_line : polynomial", ordered by Coxeter length then
  /// lexicographically by one-line notation.
  std::string render() const;

 private:
  int strands_;
  Basis basis_;
  CoeffMap coeffs_;
};

/// Right multiplication by sigma_i^sign of a PPB-expanded element.
HeckeElement mul_generator(const HeckeElement& x, int i, int sign);

/// Image of a braid word in H_n, in the PPB basis.
HeckeElement expand_word(const BraidWord& w);

/// The negative permutation braid U_w expanded in the PPB basis.
HeckeElement npb_in_ppb(const Permutation& w);

HeckeElement convert(const HeckeElement& x, Basis target);

/// Coefficient of T_delta (or U_delta) for the longest element delta.
LaurentZ top_coeff(const HeckeElement& x);

/// Product of two PPB-expanded elements.
HeckeElement multiply(const HeckeElement& x, const HeckeElement& y);

}  // namespace knitweave
