#pragma once

// Exact Laurent polynomials over arbitrary-precision integers.
//
// LaurentZ  : Z[z, z^-1]
// LaurentVZ : Z[v, v^-1, z, z^-1]
//
// Both types keep a canonical sparse term map with no zero coefficients, so
// structural equality is value equality.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "json.hpp"

namespace knitweave {

using Integer = mpz_class;

class LaurentZ {
 public:
  using TermMap = std::map<int, Integer>;

  LaurentZ() = default;
  LaurentZ(long constant);  // NOLINT(google-explicit-constructor)

  static LaurentZ monomial(Integer coeff, int z_exp);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(int z_exp) const;

  std::optional<int> min_degree() const;
  std::optional<int> max_degree() const;

  void add_term(int z_exp, const Integer& coeff);
  LaurentZ shifted(int z_shift) const;

  LaurentZ& operator+=(const LaurentZ& other);
  LaurentZ& operator-=(const LaurentZ& other);
  LaurentZ& operator*=(const LaurentZ& other);

  friend LaurentZ operator+(LaurentZ a, const LaurentZ& b) { return a += b; }
  friend LaurentZ operator-(LaurentZ a, const LaurentZ& b) { return a -= b; }
  friend LaurentZ operator*(const LaurentZ& a, const LaurentZ& b);
  friend LaurentZ operator-(LaurentZ a);

  friend bool operator==(const LaurentZ& a, const LaurentZ& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentZ& a, const LaurentZ& b) { return !(a == b); }

  /// Human-readable form in ascending z-degree, e.g. "2 + 3z^2 + z^4".
  std::string to_string() const;

 private:
  TermMap terms_;
};

class LaurentVZ {
 public:
  /// Key is (v exponent, z exponent); std::pair ordering gives the canonical
  /// serialization order (ascending v, then ascending z).
  using Exponent = std::pair<int, int>;
  using TermMap = std::map<Exponent, Integer>;

  LaurentVZ() = default;
  LaurentVZ(long constant);  // NOLINT(google-explicit-constructor)

  static LaurentVZ monomial(Integer coeff, int v_exp, int z_exp);
  /// p(z) * v^v_exp
  static LaurentVZ from_z(const LaurentZ& p, int v_exp = 0);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(int v_exp, int z_exp) const;

  /// v-degree accessors; empty on the zero polynomial.
  std::optional<int> min_v_degree() const;
  std::optional<int> max_v_degree() const;

  void add_term(int v_exp, int z_exp, const Integer& coeff);
  LaurentVZ shifted(int v_shift, int z_shift) const;

  LaurentVZ& operator+=(const LaurentVZ& other);
  LaurentVZ& operator-=(const LaurentVZ& other);
  LaurentVZ& operator*=(const LaurentVZ& other);

  friend LaurentVZ operator+(LaurentVZ a, const LaurentVZ& b) { return a += b; }
  friend LaurentVZ operator-(LaurentVZ a, const LaurentVZ& b) { return a -= b; }
  friend LaurentVZ operator*(const LaurentVZ& a, const LaurentVZ& b);
  friend LaurentVZ operator-(LaurentVZ a);

  friend bool operator==(const LaurentVZ& a, const LaurentVZ& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentVZ& a, const LaurentVZ& b) { return !(a == b); }

  std::string to_string() const;

 private:
  TermMap terms_;
};

LaurentVZ add(const LaurentVZ& a, const LaurentVZ& b);
LaurentVZ mul(const LaurentVZ& a, const LaurentVZ& b);

/// The univariate polynomial in z multiplying v^k.
LaurentZ coeff_of_v(const LaurentVZ& p, int k);

/// ((v^-1 - v) / z)^k, the framed value of the (k+1)-component trivial diagram.
LaurentVZ delta_pow(int k);

// JSON: {"terms":[{"v":-6,"z":0,"c":"2"}, ...]}, coefficients as decimal
// strings, terms in canonical order.
nlohmann::json to_json(const LaurentVZ& p);
LaurentVZ laurent_vz_from_json(const nlohmann::json& j);

}  // namespace knitweave
