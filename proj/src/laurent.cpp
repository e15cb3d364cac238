#include "knitweave/laurent.hpp"

#include <limits>
#include <stdexcept>

namespace knitweave {

namespace {

template <typename Map, typename Key>
void accumulate(Map& terms, const Key& key, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

std::string power(const char* var, int e) {
  if (e == 0) return {};
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

// Appends "c*mono" to out with sign handling; mono may be empty.
void append_term(std::string& out, const Integer& c, const std::string& mono) {
  const bool negative = c < 0;
  Integer magnitude = abs(c);
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (magnitude != 1 || mono.empty()) out += magnitude.get_str();
  out += mono;
}

}  // namespace

// ---------------------------------------------------------------- LaurentZ

LaurentZ::LaurentZ(long constant) {
  if (constant != 0) terms_.emplace(0, Integer(constant));
}

LaurentZ LaurentZ::monomial(Integer coeff, int z_exp) {
  LaurentZ p;
  accumulate(p.terms_, z_exp, coeff);
  return p;
}

Integer LaurentZ::coeff(int z_exp) const {
  auto it = terms_.find(z_exp);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<int> LaurentZ::min_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> LaurentZ::max_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

void LaurentZ::add_term(int z_exp, const Integer& coeff) { accumulate(terms_, z_exp, coeff); }

LaurentZ LaurentZ::shifted(int z_shift) const {
  LaurentZ out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + z_shift, c);
  return out;
}

LaurentZ& LaurentZ::operator+=(const LaurentZ& other) {
  for (const auto& [e, c] : other.terms_) accumulate(terms_, e, c);
  return *this;
}

LaurentZ& LaurentZ::operator-=(const LaurentZ& other) {
  for (const auto& [e, c] : other.terms_) accumulate(terms_, e, Integer(-c));
  return *this;
}

LaurentZ& LaurentZ::operator*=(const LaurentZ& other) {
  *this = *this * other;
  return *this;
}

LaurentZ operator*(const LaurentZ& a, const LaurentZ& b) {
  LaurentZ out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) accumulate(out.terms_, ea + eb, Integer(ca * cb));
  return out;
}

LaurentZ operator-(LaurentZ a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

std::string LaurentZ::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) append_term(out, c, power("z", e));
  return out;
}

// --------------------------------------------------------------- LaurentVZ

LaurentVZ::LaurentVZ(long constant) {
  if (constant != 0) terms_.emplace(Exponent{0, 0}, Integer(constant));
}

LaurentVZ LaurentVZ::monomial(Integer coeff, int v_exp, int z_exp) {
  LaurentVZ p;
  accumulate(p.terms_, Exponent{v_exp, z_exp}, coeff);
  return p;
}

LaurentVZ LaurentVZ::from_z(const LaurentZ& p, int v_exp) {
  LaurentVZ out;
  for (const auto& [e, c] : p.terms()) out.terms_.emplace(Exponent{v_exp, e}, c);
  return out;
}

Integer LaurentVZ::coeff(int v_exp, int z_exp) const {
  auto it = terms_.find({v_exp, z_exp});
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<int> LaurentVZ::min_v_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.first;
}

std::optional<int> LaurentVZ::max_v_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.first;
}

void LaurentVZ::add_term(int v_exp, int z_exp, const Integer& coeff) {
  accumulate(terms_, Exponent{v_exp, z_exp}, coeff);
}

LaurentVZ LaurentVZ::shifted(int v_shift, int z_shift) const {
  LaurentVZ out;
  for (const auto& [e, c] : terms_)
    out.terms_.emplace_hint(out.terms_.end(), Exponent{e.first + v_shift, e.second + z_shift}, c);
  return out;
}

LaurentVZ& LaurentVZ::operator+=(const LaurentVZ& other) {
  for (const auto& [e, c] : other.terms_) accumulate(terms_, e, c);
  return *this;
}

LaurentVZ& LaurentVZ::operator-=(const LaurentVZ& other) {
  for (const auto& [e, c] : other.terms_) accumulate(terms_, e, Integer(-c));
  return *this;
}

LaurentVZ& LaurentVZ::operator*=(const LaurentVZ& other) {
  *this = *this * other;
  return *this;
}

LaurentVZ operator*(const LaurentVZ& a, const LaurentVZ& b) {
  LaurentVZ out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      accumulate(out.terms_, LaurentVZ::Exponent{ea.first + eb.first, ea.second + eb.second},
                 Integer(ca * cb));
  return out;
}

LaurentVZ operator-(LaurentVZ a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

std::string LaurentVZ::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) append_term(out, c, power("v", e.first) + power("z", e.second));
  return out;
}

// ------------------------------------------------------------- free functions

LaurentVZ add(const LaurentVZ& a, const LaurentVZ& b) { return a + b; }
LaurentVZ mul(const LaurentVZ& a, const LaurentVZ& b) { return a * b; }

LaurentZ coeff_of_v(const LaurentVZ& p, int k) {
  LaurentZ out;
  auto it = p.terms().lower_bound({k, std::numeric_limits<int>::min()});
  for (; it != p.terms().end() && it->first.first == k; ++it) out.add_term(it->first.second, it->second);
  return out;
}

LaurentVZ delta_pow(int k) {
  if (k < 0) throw std::invalid_argument("delta_pow: negative exponent");
  // (v^-1 - v)^k z^-k, binomially expanded.
  LaurentVZ out;
  Integer binom = 1;
  for (int j = 0; j <= k; ++j) {
    // term C(k,j) (v^-1)^(k-j) (-v)^j
    Integer c = (j % 2 == 0) ? binom : Integer(-binom);
    out.add_term(2 * j - k, -k, c);
    binom = binom * (k - j) / (j + 1);
  }
  return out;
}

nlohmann::json to_json(const LaurentVZ& p) {
  auto terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"v", e.first}, {"z", e.second}, {"c", c.get_str()}});
  return {{"terms", terms}};
}

LaurentVZ laurent_vz_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    throw std::invalid_argument("polynomial JSON: expected an object with a \"terms\" array");
  LaurentVZ out;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("v") || !t.contains("z") || !t.contains("c"))
      throw std::invalid_argument("polynomial JSON: each term needs \"v\", \"z\" and \"c\"");
    if (!t.at("v").is_number_integer() || !t.at("z").is_number_integer())
      throw std::invalid_argument("polynomial JSON: exponents must be integers");
    Integer c;
    const auto& cj = t.at("c");
    if (cj.is_string()) {
      if (c.set_str(cj.get<std::string>(), 10) != 0)
        throw std::invalid_argument("polynomial JSON: bad coefficient \"" + cj.get<std::string>() + "\"");
    } else if (cj.is_number_integer()) {
      c = Integer(cj.get<long>());
    } else {
      throw std::invalid_argument("polynomial JSON: coefficient must be a decimal string");
    }
    out.add_term(t.at("v").get<int>(), t.at("z").get<int>(), c);
  }
  return out;
}

}  // namespace knitweave
