#pragma once

// Shared helpers for the test binaries: polynomial literals, invariant checks
// and an independent, deliberately naive skein evaluator.

#include <initializer_list>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "knitweave/diagram.hpp"
#include "knitweave/knitted.hpp"
#include "knitweave/laurent.hpp"
#include "knitweave/skein.hpp"

namespace testing {

using namespace knitweave;

/// Terms (v, z, c).
inline LaurentVZ vz(std::initializer_list<std::tuple<int, int, long>> terms) {
  LaurentVZ p;
  for (auto [v, z, c] : terms) p.add_term(v, z, Integer(c));
  return p;
}

/// Terms (z, c).
inline LaurentZ zp(std::initializer_list<std::pair<int, long>> terms) {
  LaurentZ p;
  for (auto [z, c] : terms) p.add_term(z, Integer(c));
  return p;
}

inline BraidWord word(int n, std::vector<int> letters) { return BraidWord(n, std::move(letters)); }

/// Empty if h satisfies MFW, parity and the MP-predicted zeros for d;
/// otherwise a description of the first violation.
inline std::string invariant_violation(const PlanarDiagram& d, const LaurentVZ& h) {
  const int s = seifert_circles(d).count;
  if (!mfw_check(h, s)) return "MFW bounds violated by " + h.to_string();
  if (!parity_check(h, s, component_count(d))) return "parity violated by " + h.to_string();
  const MpPrediction mp = mp_vanishing(d);
  const ExtremeCoeffs ex = extreme_coeffs(h, s);
  if (mp.predicts_plus_zero && !ex.h_plus.is_zero()) return "MP predicted H+ = 0 for " + h.to_string();
  if (mp.predicts_minus_zero && !ex.h_minus.is_zero()) return "MP predicted H- = 0 for " + h.to_string();
  return {};
}

// ------------------------------------------------------------- naive oracle
//
// No memo, no kink removal, no splitting into pieces. Each call draws a random
// component order and base points; the switched branch keeps that walk plan,
// the smoothed branch draws a new one. The crossing to resolve is a random
// out-of-order one.

class NaiveSkein {
 public:
  explicit NaiveSkein(std::uint64_t seed) : rng_(seed) {}

  LaurentVZ eval(const PlanarDiagram& d) { return eval(d.crossings(), d.free_loops()); }

 private:
  struct Plan {
    std::vector<int> bases;  // one arc per component, in walk order
  };

  LaurentVZ eval(std::vector<Crossing> cs, int loops) {
    if (cs.empty()) return delta_pow(loops - 1);
    return eval_with(cs, loops, random_plan(cs));
  }

  // Arc -> the arc following it along the strand.
  static std::vector<std::pair<int, int>> successors(const std::vector<Crossing>& cs) {
    std::vector<std::pair<int, int>> next;
    for (const auto& c : cs) {
      next.emplace_back(c.under_in, c.under_out);
      next.emplace_back(c.over_in, c.over_out);
    }
    return next;
  }

  static int follow(const std::vector<std::pair<int, int>>& next, int a) {
    for (auto [from, to] : next)
      if (from == a) return to;
    return -1;
  }

  Plan random_plan(const std::vector<Crossing>& cs) {
    auto next = successors(cs);
    std::set<int> unseen;
    for (auto [from, to] : next) unseen.insert(from);
    std::vector<std::vector<int>> cycles;
    while (!unseen.empty()) {
      cycles.emplace_back();
      for (int a = *unseen.begin(); unseen.count(a); a = follow(next, a)) {
        unseen.erase(a);
        cycles.back().push_back(a);
      }
    }
    std::shuffle(cycles.begin(), cycles.end(), rng_);
    Plan plan;
    for (const auto& cyc : cycles) {
      std::uniform_int_distribution<size_t> pick(0, cyc.size() - 1);
      plan.bases.push_back(cyc[pick(rng_)]);
    }
    return plan;
  }

  // Indices of crossings first met on their under strand.
  static std::vector<int> out_of_order(const std::vector<Crossing>& cs, const Plan& plan) {
    auto next = successors(cs);
    std::vector<bool> met(cs.size(), false);
    std::vector<int> bad;
    for (int base : plan.bases) {
      int a = base;
      do {
        for (size_t i = 0; i < cs.size(); ++i) {
          if (cs[i].under_in != a && cs[i].over_in != a) continue;
          if (!met[i]) {
            met[i] = true;
            if (cs[i].under_in == a) bad.push_back(static_cast<int>(i));
          }
        }
        a = follow(next, a);
      } while (a != base);
    }
    return bad;
  }

  LaurentVZ eval_with(std::vector<Crossing> cs, int loops, const Plan& plan) {
    std::vector<int> bad = out_of_order(cs, plan);
    if (bad.empty()) {
      int w = 0;
      for (const auto& c : cs) w += c.sign;
      return delta_pow(static_cast<int>(plan.bases.size()) + loops - 1).shifted(-w, 0);
    }
    std::uniform_int_distribution<size_t> pick(0, bad.size() - 1);
    const size_t i = bad[pick(rng_)];
    const Crossing c = cs[i];

    std::vector<Crossing> switched = cs;
    switched[i] = {c.over_in, c.under_in, c.over_out, c.under_out, -c.sign};
    LaurentVZ result = eval_with(switched, loops, plan);

    // Smoothing: under_in continues as over_out, over_in as under_out.
    std::vector<Crossing> smoothed;
    for (size_t j = 0; j < cs.size(); ++j)
      if (j != i) smoothed.push_back(cs[j]);
    auto rename = [&](int from, int to) {
      for (auto& d : smoothed)
        for (int* a : {&d.under_in, &d.over_in, &d.under_out, &d.over_out})
          if (*a == from) *a = to;
    };
    int new_loops = 0;
    auto glue = [&](int in_arc, int out_arc) {
      // in_arc ends at c, out_arc starts there; they become one arc.
      if (in_arc == out_arc) {
        ++new_loops;
        return;
      }
      rename(out_arc, in_arc);
    };
    glue(c.under_in, c.over_out);
    // If over_in was the arc leaving through over_out, it is now under_in.
    glue(c.over_in == c.over_out ? c.under_in : c.over_in, c.under_out);
    LaurentVZ smooth_value = eval(std::move(smoothed), loops + new_loops).shifted(0, 1);
    if (c.sign > 0)
      result += smooth_value;
    else
      result -= smooth_value;
    return result;
  }

  std::mt19937_64 rng_;
};

}  // namespace testing
