#pragma once

// Framed HOMFLY evaluation by the skein tree with descending-diagram leaves.
//
//   H(L+) - H(L-) = z H(L0),   H(positive kink) = v^-1 H(|),
//   H(negative kink) = v H(|),  H = v^-w P.

#include <cstddef>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "knitweave/diagram.hpp"
#include "knitweave/laurent.hpp"

namespace knitweave {

struct HomflyResult {
  LaurentVZ framed;
  LaurentVZ unframed;
  int seifert_count = 0;
  int writhe = 0;
};

struct ExtremeCoeffs {
  LaurentZ h_minus;  // coefficient of v^(1-s)
  LaurentZ h_plus;   // coefficient of v^(s-1)
};

struct MpPrediction {
  bool predicts_plus_zero = false;
  bool predicts_minus_zero = false;
};

/// Memoized evaluator. The memo maps canonical codes of connected, kink-free
/// pieces to their framed polynomial; lookups and inserts are individually
/// atomic, so one instance may be shared across threads.
class SkeinEvaluator {
 public:
  /// Throws NonPlanarDiagram if planarity_check fails.
  LaurentVZ framed(const PlanarDiagram& d);

  std::size_t cache_size() const;
  void clear_cache();

 private:
  struct CodeHash {
    std::size_t operator()(const std::vector<int>& code) const noexcept;
  };

  LaurentVZ eval(std::vector<Crossing> crossings, int free_loops);
  LaurentVZ eval_piece(const std::vector<Crossing>& piece);

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::vector<int>, LaurentVZ, CodeHash> memo_;
};

/// Process-wide evaluator used by the free functions below.
SkeinEvaluator& default_evaluator();

LaurentVZ homfly_framed(const PlanarDiagram& d);
LaurentVZ homfly_unframed(const PlanarDiagram& d);
HomflyResult homfly(const PlanarDiagram& d);

ExtremeCoeffs extreme_coeffs(const LaurentVZ& h, int s);
bool mfw_check(const LaurentVZ& h, int s);

/// v-exponents all congruent to s-1 and z-exponents all congruent to
/// components-1, modulo 2.
bool parity_check(const LaurentVZ& h, int s, int components);

/// Seifert-circle pairs joined by exactly one crossing force the matching
/// extreme coefficient to vanish.
MpPrediction mp_vanishing(const PlanarDiagram& d);

}  // namespace knitweave
