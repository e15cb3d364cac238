#pragma once

// Seeded randomized checks over braid closures and knitted diagrams.

#include <cstdint>
#include <string>
#include <vector>

#include "knitweave/knitted.hpp"

namespace knitweave {

enum class SampleMix { mixed, braids, knitted };

struct CampaignConfig {
  std::uint64_t seed = 0;
  int count = 50;
  RandomBounds bounds;
  SampleMix mix = SampleMix::mixed;
  /// Also compare eval_hecke with the skein evaluator on FT D.
  bool check_ft_paths = true;
};

struct SampleResult {
  int index = 0;
  bool braid = false;  // braid closure rather than general knitted diagram
  int retries = 0;
  KnittedDiagram diagram;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

struct CampaignSummary {
  CampaignConfig config;
  std::vector<SampleResult> samples;  // in sample-index order
  int passed_count() const;
  bool all_passed() const { return passed_count() == static_cast<int>(samples.size()); }
  std::string render() const;
};

/// Sample i depends only on (seed, i), so results do not depend on the
/// number of workers.
KnittedDiagram campaign_sample(const CampaignConfig& config, int index, bool* braid, int* retries);

/// Checks on one diagram: the FT identity and fast formula, eval_hecke against
/// the skein evaluator, MFW bounds, parity, and MP-predicted zeros.
std::vector<std::string> check_sample(const KnittedDiagram& k, bool check_ft_paths = true);

CampaignSummary run_campaign(const CampaignConfig& config);

}  // namespace knitweave
