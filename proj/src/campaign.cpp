#include "knitweave/campaign.hpp"

#include <random>

#include "knitweave/parallel.hpp"
#include "knitweave/skein.hpp"

namespace knitweave {

namespace {

void check_polynomial(const std::string& name, const LaurentVZ& h, const PlanarDiagram& d,
                      std::vector<std::string>& failures) {
  const int s = seifert_circles(d).count;
  if (!mfw_check(h, s)) failures.push_back(name + ": v-degrees outside the MFW range");
  if (!parity_check(h, s, component_count(d))) failures.push_back(name + ": parity of exponents");
  const MpPrediction mp = mp_vanishing(d);
  const ExtremeCoeffs ex = extreme_coeffs(h, s);
  if (mp.predicts_plus_zero && !ex.h_plus.is_zero())
    failures.push_back(name + ": predicted H+ = 0, got " + ex.h_plus.to_string());
  if (mp.predicts_minus_zero && !ex.h_minus.is_zero())
    failures.push_back(name + ": predicted H- = 0, got " + ex.h_minus.to_string());
}

}  // namespace

std::vector<std::string> check_sample(const KnittedDiagram& k, bool check_ft_paths) {
  std::vector<std::string> failures;
  const TheoremReport report = verify_theorem(k);
  if (!report.formula_holds)
    failures.push_back("H-(D) = " + report.h_minus.to_string() + " but sign*H+(FT D) = " +
                       (report.h_plus_ft * LaurentZ(report.sign)).to_string());
  if (!report.fast_path_agrees)
    failures.push_back("Hecke top-coefficient formula gives " + report.h_minus_fast.to_string() +
                       ", H-(D) = " + report.h_minus.to_string());

  const KnittedDiagram twisted = ft(k);
  const PlanarDiagram d = compile(k);
  const PlanarDiagram dt = compile(twisted);
  const LaurentVZ h = eval_hecke(k);
  const LaurentVZ ht = eval_hecke(twisted);
  if (homfly_framed(d) != h) failures.push_back("eval_hecke and skein evaluation differ on D");
  if (check_ft_paths && homfly_framed(dt) != ht) failures.push_back("eval_hecke and skein evaluation differ on FT D");
  check_polynomial("H(D)", h, d, failures);
  check_polynomial("H(FT D)", ht, dt, failures);
  return failures;
}

KnittedDiagram campaign_sample(const CampaignConfig& config, int index, bool* braid, int* retries) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  bool as_braid = config.mix == SampleMix::braids || (config.mix == SampleMix::mixed && index % 2 == 0);
  if (braid) *braid = as_braid;
  if (as_braid) {
    if (retries) *retries = 0;
    std::uniform_int_distribution<int> strands(1, std::max(1, config.bounds.max_strands));
    return KnittedDiagram::braid_closure(random_word(rng, strands(rng), config.bounds.max_word_length));
  }
  return random_knitted_diagram(rng, config.bounds, retries);
}

int CampaignSummary::passed_count() const {
  int n = 0;
  for (const auto& s : samples) n += s.passed();
  return n;
}

std::string CampaignSummary::render() const {
  int braids = 0, retries = 0;
  for (const auto& s : samples) {
    braids += s.braid;
    retries += s.retries;
  }
  const int total = static_cast<int>(samples.size());
  std::string out = "seed " + std::to_string(config.seed) + ", bounds: boxes <= " +
                    std::to_string(config.bounds.max_boxes) + ", strands <= " +
                    std::to_string(config.bounds.max_strands) + ", word length <= " +
                    std::to_string(config.bounds.max_word_length) + "\n";
  out += "samples: " + std::to_string(braids) + " braid closures, " + std::to_string(total - braids) +
         " knitted diagrams, " + std::to_string(retries) + " rejected templates\n";
  for (const auto& s : samples) {
    if (s.passed()) continue;
    out += "first failure: sample " + std::to_string(s.index) + " (seed " + std::to_string(config.seed) + ")\n";
    for (const auto& f : s.failures) out += "  " + f + "\n";
    out += "  diagram: " + to_json(s.diagram).dump() + "\n";
    break;
  }
  out += std::to_string(passed_count()) + "/" + std::to_string(total) + " pass\n";
  return out;
}

CampaignSummary run_campaign(const CampaignConfig& config) {
  CampaignSummary summary;
  summary.config = config;
  summary.samples.resize(std::max(0, config.count));
  detail::parallel_for(config.count, worker_count(), [&](int, int index) {
    SampleResult& r = summary.samples[index];
    r.index = index;
    r.diagram = campaign_sample(config, index, &r.braid, &r.retries);
    r.failures = check_sample(r.diagram, config.check_ft_paths);
  });
  return summary;
}

}  // namespace knitweave
