// knitweave: HOMFLY polynomials of braid closures, PD codes and knitted
// diagrams; full-twist verification; Hecke expansions; random campaigns.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "knitweave/campaign.hpp"
#include "knitweave/errors.hpp"
#include "knitweave/hecke.hpp"
#include "knitweave/knitted.hpp"
#include "knitweave/skein.hpp"
#include "knitweave/table.hpp"

using namespace knitweave;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct InputOptions {
  std::string braid;
  bool has_braid = false;
  int strands = 0;
  std::string pd_path;
  std::string knitted_path;
};

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void add_input_options(CLI::App* cmd, InputOptions& in, bool allow_pd) {
  cmd->add_option_function<std::string>(
         "--braid", [&in](const std::string& s) { in.braid = s, in.has_braid = true; },
         "braid word, comma-separated generators, e.g. \"1,-2,1\"")
      ->expected(0, 1)
      ->allow_extra_args(false);
  cmd->add_option("--strands", in.strands, "strand count for --braid (default: smallest that fits)");
  if (allow_pd) cmd->add_option("--pd", in.pd_path, "PD code file");
  cmd->add_option("--knitted", in.knitted_path, "knitted diagram JSON file");
}

int strands_for(const std::string& braid, int strands) {
  if (strands > 0) return strands;
  // Smallest strand count admitting every generator in the word.
  int needed = 1;
  std::stringstream ss(braid);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      needed = std::max(needed, std::abs(std::stoi(tok)) + 1);
    } catch (const std::exception&) {
      // parse_braid_word reports the position.
    }
  }
  return needed;
}

std::optional<KnittedDiagram> knitted_input(const InputOptions& in) {
  int sources = in.has_braid + !in.pd_path.empty() + !in.knitted_path.empty();
  if (sources != 1) throw ParseError("give exactly one of --braid, --pd, --knitted");
  if (in.has_braid)
    return KnittedDiagram::braid_closure(parse_braid_word(in.braid, strands_for(in.braid, in.strands)));
  if (!in.knitted_path.empty()) return parse_knitted(read_file(in.knitted_path));
  return std::nullopt;
}

json mp_json(const MpPrediction& mp) {
  return {{"predicts_plus_zero", mp.predicts_plus_zero}, {"predicts_minus_zero", mp.predicts_minus_zero}};
}

int cmd_homfly(const InputOptions& in, const std::string& format, const std::string& evaluator) {
  std::optional<KnittedDiagram> k = knitted_input(in);
  PlanarDiagram d = k ? compile(*k) : parse_pd(read_file(in.pd_path));
  bool use_hecke = k && evaluator != "skein";
  if (!k && evaluator == "hecke") throw ParseError("--evaluator hecke needs a braid or knitted input");
  if (!use_hecke && !planarity_check(d)) throw NonPlanarDiagram("diagram is not planar");
  LaurentVZ framed = use_hecke ? eval_hecke(*k) : homfly_framed(d);
  const int w = writhe(d);
  const int s = seifert_circles(d).count;
  const int components = component_count(d);
  LaurentVZ unframed = framed.shifted(w, 0);
  const MpPrediction mp = mp_vanishing(d);
  const ExtremeCoeffs ex = extreme_coeffs(framed, s);
  const bool mfw = mfw_check(framed, s);
  const bool parity = parity_check(framed, s, components);

  if (format == "json") {
    json out = {{"framed", to_json(framed)},
                {"unframed", to_json(unframed)},
                {"seifert_circles", s},
                {"writhe", w},
                {"components", components},
                {"crossings", d.crossing_count()},
                {"h_minus", ex.h_minus.to_string()},
                {"h_plus", ex.h_plus.to_string()},
                {"mfw_ok", mfw},
                {"parity_ok", parity},
                {"mp", mp_json(mp)}};
    std::cout << out.dump(2) << "\n";
  } else if (format == "table") {
    std::cout << render_table(framed);
  } else {
    std::cout << "framed H    = " << framed.to_string() << "\n"
              << "unframed P  = " << unframed.to_string() << "\n"
              << "s(D)        = " << s << "\n"
              << "writhe      = " << w << "\n"
              << "components  = " << components << "\n"
              << "H-          = " << ex.h_minus.to_string() << "\n"
              << "H+          = " << ex.h_plus.to_string() << "\n"
              << "MFW bounds  = " << (mfw ? "ok" : "VIOLATED") << "\n"
              << "parity      = " << (parity ? "ok" : "VIOLATED") << "\n"
              << "MP predicts = H+ " << (mp.predicts_plus_zero ? "= 0" : "unconstrained") << ", H- "
              << (mp.predicts_minus_zero ? "= 0" : "unconstrained") << "\n";
  }
  return 0;
}

int cmd_verify_ft(const InputOptions& in, const std::string& evaluator, bool inject) {
  std::optional<KnittedDiagram> k = knitted_input(in);
  VerifyOptions options;
  options.evaluator = evaluator == "skein" ? Evaluator::skein : Evaluator::hecke;
  if (inject) options.inject_h_plus_offset = LaurentZ(1);
  TheoremReport r = verify_theorem(*k, options);
  std::cout << r.render();
  return r.passed() ? 0 : kExitFail;
}

int cmd_hecke(const InputOptions& in, const std::string& basis) {
  if (!in.has_braid) throw ParseError("hecke-expand needs --braid");
  HeckeElement x = expand_word(parse_braid_word(in.braid, strands_for(in.braid, in.strands)));
  if (basis == "npb") x = convert(x, Basis::npb);
  std::cout << x.render();
  return 0;
}

int cmd_random_test(const CampaignConfig& config) {
  CampaignSummary summary = run_campaign(config);
  std::cout << summary.render();
  return summary.all_passed() ? 0 : kExitFail;
}

int cmd_table(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("polynomial JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("framed")) j = j.at("framed");
  std::cout << render_table(laurent_vz_from_json(j));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HOMFLY polynomials of knitted diagrams"};
  app.require_subcommand(1);

  InputOptions in;
  std::string format = "text";
  std::string evaluator = "auto";
  const std::vector<std::string> evaluators{"auto", "skein", "hecke"};

  auto* homfly = app.add_subcommand("homfly", "framed and unframed HOMFLY polynomial");
  add_input_options(homfly, in, true);
  homfly->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table", "text"}));
  homfly->add_option("--evaluator", evaluator, "skein tree or Hecke expansion (auto: Hecke for braids/knitted)")
      ->check(CLI::IsMember(evaluators));

  bool inject = false;
  auto* verify = app.add_subcommand("verify-ft", "check H-(D) = (-1)^(s-1) H+(FT D)");
  add_input_options(verify, in, false);
  verify->add_option("--evaluator", evaluator, "evaluation path")->check(CLI::IsMember(evaluators));
  verify->add_flag("--inject-mismatch", inject, "perturb H+(FT D) by 1 (negative control)");

  std::string basis = "ppb";
  auto* hecke = app.add_subcommand("hecke-expand", "expand a braid word in the Hecke algebra");
  add_input_options(hecke, in, false);
  hecke->add_option("--basis", basis, "ppb or npb")->check(CLI::IsMember({"ppb", "npb"}));

  CampaignConfig campaign;
  auto* random = app.add_subcommand("random-test", "seeded random verification campaign");
  random->add_option("--seed", campaign.seed, "64-bit seed");
  random->add_option("--count", campaign.count, "number of samples")->check(CLI::NonNegativeNumber);
  random->add_option("--max-strands", campaign.bounds.max_strands)->check(CLI::Range(1, 6));
  random->add_option("--max-boxes", campaign.bounds.max_boxes)->check(CLI::Range(1, 8));
  random->add_option("--max-length", campaign.bounds.max_word_length)->check(CLI::NonNegativeNumber);
  random->add_option("--retries", campaign.bounds.max_retries, "rejection-sampling budget per template");
  std::string mix = "mixed";
  random->add_option("--mix", mix, "sample kinds")->check(CLI::IsMember({"mixed", "braids", "knitted"}));

  std::string table_path = "-";
  auto* table = app.add_subcommand("table", "render polynomial JSON as a coefficient grid");
  table->add_option("input", table_path, "polynomial JSON file, or homfly --format json output ('-' for stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*homfly) return cmd_homfly(in, format, evaluator);
    if (*verify) return cmd_verify_ft(in, evaluator, inject);
    if (*hecke) return cmd_hecke(in, basis);
    if (*table) return cmd_table(table_path);
    if (*random) {
      campaign.mix = mix == "braids" ? SampleMix::braids : mix == "knitted" ? SampleMix::knitted : SampleMix::mixed;
      return cmd_random_test(campaign);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidTemplate& e) {
    std::cerr << e.what();
    return kExitInput;
  } catch (const NonPlanarDiagram& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
