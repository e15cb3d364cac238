#include "doctest.h"
#include "knitweave/campaign.hpp"
#include "support.hpp"

using namespace knitweave;

TEST_CASE("empty campaign") {
  CampaignConfig c;
  c.count = 0;
  CampaignSummary s = run_campaign(c);
  CHECK(s.all_passed());
  CHECK(s.render().find("0/0 pass") != std::string::npos);
}

TEST_CASE("seeded campaign passes and is reproducible") {
  CampaignConfig c;
  c.seed = 7;
  c.count = 50;
  c.bounds.max_strands = 3;
  CampaignSummary a = run_campaign(c);
  CampaignSummary b = run_campaign(c);
  CHECK(a.all_passed());
  CHECK(a.render() == b.render());
  CHECK(a.render().find("50/50 pass") != std::string::npos);
  for (size_t i = 0; i < a.samples.size(); ++i) CHECK(a.samples[i].diagram == b.samples[i].diagram);
}

TEST_CASE("different seeds give different samples") {
  CampaignConfig c;
  c.count = 10;
  c.seed = 1;
  CampaignSummary a = run_campaign(c);
  c.seed = 2;
  CampaignSummary b = run_campaign(c);
  int same = 0;
  for (int i = 0; i < 10; ++i) same += a.samples[i].diagram == b.samples[i].diagram;
  CHECK(same < 10);
}

TEST_CASE("sample kinds") {
  CampaignConfig c;
  c.count = 6;
  c.mix = SampleMix::braids;
  for (const auto& s : run_campaign(c).samples) {
    CHECK(s.braid);
    CHECK(s.diagram.knitting().box_count() == 1);
  }
  c.mix = SampleMix::mixed;
  auto samples = run_campaign(c).samples;
  CHECK(samples[0].braid);
  CHECK_FALSE(samples[1].braid);
}

TEST_CASE("failures are reported with their sample") {
  CampaignSummary s;
  s.config.seed = 3;
  SampleResult r;
  r.index = 4;
  r.diagram = KnittedDiagram::braid_closure(BraidWord(2, {1}));
  r.failures = {"something broke"};
  s.samples = {SampleResult{}, r};
  std::string text = s.render();
  CHECK(text.find("first failure: sample 4 (seed 3)") != std::string::npos);
  CHECK(text.find("something broke") != std::string::npos);
  CHECK(text.find("1/2 pass") != std::string::npos);
}
