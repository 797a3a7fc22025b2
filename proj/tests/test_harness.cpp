#include <gtest/gtest.h>

#include <set>

#include "minfill/error.hpp"
#include "minfill/harness.hpp"

namespace minfill {
namespace {

TEST(PaperExamples, AllPass) {
  auto lines = run_paper_examples();
  ASSERT_EQ(lines.size(), 4u);
  for (const auto& l : lines) EXPECT_TRUE(l.pass) << l.name << ": " << l.detail;
  EXPECT_EQ(lines[0].name, "parametric-gap");
  EXPECT_EQ(lines[3].name, "pendant-interior-unbounded");
}

TEST(PaperExamples, CorruptModeFails) {
  auto lines = run_paper_examples(true);
  bool any_fail = false;
  for (const auto& l : lines) any_fail = any_fail || !l.pass;
  EXPECT_TRUE(any_fail);
}

TEST(PaperExamples, Deterministic) {
  auto a = run_paper_examples();
  auto b = run_paper_examples();
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k].detail, b[k].detail);
}

TEST(Checks, NamesRoundTrip) {
  for (Check c : all_checks()) EXPECT_EQ(parse_check(check_name(c)), c);
  EXPECT_EQ(all_checks().size(), 6u);
  EXPECT_THROW(parse_check("everything"), ValidationError);
}

TEST(CampaignConfig, Validation) {
  CampaignConfig ok{{3, 4}, 2, 1};
  EXPECT_NO_THROW(validate(ok));
  CampaignConfig no_sizes = ok;
  no_sizes.sizes.clear();
  EXPECT_THROW(validate(no_sizes), ValidationError);
  CampaignConfig zero_count = ok;
  zero_count.instances_per_size = 0;
  EXPECT_THROW(validate(zero_count), ValidationError);
  CampaignConfig too_big = ok;
  too_big.sizes = {12};
  EXPECT_THROW(validate(too_big), ValidationError);
  CampaignConfig too_small = ok;
  too_small.sizes = {1};
  EXPECT_THROW(validate(too_small), ValidationError);
}

TEST(Campaign, InstanceSeedsDiffer) {
  std::set<std::uint64_t> seeds;
  for (std::size_t size = 3; size <= 6; ++size) {
    for (std::size_t i = 0; i < 100; ++i) seeds.insert(instance_seed(42, size, i));
  }
  EXPECT_EQ(seeds.size(), 400u);
  EXPECT_NE(instance_seed(1, 3, 0), instance_seed(2, 3, 0));
}

TEST(Campaign, DeterministicAcrossRunsAndJobs) {
  CampaignConfig config{{3, 4}, 8, 99};
  CampaignSummary one = run_campaign(config);
  config.jobs = 3;
  CampaignSummary three = run_campaign(config);
  EXPECT_TRUE(one.ok());
  EXPECT_EQ(one.counts.instances, 16u);
  EXPECT_EQ(one.counts.theorem_equal, 16u);
  // The config block records jobs, so compare the result blocks only.
  Json a = summary_to_json(one);
  Json b = summary_to_json(three);
  a.erase("config");
  b.erase("config");
  EXPECT_EQ(a.dump(), b.dump());

  CampaignConfig single{{3}, 1, 5};
  EXPECT_EQ(summary_to_json(run_campaign(single)).dump(), summary_to_json(run_campaign(single)).dump());
}

TEST(Campaign, ViolatingSpacesMayOpenAGap) {
  CampaignConfig config{{3, 4}, 10, 7, SpaceRequest::TriangleViolating, {Check::Theorem}};
  CampaignSummary s = run_campaign(config);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.counts.out_of_hypothesis, 20u);
  EXPECT_GT(s.counts.strict_gaps, 0u);
}

TEST(Campaign, CheckInstanceFlagsOnlyRealFailures) {
  CampaignCounts counts;
  std::vector<std::pair<std::string, std::string>> failures;
  check_instance(example_gap_space(), all_checks(), counts, failures);
  EXPECT_TRUE(failures.empty());
  EXPECT_EQ(counts.theorem_equal, 1u);
  EXPECT_EQ(counts.parametric_gaps, 1u);

  check_instance(example_violating_space(), all_checks(), counts, failures);
  EXPECT_TRUE(failures.empty());
  EXPECT_EQ(counts.strict_gaps, 1u);
}

}  // namespace
}  // namespace minfill
