#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "minfill/json_io.hpp"
#include "minfill/metric_space.hpp"

namespace minfill {

/// One line of the worked-example table.
struct ExampleLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Reproduces the four reference instances: the parametric gap (8 vs 7) on
/// the fixed four-point type, its global values (7, 7), the triangle-violating
/// three-point instance (5, 4) and unboundedness on a pendant interior
/// vertex. `corrupt` perturbs one embedded distance to exercise the FAIL path.
std::vector<ExampleLine> run_paper_examples(bool corrupt = false);

/// The four-point space {a,b,c,d} with rho(a,b) = rho(c,d) = 4 and 3 otherwise.
PseudometricSpace example_gap_space();
/// Three points with rho(x,y) = 1, rho(y,z) = 2, rho(z,x) = 5.
PseudometricSpace example_violating_space();

enum class Check { Theorem, TourBound, Lemma5, Lemma6, Denegativize, Positivity };

std::string check_name(Check check);
Check parse_check(const std::string& name);
std::set<Check> all_checks();

struct CampaignConfig {
  std::vector<std::size_t> sizes;
  std::size_t instances_per_size = 1;
  std::uint64_t seed = 0;
  SpaceRequest request = SpaceRequest::Metric;
  std::set<Check> checks = all_checks();
  unsigned jobs = 1;
  /// 0 means default_max_n().
  std::size_t max_n = 0;
};

/// Throws ValidationError.
void validate(const CampaignConfig& config);

/// Seed of instance `index` of boundary size `size`.
std::uint64_t instance_seed(std::uint64_t campaign_seed, std::size_t size, std::size_t index);

struct CampaignFailure {
  std::size_t size;
  std::size_t index;
  std::string check;
  std::string message;
  Json instance;
};

struct CampaignCounts {
  std::size_t instances = 0;
  std::size_t in_hypothesis = 0;
  std::size_t out_of_hypothesis = 0;
  std::size_t non_degenerate = 0;
  std::size_t theorem_equal = 0;
  /// Out-of-hypothesis instances with mf_minus < mf.
  std::size_t strict_gaps = 0;
  std::size_t parametric_optima = 0;
  /// Types whose generalized optimum is strictly below the non-negative one.
  std::size_t parametric_gaps = 0;
  /// Globally minimal generalized optima that contained a negative edge.
  std::size_t negative_global_optima = 0;
  std::size_t instances_with_negative_optimum = 0;
  std::size_t denegativized = 0;
  std::size_t modification_steps = 0;
  std::size_t max_steps = 0;
};

struct CampaignSummary {
  CampaignConfig config;
  CampaignCounts counts;
  std::vector<CampaignFailure> failures;
  /// Per-check failure tallies, keyed by check name.
  std::vector<std::pair<std::string, std::size_t>> failures_by_check;

  bool ok() const { return failures.empty(); }
};

/// Generates instances_per_size spaces for every size and runs the selected
/// checks on each. Results are assembled in (size, index) order, so the
/// summary does not depend on `jobs`.
CampaignSummary run_campaign(const CampaignConfig& config);

/// Runs every selected check on one space; failures are appended to `out`.
void check_instance(const PseudometricSpace& space, const std::set<Check>& checks, CampaignCounts& counts,
                    std::vector<std::pair<std::string, std::string>>& failures, std::size_t max_n = 0);

Json summary_to_json(const CampaignSummary& summary);

}  // namespace minfill
