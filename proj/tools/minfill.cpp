// Command-line front end: solve instances, reproduce the worked examples,
// run randomized verification campaigns and enumerate binary types.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "minfill/denegativize.hpp"
#include "minfill/error.hpp"
#include "minfill/harness.hpp"
#include "minfill/solver.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitSizeLimit = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw minfill::ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_solve(const std::string& path, bool denegativize, bool per_topology, unsigned jobs) {
  using namespace minfill;
  PseudometricSpace space = parse_space(read_file(path));
  SolverOptions options;
  options.jobs = jobs;
  options.keep_per_topology = per_topology;
  SolveReport report = solve_space(space, options);
  Json doc = report_to_json(report, per_topology);
  if (denegativize) {
    if (!satisfies_triangle_inequality(space)) {
      doc["denegativized"] = Json{{"skipped", "space violates the triangle inequality"}};
    } else {
      DenegativizeResult out = remove_negative_edges(report.mf_minus_filling, space);
      Json steps = Json::array();
      for (const auto& s : out.steps) steps.push_back(step_to_json(s));
      doc["denegativized"] = Json{{"filling", filling_to_json(out.filling)},
                                  {"total_weight", rational_to_json(out.filling.total_weight())},
                                  {"steps", std::move(steps)}};
    }
  }
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int cmd_examples(bool corrupt) {
  bool ok = true;
  for (const auto& line : minfill::run_paper_examples(corrupt)) {
    std::cout << (line.pass ? "PASS " : "FAIL ") << line.name << ": " << line.detail << "\n";
    ok = ok && line.pass;
  }
  return ok ? 0 : kExitFailure;
}

int cmd_campaign(minfill::CampaignConfig config) {
  const auto start = std::chrono::steady_clock::now();
  minfill::CampaignSummary summary = minfill::run_campaign(config);
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cout << minfill::summary_to_json(summary).dump(2) << "\n";
  std::cerr << "campaign: " << summary.counts.instances << " instances, " << summary.failures.size()
            << " failures, runtime " << elapsed << " ms\n";
  return summary.ok() ? 0 : kExitFailure;
}

int cmd_enumerate(std::size_t n, bool print) {
  using namespace minfill;
  const std::size_t limit = default_max_n();
  if (n > limit) throw SizeLimitError("n = " + std::to_string(n) + " exceeds the limit " + std::to_string(limit));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  std::size_t count = 0;
  for_each_binary_tree(labels, [&](std::size_t, const TreeTopology& tree) {
    ++count;
    if (print) std::cout << topology_to_json(tree).dump() << "\n";
  });
  std::cout << "count " << count << "\n";
  return 0;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw minfill::ValidationError("bad size '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact minimal fillings of finite pseudometric spaces"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Solve one instance and print the report as JSON");
  std::string instance;
  bool denegativize = false;
  bool per_topology = false;
  unsigned solve_jobs = 1;
  solve->add_option("file", instance, "Instance JSON file")->required();
  solve->add_flag("--denegativize", denegativize, "Also convert the generalized optimum to a non-negative one");
  solve->add_flag("--per-topology", per_topology, "Include parametric values of every type");
  solve->add_option("--jobs", solve_jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* examples = app.add_subcommand("examples", "Reproduce the reference instances");
  bool corrupt = false;
  examples->add_flag("--corrupt", corrupt, "Self-test: perturb one embedded distance");

  auto* campaign = app.add_subcommand("campaign", "Randomized verification campaign");
  std::string sizes = "3,4,5";
  std::string space_class = "metric";
  std::vector<std::string> checks;
  minfill::CampaignConfig config;
  campaign->add_option("--sizes", sizes, "Comma-separated boundary sizes");
  campaign->add_option("--count", config.instances_per_size, "Instances per size");
  campaign->add_option("--seed", config.seed, "Campaign seed");
  campaign->add_option("--class", space_class, "metric | non-degenerate | degenerate | violating");
  campaign->add_option("--checks", checks, "Subset of theorem,tour_bound,lemma5,lemma6,denegativize,positivity")
      ->delimiter(',');
  campaign->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "Count (and optionally print) binary types");
  std::size_t enum_n = 0;
  bool print = false;
  enumerate->add_option("--n", enum_n, "Boundary size")->required()->check(CLI::Range(2, 64));
  enumerate->add_flag("--print", print, "Print every type as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*solve) return cmd_solve(instance, denegativize, per_topology, solve_jobs);
    if (*examples) return cmd_examples(corrupt);
    if (*campaign) {
      config.sizes = parse_sizes(sizes);
      config.request = minfill::parse_space_request(space_class);
      if (!checks.empty()) {
        config.checks.clear();
        for (const auto& c : checks) config.checks.insert(minfill::parse_check(c));
      }
      return cmd_campaign(config);
    }
    if (*enumerate) return cmd_enumerate(enum_n, print);
  } catch (const minfill::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSizeLimit;
  } catch (const minfill::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const minfill::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return 0;
}
