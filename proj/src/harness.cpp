#include "minfill/harness.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "minfill/denegativize.hpp"
#include "minfill/error.hpp"
#include "minfill/filling.hpp"
#include "minfill/solver.hpp"

namespace minfill {

PseudometricSpace example_gap_space() {
  return PseudometricSpace({"a", "b", "c", "d"}, {{0, 4, 3, 3}, {4, 0, 3, 3}, {3, 3, 0, 4}, {3, 3, 4, 0}});
}

PseudometricSpace example_violating_space() {
  return PseudometricSpace({"x", "y", "z"}, {{0, 1, 5}, {1, 0, 2}, {5, 2, 0}});
}

namespace {

std::string str(const Rational& r) { return to_string(r); }

ExampleLine expect_pair(std::string name, const std::string& what, const Rational& got1, const Rational& got2,
                        const Rational& want1, const Rational& want2) {
  ExampleLine line{std::move(name), got1 == want1 && got2 == want2, ""};
  line.detail = what + " = (" + str(got1) + ", " + str(got2) + "), expected (" + str(want1) + ", " + str(want2) + ")";
  return line;
}

}  // namespace

std::vector<ExampleLine> run_paper_examples(bool corrupt) {
  std::vector<ExampleLine> lines;
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      lines.push_back(body());
    } catch (const std::exception& e) {
      lines.push_back(ExampleLine{name, false, std::string("error: ") + e.what()});
    }
  };

  PseudometricSpace gap = example_gap_space();
  if (corrupt) {
    auto m = gap.matrix();
    m[0][1] = m[1][0] = 5;
    gap = PseudometricSpace(gap.labels(), m);
  }
  const TreeTopology gap_type =
      TreeTopology::from_named_edges(gap.labels(), 2, {{"a", "i0"}, {"b", "i0"}, {"i0", "i1"}, {"c", "i1"}, {"d", "i1"}});

  guarded("parametric-gap", [&] {
    ParametricResult nonneg = mpf(gap, gap_type);
    ParametricResult gen = mpf_gen(gap, gap_type);
    return expect_pair("parametric-gap", "(mpf, mpf_minus)", nonneg.value(), gen.value(), 8, 7);
  });
  guarded("gap-space-global", [&] {
    SolveReport r = solve_space(gap);
    return expect_pair("gap-space-global", "(mf, mf_minus)", r.mf, r.mf_minus, 7, 7);
  });
  guarded("triangle-violation", [&] {
    SolveReport r = solve_space(example_violating_space());
    return expect_pair("triangle-violation", "(mf, mf_minus)", r.mf, r.mf_minus, 5, 4);
  });
  guarded("pendant-interior-unbounded", [&] {
    PseudometricSpace two({"A", "B"}, {{0, 1}, {1, 0}});
    TreeTopology pendant =
        TreeTopology::from_named_edges(two.labels(), 2, {{"A", "i0"}, {"i0", "B"}, {"i0", "i1"}}, true);
    ParametricResult gen = mpf_gen(two, pendant);
    const bool unbounded = gen.outcome.status == LpStatus::Unbounded;
    return ExampleLine{"pendant-interior-unbounded", unbounded,
                       std::string("generalized problem is ") + (unbounded ? "unbounded" : "bounded") +
                           ", expected unbounded"};
  });
  return lines;
}

std::string check_name(Check check) {
  switch (check) {
    case Check::Theorem:
      return "theorem";
    case Check::TourBound:
      return "tour_bound";
    case Check::Lemma5:
      return "lemma5";
    case Check::Lemma6:
      return "lemma6";
    case Check::Denegativize:
      return "denegativize";
    case Check::Positivity:
      return "positivity";
  }
  return "unknown";
}

Check parse_check(const std::string& name) {
  for (Check c : all_checks()) {
    if (check_name(c) == name) return c;
  }
  throw ValidationError("unknown check '" + name + "'");
}

std::set<Check> all_checks() {
  return {Check::Theorem, Check::TourBound, Check::Lemma5, Check::Lemma6, Check::Denegativize, Check::Positivity};
}

void validate(const CampaignConfig& config) {
  const std::size_t limit = config.max_n ? config.max_n : default_max_n();
  if (config.sizes.empty()) throw ValidationError("campaign needs at least one size");
  for (std::size_t n : config.sizes) {
    if (n < 2) throw ValidationError("campaign size " + std::to_string(n) + " is below 2");
    if (n > limit) throw ValidationError("campaign size " + std::to_string(n) + " exceeds the limit " + std::to_string(limit));
  }
  if (config.instances_per_size < 1) throw ValidationError("instances per size must be at least 1");
}

std::uint64_t instance_seed(std::uint64_t campaign_seed, std::size_t size, std::size_t index) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(campaign_seed) ^ size) ^ index);
}

void check_instance(const PseudometricSpace& space, const std::set<Check>& checks, CampaignCounts& counts,
                    std::vector<std::pair<std::string, std::string>>& failures, std::size_t max_n) {
  auto fail = [&](Check c, const std::string& message) { failures.emplace_back(check_name(c), message); };
  auto wants = [&](Check c) { return checks.count(c) > 0; };

  const SpaceClass cls = classify(space);
  const bool in_hypothesis = cls.kind != SpaceKind::TriangleViolating;
  const bool non_degenerate = cls.kind == SpaceKind::NonDegenerateMetric;
  ++counts.instances;
  ++(in_hypothesis ? counts.in_hypothesis : counts.out_of_hypothesis);
  if (non_degenerate) ++counts.non_degenerate;

  // Generalized optima with a negative edge, kept until mf_minus is known.
  std::vector<std::pair<std::size_t, WeightedFilling>> negative_optima;
  // Tour bound of each type's DFS planar order, by enumeration index.
  std::map<std::size_t, Rational> tour_bounds;

  SolverOptions options;
  options.max_n = max_n;
  options.visit = [&](std::size_t index, const ParametricResult& nonneg, const ParametricResult& gen) {
    const std::string where = "type " + std::to_string(index);
    const WeightedFilling& fn = *nonneg.filling;
    const WeightedFilling& fg = *gen.filling;
    const TreeTopology& tree = fg.topology();
    ++counts.parametric_optima;
    if (gen.value() < nonneg.value()) ++counts.parametric_gaps;

    if (wants(Check::Theorem)) {
      if (gen.value() > nonneg.value()) fail(Check::Theorem, where + ": mpf_minus exceeds mpf");
      if (!is_nonneg_filling(fn, space)) fail(Check::Theorem, where + ": non-negative optimum is not a filling");
      if (!is_generalized_filling(fg, space)) fail(Check::Theorem, where + ": generalized optimum is not a filling");
    }

    if (wants(Check::Lemma5)) {
      Lemma5Report l5 = check_lemma5(fg, space);
      if (!l5.part1()) fail(Check::Lemma5, where + ": edge " + tree.edge_key(l5.uncovered_edges[0]) + " on no exact path");
      if (!l5.part3()) fail(Check::Lemma5, where + ": degree-3 edge pair not on a common exact path");
      if (!l5.part4()) fail(Check::Lemma5, where + ": majority subset without an exact pair");
    }
    if (wants(Check::Lemma6) && in_hypothesis) {
      for (EdgeId e = 0; e < tree.num_edges(); ++e) {
        const Edge& ed = tree.edge(e);
        if (!tree.vertex(ed.u).is_boundary() && !tree.vertex(ed.v).is_boundary()) continue;
        const int s = sgn(fg.weight(e));
        if (s < 0) fail(Check::Lemma6, where + ": boundary edge " + tree.edge_key(e) + " is negative");
        if (non_degenerate && s == 0) {
          fail(Check::Lemma6, where + ": boundary edge " + tree.edge_key(e) + " is zero on a non-degenerate metric");
        }
      }
    }
    if (wants(Check::TourBound)) {
      CyclicOrder order = planar_order(tree);
      if (!is_planar(tree, order)) fail(Check::TourBound, where + ": DFS order is not planar");
      Rational doubled = 0;
      for (const auto& path : tour_paths(tree, order)) doubled += fg.path_weight(path);
      if (doubled != 2 * fg.total_weight()) fail(Check::TourBound, where + ": doubling identity fails");
      const Rational bound = tour_lower_bound(space, order);
      if (fg.total_weight() < bound) fail(Check::TourBound, where + ": weight below the tour bound");
      tour_bounds[index] = bound;
    }
    if (fg.has_negative_edge()) negative_optima.emplace_back(index, fg);
  };

  SolveReport report = solve_space(space, options);

  if (wants(Check::Theorem)) {
    if (report.mf_minus > report.mf) fail(Check::Theorem, "mf_minus exceeds mf");
    if (in_hypothesis) {
      if (report.theorem_holds) {
        ++counts.theorem_equal;
      } else {
        fail(Check::Theorem, "mf = " + to_string(report.mf) + " but mf_minus = " + to_string(report.mf_minus));
      }
    } else if (report.mf_minus < report.mf) {
      ++counts.strict_gaps;
    }
  }
  // A tour bound only constrains fillings of its own type, so mf_minus is
  // compared against the bound of the minimizing type.
  const Rational optimal_type_bound =
      tour_bounds.count(report.mf_minus_index) ? tour_bounds[report.mf_minus_index] : Rational(0);
  if (wants(Check::TourBound) && report.mf_minus < optimal_type_bound) {
    fail(Check::TourBound, "mf_minus below the tour bound of its own type");
  }
  if (wants(Check::Positivity)) {
    bool some_positive = false;
    for (std::size_t i = 0; i < space.size(); ++i) {
      for (std::size_t j = 0; j < space.size(); ++j) some_positive = some_positive || sgn(space(i, j)) > 0;
    }
    const bool positive = sgn(report.mf_minus) > 0;
    if (optimal_type_bound > 0 && !positive) fail(Check::Positivity, "mf_minus not positive despite a positive tour bound");
    if (in_hypothesis && some_positive && !positive) fail(Check::Positivity, "mf_minus not positive on a nonzero pseudometric");
    if (in_hypothesis && !some_positive && sgn(report.mf_minus) != 0) fail(Check::Positivity, "mf_minus nonzero on the zero space");
  }
  if (wants(Check::Lemma5) && in_hypothesis) {
    // Adjacent-pair coverage holds for globally minimal fillings.
    if (!check_lemma5(report.mf_minus_filling, space).part2()) {
      fail(Check::Lemma5, "global optimum has adjacent edges on no common exact path");
    }
  }

  bool any_negative = false;
  for (const auto& [index, filling] : negative_optima) {
    if (filling.total_weight() != report.mf_minus) continue;
    any_negative = true;
    ++counts.negative_global_optima;
    if (!wants(Check::Denegativize) || !in_hypothesis) continue;
    const std::string where = "type " + std::to_string(index);
    try {
      const std::size_t exact_initial = exact_pair_count(filling, space);
      DenegativizeResult out = remove_negative_edges(filling, space);
      ++counts.denegativized;
      counts.modification_steps += out.steps.size();
      counts.max_steps = std::max(counts.max_steps, out.steps.size());
      if (out.filling.total_weight() != filling.total_weight()) fail(Check::Denegativize, where + ": weight changed");
      if (!is_nonneg_filling(out.filling, space)) fail(Check::Denegativize, where + ": result is not a non-negative filling");
      if (out.steps.size() > exact_initial) fail(Check::Denegativize, where + ": more steps than exact pairs");
      std::size_t previous = exact_initial + 1;
      for (const auto& step : out.steps) {
        if (step.exact_before >= previous || step.exact_after >= step.exact_before) {
          fail(Check::Denegativize, where + ": exact pair counts not strictly decreasing");
        }
        previous = step.exact_after + 1;
      }
    } catch (const Error& e) {
      fail(Check::Denegativize, where + ": " + e.what());
    }
  }
  if (any_negative) ++counts.instances_with_negative_optimum;
}

namespace {

void add(CampaignCounts& into, const CampaignCounts& c) {
  into.instances += c.instances;
  into.in_hypothesis += c.in_hypothesis;
  into.out_of_hypothesis += c.out_of_hypothesis;
  into.non_degenerate += c.non_degenerate;
  into.theorem_equal += c.theorem_equal;
  into.strict_gaps += c.strict_gaps;
  into.parametric_optima += c.parametric_optima;
  into.parametric_gaps += c.parametric_gaps;
  into.negative_global_optima += c.negative_global_optima;
  into.instances_with_negative_optimum += c.instances_with_negative_optimum;
  into.denegativized += c.denegativized;
  into.modification_steps += c.modification_steps;
  into.max_steps = std::max(into.max_steps, c.max_steps);
}

}  // namespace

CampaignSummary run_campaign(const CampaignConfig& config) {
  validate(config);
  struct Slot {
    std::size_t size;
    std::size_t index;
    CampaignCounts counts;
    std::vector<std::pair<std::string, std::string>> failures;
    Json instance;
  };
  std::vector<Slot> slots;
  for (std::size_t n : config.sizes) {
    for (std::size_t i = 0; i < config.instances_per_size; ++i) slots.push_back(Slot{n, i, {}, {}, {}});
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < slots.size(); k = next++) {
      Slot& s = slots[k];
      try {
        PseudometricSpace space = random_space(s.size, instance_seed(config.seed, s.size, s.index), config.request);
        s.instance = space_to_json(space);
        check_instance(space, config.checks, s.counts, s.failures, config.max_n);
      } catch (const std::exception& e) {
        s.failures.emplace_back("error", e.what());
      }
    }
  };
  const unsigned jobs = std::max(1u, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  CampaignSummary summary{config, {}, {}, {}};
  std::map<std::string, std::size_t> tally;
  for (const Slot& s : slots) {
    add(summary.counts, s.counts);
    for (const auto& [check, message] : s.failures) {
      ++tally[check];
      summary.failures.push_back(CampaignFailure{s.size, s.index, check, message, s.instance});
    }
  }
  summary.failures_by_check.assign(tally.begin(), tally.end());
  return summary;
}

Json summary_to_json(const CampaignSummary& summary) {
  const CampaignConfig& cfg = summary.config;
  Json checks = Json::array();
  for (Check c : cfg.checks) checks.push_back(check_name(c));
  const CampaignCounts& c = summary.counts;
  Json failures = Json::array();
  for (const auto& f : summary.failures) {
    failures.push_back(Json{{"size", f.size}, {"index", f.index}, {"check", f.check}, {"message", f.message},
                            {"instance", f.instance}});
  }
  Json by_check = Json::object();
  for (const auto& [name, count] : summary.failures_by_check) by_check[name] = count;
  return Json{{"config", Json{{"sizes", cfg.sizes},
                              {"count", cfg.instances_per_size},
                              {"seed", cfg.seed},
                              {"class", std::string(to_string(cfg.request))},
                              {"checks", checks}}},
              {"instances", c.instances},
              {"in_hypothesis", c.in_hypothesis},
              {"out_of_hypothesis", c.out_of_hypothesis},
              {"non_degenerate", c.non_degenerate},
              {"theorem_equal", c.theorem_equal},
              {"strict_gaps_out_of_hypothesis", c.strict_gaps},
              {"parametric_optima", c.parametric_optima},
              {"parametric_gaps", c.parametric_gaps},
              {"negative_global_optima", c.negative_global_optima},
              {"instances_with_negative_optimum", c.instances_with_negative_optimum},
              {"denegativized", c.denegativized},
              {"modification_steps", c.modification_steps},
              {"max_steps", c.max_steps},
              {"failure_count", summary.failures.size()},
              {"failures_by_check", by_check},
              {"failures", failures}};
}

}  // namespace minfill
