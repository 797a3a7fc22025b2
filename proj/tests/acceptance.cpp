// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "minfill/harness.hpp"
#include "minfill/solver.hpp"
#include "oracles.hpp"

using namespace minfill;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Line {
  int id;
  bool pass;
  std::string detail;
};

std::size_t failures_of(const CampaignSummary& s, const std::string& check) {
  for (const auto& [name, count] : s.failures_by_check) {
    if (name == check) return count;
  }
  return 0;
}

Line criterion1() {
  auto start = Clock::now();
  TreeTopology type = TreeTopology::from_named_edges(
      {"a", "b", "c", "d"}, 2, {{"a", "i0"}, {"b", "i0"}, {"i0", "i1"}, {"c", "i1"}, {"d", "i1"}});
  ParametricResult nonneg = mpf(example_gap_space(), type);
  ParametricResult gen = mpf_gen(example_gap_space(), type);
  double t = seconds_since(start);
  bool ok = nonneg.optimal() && gen.optimal() && nonneg.value() == 8 && gen.value() == 7 && t < 1.0;
  std::ostringstream d;
  d << "mpf = " << to_string(nonneg.value()) << ", mpf_minus = " << to_string(gen.value()) << ", " << t << " s";
  return {1, ok, d.str()};
}

Line criterion2() {
  auto start = Clock::now();
  PseudometricSpace space = example_violating_space();
  SolveReport r = solve_space(space);
  double t = seconds_since(start);
  const WeightedFilling& f = r.mf_minus_filling;
  bool negative_boundary_edge = false;
  for (EdgeId e = 0; e < f.topology().num_edges(); ++e) {
    const Edge& ed = f.topology().edge(e);
    bool boundary = f.topology().vertex(ed.u).is_boundary() || f.topology().vertex(ed.v).is_boundary();
    if (boundary && sgn(f.weight(e)) < 0) negative_boundary_edge = true;
  }
  bool ok = r.mf == 5 && r.mf_minus == 4 && negative_boundary_edge && t < 1.0;
  std::ostringstream d;
  d << "mf = " << to_string(r.mf) << ", mf_minus = " << to_string(r.mf_minus)
    << ", negative boundary edge: " << (negative_boundary_edge ? "yes" : "no") << ", " << t << " s";
  return {2, ok, d.str()};
}

Line criterion3() {
  PseudometricSpace two({"A", "B"}, {{0, 1}, {1, 0}});
  TreeTopology pendant = TreeTopology::from_named_edges({"A", "B"}, 1, {{"A", "B"}, {"A", "i0"}}, true);
  ParametricResult r = mpf_gen(two, pendant);
  // Same on a four-point type with an extra pendant interior vertex.
  TreeTopology bigger = TreeTopology::from_named_edges(
      {"a", "b", "c", "d"}, 3, {{"a", "i0"}, {"b", "i0"}, {"i0", "i1"}, {"c", "i1"}, {"d", "i1"}, {"i1", "i2"}}, true);
  ParametricResult r4 = mpf_gen(example_gap_space(), bigger);
  bool ok = r.outcome.status == LpStatus::Unbounded && r4.outcome.status == LpStatus::Unbounded;
  return {3, ok, std::string("two-point pendant type: ") + (r.outcome.status == LpStatus::Unbounded ? "unbounded" : "bounded") +
                     ", four-point pendant type: " + (r4.outcome.status == LpStatus::Unbounded ? "unbounded" : "bounded")};
}

std::vector<Line> criteria4to6() {
  CampaignConfig config;
  config.sizes = {3, 4, 5, 6};
  config.instances_per_size = 100;
  config.seed = 42;
  config.request = SpaceRequest::Metric;
  config.jobs = 4;
  auto start = Clock::now();
  CampaignSummary s = run_campaign(config);
  double t = seconds_since(start);
  const CampaignCounts& c = s.counts;

  std::vector<Line> out;
  {
    bool ok = c.instances == 400 && c.theorem_equal == 400 && failures_of(s, "theorem") == 0 && t < 60.0;
    std::ostringstream d;
    d << c.theorem_equal << "/" << c.instances << " with mf = mf_minus, seed 42, 4 jobs, " << t << " s";
    out.push_back({4, ok, d.str()});
  }
  {
    std::size_t fails = failures_of(s, "denegativize");
    bool ok = fails == 0 && c.denegativized >= c.instances_with_negative_optimum;
    std::ostringstream d;
    d << c.instances_with_negative_optimum << " instances with a negative generalized optimum, " << c.denegativized
      << " fillings denegativized in " << c.modification_steps << " steps (max " << c.max_steps << "), " << fails
      << " failures";
    out.push_back({5, ok, d.str()});
  }
  {
    std::size_t l5 = failures_of(s, "lemma5");
    std::size_t l6 = failures_of(s, "lemma6");
    std::size_t tb = failures_of(s, "tour_bound");
    std::size_t pos = failures_of(s, "positivity");
    bool ok = l5 + l6 + tb + pos == 0 && c.parametric_optima > 0;
    std::ostringstream d;
    d << c.parametric_optima << " generalized optima; failures: exact paths " << l5 << ", boundary edges " << l6
      << ", tour bound and doubling " << tb << ", positivity " << pos;
    out.push_back({6, ok, d.str()});
  }
  for (const auto& f : s.failures) {
    std::cerr << "campaign failure n=" << f.size << " #" << f.index << " [" << f.check << "] " << f.message << "\n  "
              << f.instance.dump() << "\n";
  }
  return out;
}

Line criterion7() {
  const std::vector<std::uint64_t> expected{1, 3, 15, 105, 945};
  bool ok = true;
  std::ostringstream d;
  for (std::size_t n = 3; n <= 7; ++n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    std::size_t count = 0;
    std::set<std::string> forms;
    std::set<std::set<std::uint32_t>> splits;
    for_each_binary_tree(labels, [&](std::size_t, const TreeTopology& t) {
      ++count;
      forms.insert(canonical_form(t));
      if (n <= 5) {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (const auto& e : t.edges()) edges.emplace_back(e.u, e.v);
        splits.insert(oracle::split_set(edges, t.num_vertices(), n));
      }
    });
    ok = ok && count == expected[n - 3] && forms.size() == count;
    d << (n > 3 ? ", " : "") << count;
    if (n <= 5) {
      auto census = oracle::brute_force_binary_trees(n);
      ok = ok && census.distinct == splits;
      d << " (brute force " << census.distinct.size() << ")";
    }
  }
  return {7, ok, "counts for n = 3..7: " + d.str()};
}

Line criterion8() {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> num(1, 60);
  std::uniform_int_distribution<int> den(1, 6);
  std::size_t matched = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::vector<Rational>> m(3, std::vector<Rational>(3, 0));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        m[i][j] = m[j][i] = r;
      }
    }
    m = shortest_path_closure(m);
    PseudometricSpace s({"x", "y", "z"}, m);
    Rational half = (s(0, 1) + s(1, 2) + s(0, 2)) / 2;
    if (solve_space(s).mf == half) ++matched;
  }
  return {8, matched == 200, std::to_string(matched) + "/200 three-point spaces with mf = half-perimeter"};
}

Line criterion9() {
  std::mt19937_64 rng(9);
  std::size_t matched = 0;
  std::map<LpStatus, std::size_t> by_status;
  for (int trial = 0; trial < 200; ++trial) {
    LinearProgram lp = oracle::random_lp(rng, 4, 8);
    LpOutcome out = solve(lp);
    oracle::BruteResult brute = oracle::brute_force_lp(lp);
    bool same = out.status == brute.status && (out.status != LpStatus::Optimal || out.value == brute.value);
    if (same) ++matched;
    ++by_status[out.status];
  }
  std::ostringstream d;
  d << matched << "/200 random LPs match vertex enumeration (optimal " << by_status[LpStatus::Optimal]
    << ", unbounded " << by_status[LpStatus::Unbounded] << ", infeasible " << by_status[LpStatus::Infeasible] << ")";
  return {9, matched == 200, d.str()};
}

}  // namespace

int main() {
  std::vector<Line> lines{criterion1(), criterion2(), criterion3()};
  for (auto& l : criteria4to6()) lines.push_back(l);
  lines.push_back(criterion7());
  lines.push_back(criterion8());
  lines.push_back(criterion9());
  bool all = true;
  for (const auto& l : lines) {
    std::cout << (l.pass ? "PASS" : "FAIL") << " criterion " << l.id << ": " << l.detail << "\n";
    all = all && l.pass;
  }
  return all ? 0 : 1;
}
