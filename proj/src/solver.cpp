#include "minfill/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "minfill/error.hpp"

namespace minfill {

std::string_view to_string(Variant variant) {
  return variant == Variant::NonNegative ? "non-negative" : "generalized";
}

namespace {

void require_joins(const PseudometricSpace& space, const TreeTopology& tree) {
  std::vector<std::string> a = tree.boundary_labels();
  std::vector<std::string> b = space.labels();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw ValidationError("topology does not join the space's boundary set");
}

ParametricResult solve_parametric(const PseudometricSpace& space, const TreeTopology& tree, Variant variant) {
  LinearProgram lp = build_lp(space, tree, variant);
  LpOutcome outcome = solve(lp);
  std::optional<WeightedFilling> filling;
  if (outcome.status == LpStatus::Optimal) filling.emplace(tree, outcome.point);
  return ParametricResult{tree, variant, std::move(outcome), std::move(filling)};
}

struct Best {
  std::optional<std::size_t> index;
  Rational value;
  std::optional<WeightedFilling> filling;

  void offer(std::size_t i, const ParametricResult& r) {
    if (!r.optimal()) return;
    if (!index || r.value() < value || (r.value() == value && i < *index)) {
      index = i;
      value = r.value();
      filling = r.filling;
    }
  }
  void merge(const Best& other) {
    if (!other.index) return;
    if (!index || other.value < value || (other.value == value && *other.index < *index)) *this = other;
  }
};

}  // namespace

LinearProgram build_lp(const PseudometricSpace& space, const TreeTopology& tree, Variant variant) {
  require_joins(space, tree);
  if (auto leaf = has_interior_leaf(tree)) {
    throw ValidationError("interior vertex " + tree.vertex_name(*leaf) + " has degree 1");
  }
  const std::size_t edges = tree.num_edges();
  LinearProgram lp;
  lp.num_vars = edges;
  lp.objective.assign(edges, 1);
  lp.nonneg.assign(edges, variant == Variant::NonNegative);
  PairPaths paths = boundary_pair_paths(tree, space.labels());
  for (std::size_t k = 0; k < paths.pairs.size(); ++k) {
    Constraint con{std::vector<Rational>(edges, 0), space(paths.pairs[k].i, paths.pairs[k].j)};
    for (EdgeId e : paths.paths[k]) con.coeffs[e] = 1;
    lp.constraints.push_back(std::move(con));
  }
  return lp;
}

ParametricResult mpf(const PseudometricSpace& space, const TreeTopology& tree) {
  return solve_parametric(space, tree, Variant::NonNegative);
}

ParametricResult mpf_gen(const PseudometricSpace& space, const TreeTopology& tree) {
  if (auto leaf = has_interior_leaf(tree)) {
    require_joins(space, tree);
    // The pendant edge lies on no boundary path, so lowering it is free.
    LpOutcome outcome;
    outcome.status = LpStatus::Unbounded;
    outcome.ray.assign(tree.num_edges(), 0);
    outcome.ray[tree.incident(*leaf).front()] = -1;
    return ParametricResult{tree, Variant::Generalized, std::move(outcome), std::nullopt};
  }
  return solve_parametric(space, tree, Variant::Generalized);
}

std::size_t default_max_n() {
  if (const char* env = std::getenv("MINFILL_MAX_N")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 9;
}

SolveReport solve_space(const PseudometricSpace& space, const SolverOptions& options) {
  const std::size_t n = space.size();
  const std::size_t limit = options.max_n ? options.max_n : default_max_n();
  if (n > limit) {
    throw SizeLimitError("boundary size " + std::to_string(n) + " exceeds the limit " + std::to_string(limit));
  }
  if (n == 0) throw ValidationError("space has no points");
  if (n == 1) {
    TreeTopology single = TreeTopology::create({Vertex{{space.label(0)}, 0}}, {});
    WeightedFilling empty(single, {});
    return SolveReport{space, 1, 0, 0, 0, 0, empty, empty, true, {}};
  }

  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<Best> best_nonneg(jobs);
  std::vector<Best> best_gen(jobs);
  std::vector<std::vector<TopologyRow>> rows(jobs);
  std::vector<std::size_t> counts(jobs, 0);
  std::vector<std::exception_ptr> errors(jobs);

  auto worker = [&](unsigned id) {
    try {
      for_each_binary_tree(space.labels(), [&](std::size_t index, const TreeTopology& tree) {
        if (id == 0) ++counts[0];
        if (index % jobs != id) return;
        ParametricResult nonneg = mpf(space, tree);
        ParametricResult gen = mpf_gen(space, tree);
        if (!nonneg.optimal() || !gen.optimal()) {
          throw Error("parametric problem not optimal on type " + std::to_string(index));
        }
        best_nonneg[id].offer(index, nonneg);
        best_gen[id].offer(index, gen);
        if (options.keep_per_topology) rows[id].push_back(TopologyRow{index, nonneg.value(), gen.value()});
        if (options.visit) options.visit(index, nonneg, gen);
      });
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (unsigned id = 1; id < jobs; ++id) {
    best_nonneg[0].merge(best_nonneg[id]);
    best_gen[0].merge(best_gen[id]);
  }
  std::vector<TopologyRow> all_rows;
  for (auto& r : rows) all_rows.insert(all_rows.end(), r.begin(), r.end());
  std::sort(all_rows.begin(), all_rows.end(), [](const TopologyRow& a, const TopologyRow& b) { return a.index < b.index; });

  const Best& nn = best_nonneg[0];
  const Best& gn = best_gen[0];
  return SolveReport{space,         counts[0],        nn.value,        gn.value,
                     *nn.index,     *gn.index,        *nn.filling,     *gn.filling,
                     nn.value == gn.value, std::move(all_rows)};
}

bool verify_theorem(const PseudometricSpace& space, const SolverOptions& options) {
  SpaceClass cls = classify(space);
  if (cls.kind == SpaceKind::TriangleViolating) {
    throw OutOfHypothesisError("out of hypothesis: triangle inequality fails at (" + cls.witness[0] + ", " +
                               cls.witness[1] + ", " + cls.witness[2] + ")");
  }
  return solve_space(space, options).theorem_holds;
}

Json report_to_json(const SolveReport& report, bool per_topology) {
  Json doc{{"labels", report.space.labels()},
           {"n", report.space.size()},
           {"class", std::string(to_string(classify(report.space).kind))},
           {"topology_count", report.topology_count},
           {"mf", rational_to_json(report.mf)},
           {"mf_minus", rational_to_json(report.mf_minus)},
           {"theorem_holds", report.theorem_holds},
           {"mf_topology_index", report.mf_index},
           {"mf_minus_topology_index", report.mf_minus_index},
           {"mf_filling", filling_to_json(report.mf_filling)},
           {"mf_minus_filling", filling_to_json(report.mf_minus_filling)}};
  if (per_topology) {
    Json rows = Json::array();
    for (const auto& row : report.per_topology) {
      rows.push_back(Json{{"index", row.index}, {"mpf", rational_to_json(row.mpf)},
                          {"mpf_minus", rational_to_json(row.mpf_gen)}});
    }
    doc["per_topology"] = std::move(rows);
  }
  return doc;
}

}  // namespace minfill
