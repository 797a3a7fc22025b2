#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "minfill/filling.hpp"
#include "minfill/lp.hpp"
#include "minfill/metric_space.hpp"
#include "minfill/topology.hpp"

namespace minfill {

enum class Variant { NonNegative, Generalized };

std::string_view to_string(Variant variant);

/// One variable per edge; for each label pair (u, v) the constraint
/// sum_{e on path(u,v)} x_e >= rho(u, v); objective sum x_e. NonNegative
/// restricts every variable to x_e >= 0. Throws ValidationError when the
/// tree does not join the space's labels or has an interior leaf.
LinearProgram build_lp(const PseudometricSpace& space, const TreeTopology& tree, Variant variant);

struct ParametricResult {
  TreeTopology topology;
  Variant variant;
  LpOutcome outcome;
  std::optional<WeightedFilling> filling;  // set iff Optimal

  bool optimal() const { return outcome.status == LpStatus::Optimal; }
  const Rational& value() const { return outcome.value; }
};

/// Minimal parametric filling of the given type (non-negative weights).
ParametricResult mpf(const PseudometricSpace& space, const TreeTopology& tree);
/// Generalized (signed) variant. A type with a pendant interior vertex is
/// reported Unbounded without solving.
ParametricResult mpf_gen(const PseudometricSpace& space, const TreeTopology& tree);

struct SolverOptions {
  /// Largest accepted boundary size. Defaults to MINFILL_MAX_N or 9.
  std::size_t max_n = 0;
  /// Worker threads for the per-topology solves.
  unsigned jobs = 1;
  /// Keep every topology's parametric values in the report.
  bool keep_per_topology = false;
  /// Called for every topology with both parametric results. May be invoked
  /// from several worker threads at once when jobs > 1.
  std::function<void(std::size_t index, const ParametricResult& nonneg, const ParametricResult& gen)> visit;
};

/// Limit from the MINFILL_MAX_N environment variable, or 9.
std::size_t default_max_n();

struct TopologyRow {
  std::size_t index;
  Rational mpf;
  Rational mpf_gen;
};

struct SolveReport {
  PseudometricSpace space;
  std::size_t topology_count = 0;
  Rational mf;
  Rational mf_minus;
  /// Enumeration indices of the minimizing types (lowest index wins ties).
  std::size_t mf_index = 0;
  std::size_t mf_minus_index = 0;
  WeightedFilling mf_filling;
  WeightedFilling mf_minus_filling;
  bool theorem_holds = false;
  std::vector<TopologyRow> per_topology;
};

/// mf and mf_minus over all binary types (enumeration order), plus optimal
/// fillings for both. n = 1 gives the empty filling of weight 0. Throws
/// SizeLimitError above options.max_n.
SolveReport solve_space(const PseudometricSpace& space, const SolverOptions& options = {});

/// Checks mf == mf_minus. Throws OutOfHypothesisError when the space
/// violates the triangle inequality.
bool verify_theorem(const PseudometricSpace& space, const SolverOptions& options = {});

Json report_to_json(const SolveReport& report, bool per_topology);

}  // namespace minfill
