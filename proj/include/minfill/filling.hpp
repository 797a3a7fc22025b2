#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "minfill/json_io.hpp"
#include "minfill/metric_space.hpp"
#include "minfill/rational.hpp"
#include "minfill/topology.hpp"

namespace minfill {

/// A tree type plus one signed rational weight per edge (indexed by EdgeId).
class WeightedFilling {
 public:
  WeightedFilling(TreeTopology topology, std::vector<Rational> weights);

  const TreeTopology& topology() const { return topology_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(EdgeId e) const { return weights_[e]; }

  Rational total_weight() const;
  /// Sum of weights along the unique path; zero when u == v.
  Rational dw(VertexId u, VertexId v) const;
  Rational dw(const std::string& label_u, const std::string& label_v) const;
  Rational path_weight(const std::vector<EdgeId>& path) const;

  bool has_negative_edge() const;

 private:
  TreeTopology topology_;
  std::vector<Rational> weights_;
};

inline Rational total_weight(const WeightedFilling& f) { return f.total_weight(); }

/// Outcome of a filling check. `witness` is the first failing pair, by label
/// indices in lexicographic order.
struct FillingCheck {
  bool ok = true;
  std::optional<LabelPair> witness;
  Rational distance;  // dw on the witness pair
  Rational required;  // rho on the witness pair

  explicit operator bool() const { return ok; }
};

/// rho(u, v) <= dw(u, v) for every boundary pair. Throws ValidationError when
/// the topology's labels differ from the space's.
FillingCheck is_generalized_filling(const WeightedFilling& f, const PseudometricSpace& space);
/// is_generalized_filling and every weight >= 0.
bool is_nonneg_filling(const WeightedFilling& f, const PseudometricSpace& space);

/// dw along each of `paths`.
std::vector<Rational> boundary_distances(const WeightedFilling& f, const PairPaths& paths);

struct ExactPathReport {
  std::vector<LabelPair> exact_pairs;
  /// coverage[e] lists indices into exact_pairs whose path contains edge e.
  std::vector<std::vector<std::size_t>> coverage;
};

ExactPathReport exact_path_report(const WeightedFilling& f, const PseudometricSpace& space);

/// Number of boundary pairs whose distance equals rho exactly.
std::size_t exact_pair_count(const WeightedFilling& f, const PseudometricSpace& space);

/// Conclusions of the exact-path lemma for a minimal parametric filling.
struct Lemma5Report {
  /// (1) Edges on no exact path.
  std::vector<EdgeId> uncovered_edges;
  /// (2) Adjacent edge pairs not jointly on an exact path.
  std::vector<std::pair<EdgeId, EdgeId>> uncovered_adjacent;
  /// (3) Edge pairs at interior degree-3 vertices not jointly on an exact path.
  std::vector<std::pair<EdgeId, EdgeId>> uncovered_degree3;
  /// (4) For interior vertex v: incident-edge subsets (as edge lists) of size
  /// m > deg(v)/2 none of whose pairs lie on a common exact path.
  std::vector<std::pair<VertexId, std::vector<EdgeId>>> uncovered_majority;

  bool part1() const { return uncovered_edges.empty(); }
  bool part2() const { return uncovered_adjacent.empty(); }
  bool part3() const { return uncovered_degree3.empty(); }
  bool part4() const { return uncovered_majority.empty(); }
  bool passed() const { return part1() && part2() && part3() && part4(); }
};

/// Throws ValidationError if f is not a generalized filling of space.
Lemma5Report check_lemma5(const WeightedFilling& f, const PseudometricSpace& space);

/// Half the sum of rho over consecutive pairs of the cyclic order.
Rational tour_lower_bound(const PseudometricSpace& space, const CyclicOrder& order);

/// Transfers weights to split.tree: mapped edges sum, added edges are zero.
WeightedFilling transfer_weights(const WeightedFilling& f, const SplitResult& split);

/// Topology block plus {"weights": {"a-i0": "3/2", ...}}.
Json filling_to_json(const WeightedFilling& f);
WeightedFilling filling_from_json(const Json& doc, const std::vector<std::string>& labels);

}  // namespace minfill
