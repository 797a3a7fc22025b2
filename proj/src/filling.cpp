#include "minfill/filling.hpp"

#include <algorithm>
#include <bit>

#include "minfill/error.hpp"

namespace minfill {

WeightedFilling::WeightedFilling(TreeTopology topology, std::vector<Rational> weights)
    : topology_(std::move(topology)), weights_(std::move(weights)) {
  if (weights_.size() != topology_.num_edges()) {
    throw ValidationError("filling has " + std::to_string(weights_.size()) + " weights for " +
                          std::to_string(topology_.num_edges()) + " edges");
  }
}

Rational WeightedFilling::total_weight() const {
  Rational sum = 0;
  for (const auto& w : weights_) sum += w;
  return sum;
}

Rational WeightedFilling::path_weight(const std::vector<EdgeId>& path) const {
  Rational sum = 0;
  for (EdgeId e : path) sum += weights_[e];
  return sum;
}

Rational WeightedFilling::dw(VertexId u, VertexId v) const { return path_weight(path_between(topology_, u, v)); }

Rational WeightedFilling::dw(const std::string& label_u, const std::string& label_v) const {
  auto u = topology_.vertex_of_label(label_u);
  auto v = topology_.vertex_of_label(label_v);
  if (!u || !v) throw ValidationError("dw: unknown label");
  return dw(*u, *v);
}

bool WeightedFilling::has_negative_edge() const {
  return std::any_of(weights_.begin(), weights_.end(), [](const Rational& w) { return sgn(w) < 0; });
}

namespace {

void require_same_labels(const WeightedFilling& f, const PseudometricSpace& space) {
  std::vector<std::string> a = f.topology().boundary_labels();
  std::vector<std::string> b = space.labels();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw ValidationError("filling boundary labels do not match the space labels");
}

bool contains(const std::vector<EdgeId>& path, EdgeId e) { return std::find(path.begin(), path.end(), e) != path.end(); }

}  // namespace

std::vector<Rational> boundary_distances(const WeightedFilling& f, const PairPaths& paths) {
  std::vector<Rational> out;
  out.reserve(paths.paths.size());
  for (const auto& p : paths.paths) out.push_back(f.path_weight(p));
  return out;
}

FillingCheck is_generalized_filling(const WeightedFilling& f, const PseudometricSpace& space) {
  require_same_labels(f, space);
  PairPaths paths = boundary_pair_paths(f.topology(), space.labels());
  for (std::size_t k = 0; k < paths.pairs.size(); ++k) {
    Rational d = f.path_weight(paths.paths[k]);
    const Rational& rho = space(paths.pairs[k].i, paths.pairs[k].j);
    if (d < rho) return FillingCheck{false, paths.pairs[k], d, rho};
  }
  return FillingCheck{};
}

bool is_nonneg_filling(const WeightedFilling& f, const PseudometricSpace& space) {
  return is_generalized_filling(f, space).ok && !f.has_negative_edge();
}

ExactPathReport exact_path_report(const WeightedFilling& f, const PseudometricSpace& space) {
  if (FillingCheck check = is_generalized_filling(f, space); !check) {
    throw ValidationError("exact_path_report: not a generalized filling (pair " + space.label(check.witness->i) +
                          ", " + space.label(check.witness->j) + ")");
  }
  PairPaths paths = boundary_pair_paths(f.topology(), space.labels());
  ExactPathReport report;
  report.coverage.resize(f.topology().num_edges());
  for (std::size_t k = 0; k < paths.pairs.size(); ++k) {
    if (f.path_weight(paths.paths[k]) != space(paths.pairs[k].i, paths.pairs[k].j)) continue;
    const std::size_t idx = report.exact_pairs.size();
    report.exact_pairs.push_back(paths.pairs[k]);
    for (EdgeId e : paths.paths[k]) report.coverage[e].push_back(idx);
  }
  return report;
}

std::size_t exact_pair_count(const WeightedFilling& f, const PseudometricSpace& space) {
  PairPaths paths = boundary_pair_paths(f.topology(), space.labels());
  std::size_t count = 0;
  for (std::size_t k = 0; k < paths.pairs.size(); ++k) {
    if (f.path_weight(paths.paths[k]) == space(paths.pairs[k].i, paths.pairs[k].j)) ++count;
  }
  return count;
}

Lemma5Report check_lemma5(const WeightedFilling& f, const PseudometricSpace& space) {
  const ExactPathReport exact = exact_path_report(f, space);
  const TreeTopology& tree = f.topology();
  PairPaths paths = boundary_pair_paths(tree, space.labels());
  std::vector<std::vector<EdgeId>> exact_paths;
  for (const auto& pair : exact.exact_pairs) {
    for (std::size_t k = 0; k < paths.pairs.size(); ++k) {
      if (paths.pairs[k].i == pair.i && paths.pairs[k].j == pair.j) exact_paths.push_back(paths.paths[k]);
    }
  }
  auto jointly_covered = [&](EdgeId a, EdgeId b) {
    return std::any_of(exact_paths.begin(), exact_paths.end(),
                       [&](const std::vector<EdgeId>& p) { return contains(p, a) && contains(p, b); });
  };

  Lemma5Report report;
  for (EdgeId e = 0; e < tree.num_edges(); ++e) {
    if (exact.coverage[e].empty()) report.uncovered_edges.push_back(e);
  }
  for (VertexId v = 0; v < tree.num_vertices(); ++v) {
    const auto& inc = tree.incident(v);
    const std::size_t d = inc.size();
    std::vector<std::vector<bool>> covered(d, std::vector<bool>(d, false));
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = a + 1; b < d; ++b) {
        covered[a][b] = covered[b][a] = jointly_covered(inc[a], inc[b]);
        if (!covered[a][b]) {
          report.uncovered_adjacent.emplace_back(inc[a], inc[b]);
          if (!tree.vertex(v).is_boundary() && d == 3) report.uncovered_degree3.emplace_back(inc[a], inc[b]);
        }
      }
    }
    if (tree.vertex(v).is_boundary() || d < 2 || d > 20) continue;
    for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
      const std::size_t m = static_cast<std::size_t>(std::popcount(mask));
      if (2 * m <= d) continue;
      bool any = false;
      for (std::size_t a = 0; a < d && !any; ++a) {
        if (!(mask >> a & 1u)) continue;
        for (std::size_t b = a + 1; b < d && !any; ++b) {
          if ((mask >> b & 1u) && covered[a][b]) any = true;
        }
      }
      if (!any) {
        std::vector<EdgeId> subset;
        for (std::size_t a = 0; a < d; ++a) {
          if (mask >> a & 1u) subset.push_back(inc[a]);
        }
        report.uncovered_majority.emplace_back(v, std::move(subset));
      }
    }
  }
  return report;
}

Rational tour_lower_bound(const PseudometricSpace& space, const CyclicOrder& order) {
  std::vector<std::string> a = order.order;
  std::vector<std::string> b = space.labels();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw ValidationError("cyclic order does not cover the space labels");
  Rational sum = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    sum += space(*space.index_of(order.at(k)), *space.index_of(order.at(k + 1)));
  }
  return sum / 2;
}

WeightedFilling transfer_weights(const WeightedFilling& f, const SplitResult& split) {
  std::vector<Rational> weights(split.tree.num_edges(), 0);
  for (EdgeId e = 0; e < f.topology().num_edges(); ++e) weights[split.edge_map[e]] += f.weight(e);
  return WeightedFilling(split.tree, std::move(weights));
}

Json filling_to_json(const WeightedFilling& f) {
  Json doc = topology_to_json(f.topology());
  Json weights = Json::object();
  for (EdgeId e = 0; e < f.topology().num_edges(); ++e) weights[f.topology().edge_key(e)] = rational_to_json(f.weight(e));
  doc["weights"] = std::move(weights);
  return doc;
}

WeightedFilling filling_from_json(const Json& doc, const std::vector<std::string>& labels) {
  TreeTopology tree = topology_from_json(doc, labels);
  if (!doc.contains("weights") || !doc["weights"].is_object()) throw ParseError("filling: missing object 'weights'");
  const Json& w = doc["weights"];
  if (w.size() != tree.num_edges()) throw ParseError("filling: weight count does not match edge count");
  std::vector<Rational> weights;
  for (EdgeId e = 0; e < tree.num_edges(); ++e) {
    const std::string key = tree.edge_key(e);
    if (!w.contains(key)) throw ParseError("filling: no weight for edge '" + key + "'");
    weights.push_back(rational_from_json(w[key], "weight of " + key));
  }
  return WeightedFilling(std::move(tree), std::move(weights));
}

}  // namespace minfill
