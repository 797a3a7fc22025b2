#include "minfill/denegativize.hpp"

#include <algorithm>

#include "minfill/error.hpp"

namespace minfill {
namespace {

bool on_path(const std::vector<EdgeId>& path, EdgeId e) { return std::find(path.begin(), path.end(), e) != path.end(); }

// Neighbor of v along `path` other than `skip`.
VertexId path_neighbor(const TreeTopology& tree, const std::vector<EdgeId>& path, VertexId v, EdgeId skip) {
  for (EdgeId e : path) {
    if (e != skip && tree.edge(e).touches(v)) return tree.edge(e).other(v);
  }
  throw ValidationError("exact path does not continue past " + tree.vertex_name(v));
}

}  // namespace

std::pair<WeightedFilling, ModificationStep> modify(const WeightedFilling& f, const PseudometricSpace& space,
                                                    EdgeId xy, std::size_t gamma_i, std::size_t gamma_j) {
  const TreeTopology& tree = f.topology();
  if (!tree.is_binary()) throw ValidationError("modify: topology is not binary");
  if (xy >= tree.num_edges()) throw ValidationError("modify: unknown edge");
  if (sgn(f.weight(xy)) >= 0) throw ValidationError("modify: edge " + tree.edge_key(xy) + " is not negative");
  const VertexId X = tree.edge(xy).u;
  const VertexId Y = tree.edge(xy).v;
  if (tree.vertex(X).is_boundary() || tree.vertex(Y).is_boundary()) {
    throw ValidationError("modify: edge " + tree.edge_key(xy) + " touches a boundary vertex");
  }
  if (gamma_i == gamma_j || gamma_i >= space.size() || gamma_j >= space.size()) {
    throw ValidationError("modify: invalid boundary pair");
  }
  const VertexId from = *tree.vertex_of_label(space.label(gamma_i));
  const VertexId to = *tree.vertex_of_label(space.label(gamma_j));
  const std::vector<EdgeId> gamma = path_between(tree, from, to);
  if (f.path_weight(gamma) != space(gamma_i, gamma_j)) throw ValidationError("modify: path is not exact");
  if (!on_path(gamma, xy)) throw ValidationError("modify: exact path does not contain " + tree.edge_key(xy));

  const VertexId A = path_neighbor(tree, gamma, X, xy);
  const VertexId C = path_neighbor(tree, gamma, Y, xy);
  VertexId B = X;
  VertexId D = Y;
  for (EdgeId e : tree.incident(X)) {
    if (VertexId w = tree.edge(e).other(X); w != Y && w != A) B = w;
  }
  for (EdgeId e : tree.incident(Y)) {
    if (VertexId w = tree.edge(e).other(Y); w != X && w != C) D = w;
  }
  const EdgeId xa = *tree.find_edge(X, A);
  const EdgeId xb = *tree.find_edge(X, B);
  const EdgeId yc = *tree.find_edge(Y, C);
  const EdgeId yd = *tree.find_edge(Y, D);

  ModificationStep step;
  step.x = tree.vertex_name(X);
  step.y = tree.vertex_name(Y);
  step.a = tree.vertex_name(A);
  step.b = tree.vertex_name(B);
  step.c = tree.vertex_name(C);
  step.d = tree.vertex_name(D);
  step.e = -f.weight(xy) / 2;
  step.gamma_from = space.label(gamma_i);
  step.gamma_to = space.label(gamma_j);
  step.before_a = f.weight(xa);
  step.before_b = f.weight(xb);
  step.before_c = f.weight(yc);
  step.before_d = f.weight(yd);
  step.before_xy = f.weight(xy);

  std::vector<Edge> edges = tree.edges();
  edges[xb] = Edge{Y, B};
  edges[yd] = Edge{X, D};
  std::vector<Rational> weights = f.weights();
  weights[xy] = 2 * step.e;
  weights[xa] -= step.e;
  weights[xb] -= step.e;
  weights[yc] -= step.e;
  weights[yd] -= step.e;
  WeightedFilling g(TreeTopology::create(tree.vertices(), std::move(edges)), std::move(weights));

  step.after_a = g.weight(xa);
  step.after_b = g.weight(xb);
  step.after_c = g.weight(yc);
  step.after_d = g.weight(yd);
  step.after_xy = g.weight(xy);

  // Postconditions.
  if (g.total_weight() != f.total_weight()) throw DenegativizeError("modify changed the total weight");
  const PairPaths before = boundary_pair_paths(tree, space.labels());
  const PairPaths after = boundary_pair_paths(g.topology(), space.labels());
  for (std::size_t k = 0; k < before.pairs.size(); ++k) {
    const Rational old_d = f.path_weight(before.paths[k]);
    const Rational new_d = g.path_weight(after.paths[k]);
    const Rational& rho = space(before.pairs[k].i, before.pairs[k].j);
    const std::string pair = space.label(before.pairs[k].i) + "-" + space.label(before.pairs[k].j);
    if (new_d < old_d) throw DenegativizeError("modify shortened the path " + pair);
    if (old_d != rho && new_d == rho) throw DenegativizeError("modify created the exact pair " + pair);
    if (before.pairs[k].i == std::min(gamma_i, gamma_j) && before.pairs[k].j == std::max(gamma_i, gamma_j) &&
        new_d == rho) {
      throw DenegativizeError("modify left the chosen pair " + pair + " exact");
    }
  }
  step.exact_before = exact_pair_count(f, space);
  step.exact_after = exact_pair_count(g, space);
  if (step.exact_after >= step.exact_before) throw DenegativizeError("modify did not reduce the exact pair count");
  return {std::move(g), std::move(step)};
}

DenegativizeResult remove_negative_edges(const WeightedFilling& f, const PseudometricSpace& space) {
  if (!f.topology().is_binary()) throw ValidationError("remove_negative_edges: topology is not binary");
  if (SpaceClass cls = classify(space); cls.kind == SpaceKind::TriangleViolating) {
    throw ValidationError("remove_negative_edges: space violates the triangle inequality");
  }
  if (FillingCheck check = is_generalized_filling(f, space); !check) {
    throw ValidationError("remove_negative_edges: not a generalized filling");
  }
  DenegativizeResult result{f, {}};
  const std::size_t max_steps = space.size() * (space.size() - 1) / 2;
  while (result.filling.has_negative_edge()) {
    if (result.steps.size() >= max_steps) throw DenegativizeError("step bound exceeded");
    const WeightedFilling& cur = result.filling;
    const TreeTopology& tree = cur.topology();
    std::optional<EdgeId> xy;
    for (EdgeId e = 0; e < tree.num_edges(); ++e) {
      if (sgn(cur.weight(e)) < 0 && (!xy || tree.edge_key(e) < tree.edge_key(*xy))) xy = e;
    }
    if (tree.vertex(tree.edge(*xy).u).is_boundary() || tree.vertex(tree.edge(*xy).v).is_boundary()) {
      throw DenegativizeError("negative edge " + tree.edge_key(*xy) + " touches a boundary vertex");
    }
    const PairPaths paths = boundary_pair_paths(tree, space.labels());
    std::optional<std::size_t> chosen;
    for (std::size_t k = 0; k < paths.pairs.size() && !chosen; ++k) {
      if (on_path(paths.paths[k], *xy) && cur.path_weight(paths.paths[k]) == space(paths.pairs[k].i, paths.pairs[k].j)) {
        chosen = k;
      }
    }
    if (!chosen) throw DenegativizeError("no exact path through negative edge " + tree.edge_key(*xy));
    auto [next, step] = modify(cur, space, *xy, paths.pairs[*chosen].i, paths.pairs[*chosen].j);
    result.steps.push_back(std::move(step));
    result.filling = std::move(next);
  }
  return result;
}

Json step_to_json(const ModificationStep& s) {
  return Json{{"x", s.x},
              {"y", s.y},
              {"a", s.a},
              {"b", s.b},
              {"c", s.c},
              {"d", s.d},
              {"e", rational_to_json(s.e)},
              {"gamma", Json::array({s.gamma_from, s.gamma_to})},
              {"before", Json{{"xa", rational_to_json(s.before_a)},
                              {"xb", rational_to_json(s.before_b)},
                              {"yc", rational_to_json(s.before_c)},
                              {"yd", rational_to_json(s.before_d)},
                              {"xy", rational_to_json(s.before_xy)}}},
              {"after", Json{{"xa", rational_to_json(s.after_a)},
                             {"yb", rational_to_json(s.after_b)},
                             {"yc", rational_to_json(s.after_c)},
                             {"xd", rational_to_json(s.after_d)},
                             {"xy", rational_to_json(s.after_xy)}}},
              {"exact_pairs_before", s.exact_before},
              {"exact_pairs_after", s.exact_after}};
}

}  // namespace minfill
