#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "minfill/json_io.hpp"

namespace minfill {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// A boundary vertex carries one or more space labels (several only after a
/// quotient merges boundary points); an interior vertex carries none and is
/// named "i<interior_id>".
struct Vertex {
  std::vector<std::string> labels;
  std::size_t interior_id = 0;

  bool is_boundary() const { return !labels.empty(); }
};

struct Edge {
  VertexId u;
  VertexId v;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool touches(VertexId x) const { return x == u || x == v; }
};

/// A tree joining a boundary label set: the type of a filling.
///
/// create() enforces that every degree-1 vertex is boundary. create_relaxed()
/// drops that requirement so that types with pendant interior vertices can
/// still be represented (their generalized problem is unbounded).
class TreeTopology {
 public:
  static TreeTopology create(std::vector<Vertex> vertices, std::vector<Edge> edges);
  static TreeTopology create_relaxed(std::vector<Vertex> vertices, std::vector<Edge> edges);

  /// Boundary vertices are created one per label, in order; interior
  /// vertices "i0".."i{interior_count-1}" follow.
  static TreeTopology from_named_edges(const std::vector<std::string>& labels, std::size_t interior_count,
                                       const std::vector<std::pair<std::string, std::string>>& edges,
                                       bool relaxed = false);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(VertexId v) const { return vertices_[v]; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  /// Incident edges in edge-list order.
  const std::vector<EdgeId>& incident(VertexId v) const { return incidence_[v]; }
  std::size_t degree(VertexId v) const { return incidence_[v].size(); }
  std::size_t interior_count() const;

  std::string vertex_name(VertexId v) const;
  /// Endpoint names sorted and joined by "-".
  std::string edge_key(EdgeId e) const;

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<VertexId> vertex_of_label(std::string_view label) const;
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  /// All labels, in vertex order.
  std::vector<std::string> boundary_labels() const;

  /// Interior vertices all have degree 3 and boundary vertices degree 1.
  bool is_binary() const;

 private:
  TreeTopology(std::vector<Vertex> vertices, std::vector<Edge> edges, bool relaxed);

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Arrangement of boundary labels read cyclically.
struct CyclicOrder {
  std::vector<std::string> order;

  std::size_t size() const { return order.size(); }
  const std::string& at(std::size_t k) const { return order[k % order.size()]; }
};

/// (2n-5)!! for n >= 3, 1 for n = 2.
std::uint64_t binary_tree_count(std::size_t n);

/// Leaf-insertion enumeration of all binary tree types on `labels`: leaf k is
/// attached by subdividing each edge of each tree on the first k labels, in
/// edge creation order. Every type appears once. The callback receives the
/// enumeration index.
void for_each_binary_tree(const std::vector<std::string>& labels,
                          const std::function<void(std::size_t, const TreeTopology&)>& visit);
std::vector<TreeTopology> enumerate_binary_trees(const std::vector<std::string>& labels);

/// Canonical string that is equal for two trees iff they are isomorphic by
/// a map fixing every boundary label. Built by pruning leaves down to the
/// tree center and encoding sorted child signatures.
std::string canonical_form(const TreeTopology& tree);

/// Unique simple path from `from` to `to`, as edges in walking order.
std::vector<EdgeId> path_between(const TreeTopology& tree, VertexId from, VertexId to);

/// Depth-first walk from the first boundary vertex (children in incident-edge
/// order), listing boundary labels in visit order. Throws ValidationError if
/// the tree has an interior leaf.
CyclicOrder planar_order(const TreeTopology& tree);

/// Path k joins order.at(k) to order.at(k + 1).
std::vector<std::vector<EdgeId>> tour_paths(const TreeTopology& tree, const CyclicOrder& order);

/// True iff every edge lies on exactly two paths of the tour.
bool is_planar(const TreeTopology& tree, const CyclicOrder& order);

/// Contracts every edge in `contracted`. Components of (V, F) become the new
/// vertices and inherit all boundary labels of their members.
TreeTopology quotient(const TreeTopology& tree, std::span<const EdgeId> contracted);

struct SplitResult {
  TreeTopology tree;
  /// edge_map[old edge] = new edge carrying its weight. Two old edges map to
  /// the same new edge when an interior degree-2 vertex was suppressed.
  std::vector<EdgeId> edge_map;
  /// New edges with no preimage; they carry zero weight.
  std::vector<EdgeId> added;
};

/// Produces a binary type: interior degree-2 vertices are suppressed,
/// boundary vertices of degree >= 2 sprout a new interior vertex, and interior
/// vertices of degree d > 3 become a chain of d - 2 degree-3 vertices.
SplitResult split_to_binary(const TreeTopology& tree);

/// First interior vertex of degree 1.
std::optional<VertexId> has_interior_leaf(const TreeTopology& tree);

/// A boundary label pair (i < j, indices into a label list) and its path.
struct LabelPair {
  std::size_t i;
  std::size_t j;
};

struct PairPaths {
  std::vector<LabelPair> pairs;
  std::vector<std::vector<EdgeId>> paths;
};

/// Paths for every unordered pair of `labels`, pairs in lexicographic order.
/// Throws ValidationError when a label is not on the tree.
PairPaths boundary_pair_paths(const TreeTopology& tree, const std::vector<std::string>& labels);

/// {"interior": k, "edges": [["a", "i0"], ...]}
Json topology_to_json(const TreeTopology& tree);
TreeTopology topology_from_json(const Json& doc, const std::vector<std::string>& labels, bool relaxed = false);

}  // namespace minfill
