#include "minfill/topology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "minfill/error.hpp"

namespace minfill {

TreeTopology::TreeTopology(std::vector<Vertex> vertices, std::vector<Edge> edges, bool relaxed)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), incidence_(vertices_.size()) {
  const std::size_t nv = vertices_.size();
  if (nv == 0) throw ValidationError("topology has no vertices");
  if (edges_.size() + 1 != nv) {
    throw ValidationError("not a tree: " + std::to_string(nv) + " vertices but " + std::to_string(edges_.size()) +
                          " edges");
  }
  std::set<std::string> labels;
  std::set<std::size_t> interior_ids;
  for (const auto& v : vertices_) {
    if (v.is_boundary()) {
      for (const auto& l : v.labels) {
        if (!labels.insert(l).second) throw ValidationError("label '" + l + "' appears more than once");
      }
    } else if (!interior_ids.insert(v.interior_id).second) {
      throw ValidationError("duplicate interior vertex i" + std::to_string(v.interior_id));
    }
  }
  for (std::size_t id : interior_ids) {
    if (labels.count("i" + std::to_string(id))) {
      throw ValidationError("label 'i" + std::to_string(id) + "' collides with an interior vertex name");
    }
  }
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u >= nv || ed.v >= nv) throw ValidationError("edge " + std::to_string(e) + " has an unknown endpoint");
    if (ed.u == ed.v) throw ValidationError("edge " + std::to_string(e) + " is a loop");
    incidence_[ed.u].push_back(e);
    incidence_[ed.v].push_back(e);
  }
  // Connectivity (with |E| = |V| - 1 this also rules out cycles).
  std::vector<bool> seen(nv, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (EdgeId e : incidence_[x]) {
      VertexId y = edges_[e].other(x);
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != nv) throw ValidationError("not a tree: graph is disconnected");
  if (!relaxed) {
    for (VertexId v = 0; v < nv; ++v) {
      if (!vertices_[v].is_boundary() && degree(v) <= 1) {
        throw ValidationError("interior vertex " + vertex_name(v) + " has degree " + std::to_string(degree(v)));
      }
    }
  }
}

TreeTopology TreeTopology::create(std::vector<Vertex> vertices, std::vector<Edge> edges) {
  return TreeTopology(std::move(vertices), std::move(edges), false);
}

TreeTopology TreeTopology::create_relaxed(std::vector<Vertex> vertices, std::vector<Edge> edges) {
  return TreeTopology(std::move(vertices), std::move(edges), true);
}

TreeTopology TreeTopology::from_named_edges(const std::vector<std::string>& labels, std::size_t interior_count,
                                            const std::vector<std::pair<std::string, std::string>>& edges,
                                            bool relaxed) {
  std::vector<Vertex> vertices;
  std::map<std::string, VertexId> by_name;
  for (const auto& l : labels) {
    by_name.emplace(l, vertices.size());
    vertices.push_back(Vertex{{l}, 0});
  }
  for (std::size_t k = 0; k < interior_count; ++k) {
    std::string name = "i" + std::to_string(k);
    if (by_name.count(name)) throw ValidationError("label '" + name + "' collides with an interior vertex name");
    by_name.emplace(name, vertices.size());
    vertices.push_back(Vertex{{}, k});
  }
  std::vector<Edge> out;
  for (const auto& [a, b] : edges) {
    auto ia = by_name.find(a);
    auto ib = by_name.find(b);
    if (ia == by_name.end()) throw ValidationError("unknown vertex '" + a + "' in edge list");
    if (ib == by_name.end()) throw ValidationError("unknown vertex '" + b + "' in edge list");
    out.push_back(Edge{ia->second, ib->second});
  }
  return TreeTopology(std::move(vertices), std::move(out), relaxed);
}

std::size_t TreeTopology::interior_count() const {
  return static_cast<std::size_t>(
      std::count_if(vertices_.begin(), vertices_.end(), [](const Vertex& v) { return !v.is_boundary(); }));
}

std::string TreeTopology::vertex_name(VertexId v) const {
  const Vertex& vx = vertices_[v];
  if (!vx.is_boundary()) return "i" + std::to_string(vx.interior_id);
  std::string out = vx.labels.front();
  for (std::size_t k = 1; k < vx.labels.size(); ++k) out += "+" + vx.labels[k];
  return out;
}

std::string TreeTopology::edge_key(EdgeId e) const {
  std::string a = vertex_name(edges_[e].u);
  std::string b = vertex_name(edges_[e].v);
  if (b < a) std::swap(a, b);
  return a + "-" + b;
}

std::optional<VertexId> TreeTopology::find_vertex(std::string_view name) const {
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertex_name(v) == name) return v;
  }
  return std::nullopt;
}

std::optional<VertexId> TreeTopology::vertex_of_label(std::string_view label) const {
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    for (const auto& l : vertices_[v].labels) {
      if (l == label) return v;
    }
  }
  return std::nullopt;
}

std::optional<EdgeId> TreeTopology::find_edge(VertexId a, VertexId b) const {
  for (EdgeId e : incidence_[a]) {
    if (edges_[e].other(a) == b) return e;
  }
  return std::nullopt;
}

std::vector<std::string> TreeTopology::boundary_labels() const {
  std::vector<std::string> out;
  for (const auto& v : vertices_) out.insert(out.end(), v.labels.begin(), v.labels.end());
  return out;
}

bool TreeTopology::is_binary() const {
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].is_boundary() ? degree(v) != 1 : degree(v) != 3) return false;
  }
  return true;
}

std::uint64_t binary_tree_count(std::size_t n) {
  std::uint64_t count = 1;
  for (std::size_t k = 3; k <= n; ++k) count *= 2 * k - 5;
  return count;
}

namespace {

struct Growing {
  std::size_t n;
  std::vector<Edge> edges;
};

void grow(Growing& g, std::size_t next_leaf, const std::vector<Vertex>& vertices, std::size_t& index,
          const std::function<void(std::size_t, const TreeTopology&)>& visit) {
  if (next_leaf == g.n) {
    visit(index++, TreeTopology::create(vertices, g.edges));
    return;
  }
  // Interior vertex created together with leaf k is number k - 2.
  const VertexId interior = g.n + (next_leaf - 2);
  const std::size_t current = g.edges.size();
  for (EdgeId e = 0; e < current; ++e) {
    const Edge old = g.edges[e];
    g.edges[e] = Edge{old.u, interior};
    g.edges.push_back(Edge{interior, old.v});
    g.edges.push_back(Edge{interior, next_leaf});
    grow(g, next_leaf + 1, vertices, index, visit);
    g.edges.pop_back();
    g.edges.pop_back();
    g.edges[e] = old;
  }
}

}  // namespace

void for_each_binary_tree(const std::vector<std::string>& labels,
                          const std::function<void(std::size_t, const TreeTopology&)>& visit) {
  const std::size_t n = labels.size();
  if (n < 2) throw ValidationError("binary tree enumeration needs at least 2 boundary points");
  std::vector<Vertex> vertices;
  for (const auto& l : labels) vertices.push_back(Vertex{{l}, 0});
  for (std::size_t k = 0; k + 2 < n; ++k) vertices.push_back(Vertex{{}, k});
  Growing g{n, {Edge{0, 1}}};
  std::size_t index = 0;
  grow(g, 2, vertices, index, visit);
}

std::vector<TreeTopology> enumerate_binary_trees(const std::vector<std::string>& labels) {
  std::vector<TreeTopology> out;
  for_each_binary_tree(labels, [&](std::size_t, const TreeTopology& t) { out.push_back(t); });
  return out;
}

namespace {

std::string vertex_signature(const TreeTopology& tree, VertexId v) {
  std::vector<std::string> labels = tree.vertex(v).labels;
  std::sort(labels.begin(), labels.end());
  std::string sig;
  for (const auto& l : labels) sig += std::to_string(l.size()) + ":" + l;
  return sig;
}

std::string rooted_encoding(const TreeTopology& tree, VertexId root, std::optional<VertexId> excluded) {
  // Iterative post-order to stay safe on long paths.
  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next;
    std::vector<std::string> children;
  };
  constexpr VertexId kNone = static_cast<VertexId>(-1);
  std::vector<Frame> stack;
  stack.push_back(Frame{root, excluded.value_or(kNone), 0, {}});
  std::string result;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& inc = tree.incident(f.v);
    if (f.next < inc.size()) {
      VertexId w = tree.edge(inc[f.next++]).other(f.v);
      if (w != f.parent) stack.push_back(Frame{w, f.v, 0, {}});
      continue;
    }
    std::sort(f.children.begin(), f.children.end());
    std::string enc = vertex_signature(tree, f.v) + "(";
    for (std::size_t k = 0; k < f.children.size(); ++k) enc += (k ? "," : "") + f.children[k];
    enc += ")";
    stack.pop_back();
    if (stack.empty()) {
      result = std::move(enc);
    } else {
      stack.back().children.push_back(std::move(enc));
    }
  }
  return result;
}

}  // namespace

std::string canonical_form(const TreeTopology& tree) {
  const std::size_t nv = tree.num_vertices();
  std::vector<std::size_t> deg(nv);
  std::vector<VertexId> layer;
  for (VertexId v = 0; v < nv; ++v) {
    deg[v] = tree.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = nv;
  while (remaining > 2) {
    std::vector<VertexId> next;
    for (VertexId v : layer) {
      --remaining;
      for (EdgeId e : tree.incident(v)) {
        VertexId w = tree.edge(e).other(v);
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  if (remaining == 1 || nv == 1) return rooted_encoding(tree, layer.front(), std::nullopt);
  const VertexId a = layer[0];
  const VertexId b = layer[1];
  std::string ea = rooted_encoding(tree, a, b);
  std::string eb = rooted_encoding(tree, b, a);
  if (eb < ea) std::swap(ea, eb);
  return "[" + ea + "|" + eb + "]";
}

std::vector<EdgeId> path_between(const TreeTopology& tree, VertexId from, VertexId to) {
  const std::size_t nv = tree.num_vertices();
  if (from >= nv || to >= nv) throw ValidationError("path_between: unknown vertex");
  if (from == to) return {};
  constexpr EdgeId kNone = static_cast<EdgeId>(-1);
  std::vector<EdgeId> via(nv, kNone);
  std::vector<bool> seen(nv, false);
  std::vector<VertexId> stack{to};
  seen[to] = true;
  while (!stack.empty() && !seen[from]) {
    VertexId x = stack.back();
    stack.pop_back();
    for (EdgeId e : tree.incident(x)) {
      VertexId y = tree.edge(e).other(x);
      if (!seen[y]) {
        seen[y] = true;
        via[y] = e;
        stack.push_back(y);
      }
    }
  }
  std::vector<EdgeId> path;
  for (VertexId x = from; x != to; x = tree.edge(via[x]).other(x)) path.push_back(via[x]);
  return path;
}

CyclicOrder planar_order(const TreeTopology& tree) {
  if (auto leaf = has_interior_leaf(tree)) {
    throw ValidationError("planar_order: interior vertex " + tree.vertex_name(*leaf) + " has degree 1");
  }
  CyclicOrder out;
  VertexId start = 0;
  while (start < tree.num_vertices() && !tree.vertex(start).is_boundary()) ++start;
  if (start == tree.num_vertices()) return out;
  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next;
  };
  std::vector<Frame> stack{{start, start, 0}};
  out.order = tree.vertex(start).labels;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& inc = tree.incident(f.v);
    if (f.next == inc.size()) {
      stack.pop_back();
      continue;
    }
    VertexId w = tree.edge(inc[f.next++]).other(f.v);
    if (w == f.parent) continue;
    const auto& labels = tree.vertex(w).labels;
    out.order.insert(out.order.end(), labels.begin(), labels.end());
    stack.push_back(Frame{w, f.v, 0});
  }
  return out;
}

std::vector<std::vector<EdgeId>> tour_paths(const TreeTopology& tree, const CyclicOrder& order) {
  std::vector<std::string> expected = tree.boundary_labels();
  std::vector<std::string> given = order.order;
  std::sort(expected.begin(), expected.end());
  std::sort(given.begin(), given.end());
  if (expected != given) throw ValidationError("cyclic order does not cover the tree's boundary labels");
  std::vector<std::vector<EdgeId>> out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    VertexId a = *tree.vertex_of_label(order.at(k));
    VertexId b = *tree.vertex_of_label(order.at(k + 1));
    out.push_back(path_between(tree, a, b));
  }
  return out;
}

bool is_planar(const TreeTopology& tree, const CyclicOrder& order) {
  std::vector<int> uses(tree.num_edges(), 0);
  for (const auto& path : tour_paths(tree, order)) {
    for (EdgeId e : path) ++uses[e];
  }
  return std::all_of(uses.begin(), uses.end(), [](int u) { return u == 2; });
}

TreeTopology quotient(const TreeTopology& tree, std::span<const EdgeId> contracted) {
  const std::size_t nv = tree.num_vertices();
  std::vector<bool> in_f(tree.num_edges(), false);
  for (EdgeId e : contracted) {
    if (e >= tree.num_edges()) throw ValidationError("quotient: edge " + std::to_string(e) + " is not in the tree");
    in_f[e] = true;
  }
  std::vector<VertexId> parent(nv);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  std::function<VertexId(VertexId)> find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e = 0; e < tree.num_edges(); ++e) {
    if (in_f[e]) {
      VertexId a = find(tree.edge(e).u);
      VertexId b = find(tree.edge(e).v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<VertexId, VertexId> component;
  std::vector<Vertex> vertices;
  for (VertexId v = 0; v < nv; ++v) {
    VertexId root = find(v);
    auto [it, inserted] = component.emplace(root, vertices.size());
    if (inserted) vertices.push_back(Vertex{});
    const auto& labels = tree.vertex(v).labels;
    auto& target = vertices[it->second].labels;
    target.insert(target.end(), labels.begin(), labels.end());
  }
  std::size_t next_interior = 0;
  for (auto& v : vertices) {
    if (!v.is_boundary()) v.interior_id = next_interior++;
  }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < tree.num_edges(); ++e) {
    if (!in_f[e]) {
      edges.push_back(Edge{component[find(tree.edge(e).u)], component[find(tree.edge(e).v)]});
    }
  }
  return TreeTopology::create_relaxed(std::move(vertices), std::move(edges));
}

SplitResult split_to_binary(const TreeTopology& tree) {
  if (auto leaf = has_interior_leaf(tree)) {
    throw ValidationError("split_to_binary: interior vertex " + tree.vertex_name(*leaf) + " has degree 1");
  }
  struct WorkEdge {
    VertexId u;
    VertexId v;
    std::vector<EdgeId> origins;
    bool alive = true;
  };
  std::vector<Vertex> vertices = tree.vertices();
  std::vector<bool> vertex_alive(vertices.size(), true);
  std::vector<WorkEdge> edges;
  for (EdgeId e = 0; e < tree.num_edges(); ++e) edges.push_back(WorkEdge{tree.edge(e).u, tree.edge(e).v, {e}});

  auto incident = [&](VertexId v) {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges[e].alive && (edges[e].u == v || edges[e].v == v)) out.push_back(e);
    }
    return out;
  };
  auto repoint = [&](std::size_t e, VertexId from, VertexId to) {
    if (edges[e].u == from) {
      edges[e].u = to;
    } else {
      edges[e].v = to;
    }
  };
  auto new_interior = [&] {
    vertices.push_back(Vertex{});
    vertex_alive.push_back(true);
    return vertices.size() - 1;
  };

  // Interior degree-2 vertices: merge their two edges.
  for (VertexId m = 0; m < vertices.size(); ++m) {
    if (vertices[m].is_boundary()) continue;
    auto inc = incident(m);
    if (inc.size() != 2) continue;
    WorkEdge& keep = edges[inc[0]];
    WorkEdge& drop = edges[inc[1]];
    VertexId far = drop.u == m ? drop.v : drop.u;
    repoint(inc[0], m, far);
    keep.origins.insert(keep.origins.end(), drop.origins.begin(), drop.origins.end());
    drop.alive = false;
    vertex_alive[m] = false;
  }

  std::vector<std::size_t> added_work;
  const std::size_t original_count = vertices.size();
  for (VertexId b = 0; b < original_count; ++b) {
    if (!vertex_alive[b] || !vertices[b].is_boundary()) continue;
    auto inc = incident(b);
    if (inc.size() < 2) continue;
    VertexId z = new_interior();
    for (std::size_t e : inc) repoint(e, b, z);
    edges.push_back(WorkEdge{b, z, {}});
    added_work.push_back(edges.size() - 1);
  }

  for (VertexId v = 0; v < vertices.size(); ++v) {
    if (!vertex_alive[v] || vertices[v].is_boundary()) continue;
    auto inc = incident(v);
    const std::size_t d = inc.size();
    if (d <= 3) continue;
    // v keeps inc[0], inc[1]; chain members take one edge each, the last two.
    VertexId prev = v;
    for (std::size_t k = 2; k + 2 <= d; ++k) {
      VertexId z = new_interior();
      edges.push_back(WorkEdge{prev, z, {}});
      added_work.push_back(edges.size() - 1);
      repoint(inc[k], v, z);
      if (k + 2 == d) repoint(inc[k + 1], v, z);
      prev = z;
    }
  }

  std::vector<VertexId> renumber(vertices.size(), 0);
  std::vector<Vertex> out_vertices;
  std::size_t next_interior = 0;
  for (VertexId v = 0; v < vertices.size(); ++v) {
    if (!vertex_alive[v]) continue;
    renumber[v] = out_vertices.size();
    Vertex vx = vertices[v];
    if (!vx.is_boundary()) vx.interior_id = next_interior++;
    out_vertices.push_back(std::move(vx));
  }
  std::vector<Edge> out_edges;
  std::vector<std::size_t> work_to_new(edges.size(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!edges[e].alive) continue;
    work_to_new[e] = out_edges.size();
    out_edges.push_back(Edge{renumber[edges[e].u], renumber[edges[e].v]});
  }
  SplitResult result{TreeTopology::create(std::move(out_vertices), std::move(out_edges)),
                     std::vector<EdgeId>(tree.num_edges(), 0),
                     {}};
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!edges[e].alive) continue;
    for (EdgeId o : edges[e].origins) result.edge_map[o] = work_to_new[e];
  }
  for (std::size_t e : added_work) result.added.push_back(work_to_new[e]);
  return result;
}

std::optional<VertexId> has_interior_leaf(const TreeTopology& tree) {
  for (VertexId v = 0; v < tree.num_vertices(); ++v) {
    if (!tree.vertex(v).is_boundary() && tree.degree(v) == 1) return v;
  }
  return std::nullopt;
}

PairPaths boundary_pair_paths(const TreeTopology& tree, const std::vector<std::string>& labels) {
  const std::size_t n = labels.size();
  std::vector<VertexId> at(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto v = tree.vertex_of_label(labels[i]);
    if (!v) throw ValidationError("label '" + labels[i] + "' is not a vertex of the topology");
    at[i] = *v;
  }
  PairPaths out;
  const std::size_t nv = tree.num_vertices();
  constexpr EdgeId kNone = static_cast<EdgeId>(-1);
  std::vector<EdgeId> via(nv);
  std::vector<VertexId> stack;
  for (std::size_t i = 0; i < n; ++i) {
    // Parent edges of a traversal rooted at label i.
    std::fill(via.begin(), via.end(), kNone);
    std::vector<bool> seen(nv, false);
    seen[at[i]] = true;
    stack.assign(1, at[i]);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (EdgeId e : tree.incident(x)) {
        VertexId y = tree.edge(e).other(x);
        if (!seen[y]) {
          seen[y] = true;
          via[y] = e;
          stack.push_back(y);
        }
      }
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<EdgeId> path;
      for (VertexId x = at[j]; x != at[i]; x = tree.edge(via[x]).other(x)) path.push_back(via[x]);
      std::reverse(path.begin(), path.end());
      out.pairs.push_back(LabelPair{i, j});
      out.paths.push_back(std::move(path));
    }
  }
  return out;
}

Json topology_to_json(const TreeTopology& tree) {
  Json edges = Json::array();
  for (EdgeId e = 0; e < tree.num_edges(); ++e) {
    edges.push_back(Json::array({tree.vertex_name(tree.edge(e).u), tree.vertex_name(tree.edge(e).v)}));
  }
  return Json{{"interior", tree.interior_count()}, {"edges", std::move(edges)}};
}

TreeTopology topology_from_json(const Json& doc, const std::vector<std::string>& labels, bool relaxed) {
  if (!doc.is_object()) throw ParseError("topology must be a JSON object");
  if (!doc.contains("interior") || !doc["interior"].is_number_unsigned()) {
    throw ParseError("topology: missing non-negative integer 'interior'");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError("topology: missing array 'edges'");
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t k = 0; k < doc["edges"].size(); ++k) {
    const Json& e = doc["edges"][k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw ParseError("topology: edge " + std::to_string(k) + " must be a pair of vertex names");
    }
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return TreeTopology::from_named_edges(labels, doc["interior"].get<std::size_t>(), edges, relaxed);
}

}  // namespace minfill
