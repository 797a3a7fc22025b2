#include "minfill/metric_space.hpp"

#include <random>
#include <set>

#include "minfill/error.hpp"

namespace minfill {
namespace {

std::string cell(std::size_t i, std::size_t j) {
  return "row " + std::to_string(i) + ", column " + std::to_string(j);
}

}  // namespace

PseudometricSpace::PseudometricSpace(std::vector<std::string> labels,
                                     std::vector<std::vector<Rational>> dist)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
  const std::size_t n = labels_.size();
  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen.insert(labels_[i]).second) {
      throw ValidationError("duplicate label '" + labels_[i] + "' at index " + std::to_string(i));
    }
  }
  if (dist_.size() != n) {
    throw ValidationError("distance matrix has " + std::to_string(dist_.size()) + " rows, expected " +
                          std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (dist_[i].size() != n) {
      throw ValidationError("row " + std::to_string(i) + " has " + std::to_string(dist_[i].size()) +
                            " entries, expected " + std::to_string(n));
    }
  }
  for (auto& row : dist_) {
    for (auto& v : row) v.canonicalize();
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (dist_[i][i] != 0) throw ValidationError("nonzero diagonal at " + cell(i, i));
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(dist_[i][j]) < 0) throw ValidationError("negative distance at " + cell(i, j));
      if (dist_[i][j] != dist_[j][i]) throw ValidationError("asymmetric matrix at " + cell(i, j));
    }
  }
}

std::optional<std::size_t> PseudometricSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

SpaceClass classify(const PseudometricSpace& space) {
  const std::size_t n = space.size();
  const auto& L = space.labels();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (x == y || y == z || x == z) continue;
        if (space(x, z) > space(x, y) + space(y, z)) {
          return {SpaceKind::TriangleViolating, {L[x], L[y], L[z]}};
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (space(x, y) == 0) return {SpaceKind::DegeneratePseudometric, {L[x], L[y]}};
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (x == y || y == z || x == z) continue;
        if (space(x, z) == space(x, y) + space(y, z)) {
          return {SpaceKind::DegeneratePseudometric, {L[x], L[y], L[z]}};
        }
      }
    }
  }
  return {SpaceKind::NonDegenerateMetric, {}};
}

std::string_view to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::DegeneratePseudometric:
      return "degenerate-pseudometric";
    case SpaceKind::NonDegenerateMetric:
      return "non-degenerate-metric";
    case SpaceKind::TriangleViolating:
      return "triangle-violating";
  }
  return "unknown";
}

std::string_view to_string(SpaceRequest request) {
  switch (request) {
    case SpaceRequest::Metric:
      return "metric";
    case SpaceRequest::NonDegenerateMetric:
      return "non-degenerate";
    case SpaceRequest::DegeneratePseudometric:
      return "degenerate";
    case SpaceRequest::TriangleViolating:
      return "violating";
  }
  return "unknown";
}

SpaceRequest parse_space_request(std::string_view name) {
  for (SpaceRequest r : {SpaceRequest::Metric, SpaceRequest::NonDegenerateMetric, SpaceRequest::DegeneratePseudometric,
                         SpaceRequest::TriangleViolating}) {
    if (to_string(r) == name) return r;
  }
  throw ValidationError("unknown space class '" + std::string(name) + "'");
}

std::vector<std::vector<Rational>> shortest_path_closure(std::vector<std::vector<Rational>> dist) {
  const std::size_t n = dist.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational via = dist[i][k] + dist[k][j];
        if (via < dist[i][j]) dist[i][j] = via;
      }
    }
  }
  return dist;
}

PseudometricSpace random_space(std::size_t n, std::uint64_t seed, SpaceRequest request) {
  if (n < 2) throw ValidationError("random_space needs n >= 2, got " + std::to_string(n));
  constexpr int kMaxAttempts = 1'000'000;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> draw(1, 100);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        dist[i][j] = dist[j][i] = draw(rng);
      }
    }
    if (request != SpaceRequest::TriangleViolating) dist = shortest_path_closure(std::move(dist));
    PseudometricSpace space(labels, std::move(dist));
    const SpaceKind kind = classify(space).kind;
    bool accepted = false;
    switch (request) {
      case SpaceRequest::Metric:
        accepted = kind != SpaceKind::TriangleViolating;
        break;
      case SpaceRequest::NonDegenerateMetric:
        accepted = kind == SpaceKind::NonDegenerateMetric;
        break;
      case SpaceRequest::DegeneratePseudometric:
        accepted = kind == SpaceKind::DegeneratePseudometric;
        break;
      case SpaceRequest::TriangleViolating:
        accepted = kind == SpaceKind::TriangleViolating;
        break;
    }
    if (accepted) return space;
  }
  throw ValidationError("random_space: no matching instance after " + std::to_string(kMaxAttempts) +
                        " draws (n=" + std::to_string(n) + ")");
}

PseudometricSpace space_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");
  if (!doc.contains("labels") || !doc["labels"].is_array()) throw ParseError("missing array 'labels'");
  if (!doc.contains("dist") || !doc["dist"].is_array()) throw ParseError("missing array 'dist'");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < doc["labels"].size(); ++i) {
    const Json& l = doc["labels"][i];
    if (!l.is_string()) throw ParseError("label " + std::to_string(i) + " is not a string");
    labels.push_back(l.get<std::string>());
  }
  std::vector<std::vector<Rational>> dist;
  for (std::size_t i = 0; i < doc["dist"].size(); ++i) {
    const Json& row = doc["dist"][i];
    if (!row.is_array()) throw ParseError("dist row " + std::to_string(i) + " is not an array");
    std::vector<Rational> r;
    for (std::size_t j = 0; j < row.size(); ++j) r.push_back(rational_from_json(row[j], cell(i, j)));
    dist.push_back(std::move(r));
  }
  return PseudometricSpace(std::move(labels), std::move(dist));
}

PseudometricSpace parse_space(std::string_view text) { return space_from_json(parse_json_exact(text)); }

Json space_to_json(const PseudometricSpace& space) {
  Json dist = Json::array();
  for (const auto& row : space.matrix()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(rational_to_json(v));
    dist.push_back(std::move(r));
  }
  return Json{{"labels", space.labels()}, {"dist", std::move(dist)}};
}

std::string serialize_space(const PseudometricSpace& space) { return space_to_json(space).dump(); }

}  // namespace minfill
