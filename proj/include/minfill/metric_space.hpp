#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minfill/json_io.hpp"
#include "minfill/rational.hpp"

namespace minfill {

/// A finite pseudometric space: ordered distinct labels plus a symmetric,
/// non-negative, zero-diagonal rational distance matrix. The triangle
/// inequality is not required; see classify().
class PseudometricSpace {
 public:
  /// Validates the invariants and throws ValidationError (with row/column)
  /// on the first violation.
  PseudometricSpace(std::vector<std::string> labels, std::vector<std::vector<Rational>> dist);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  const Rational& operator()(std::size_t i, std::size_t j) const { return dist_[i][j]; }
  const std::vector<std::vector<Rational>>& matrix() const { return dist_; }

  bool operator==(const PseudometricSpace& other) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Rational>> dist_;
};

enum class SpaceKind { DegeneratePseudometric, NonDegenerateMetric, TriangleViolating };

/// Result of classify(). The witness holds labels: a pair for a zero
/// distance, a triple (x, y, z) for a triangle relation on d(x,z) versus
/// d(x,y) + d(y,z).
struct SpaceClass {
  SpaceKind kind;
  std::vector<std::string> witness;
};

SpaceClass classify(const PseudometricSpace& space);

/// True unless some triple violates the triangle inequality.
inline bool satisfies_triangle_inequality(const PseudometricSpace& space) {
  return classify(space).kind != SpaceKind::TriangleViolating;
}

std::string_view to_string(SpaceKind kind);

/// What random_space() should produce. `Metric` accepts any shortest-path
/// closed matrix, degenerate or not.
enum class SpaceRequest { Metric, NonDegenerateMetric, DegeneratePseudometric, TriangleViolating };

/// Deterministic in (n, seed, request). Metric requests draw integers in
/// [1, 100] and take the shortest-path closure; violating requests keep the
/// raw draw. Re-draws until the classification matches.
std::string_view to_string(SpaceRequest request);
/// "metric", "non-degenerate", "degenerate" or "violating".
SpaceRequest parse_space_request(std::string_view name);

PseudometricSpace random_space(std::size_t n, std::uint64_t seed, SpaceRequest request);

/// All-pairs shortest-path closure of a non-negative symmetric matrix.
std::vector<std::vector<Rational>> shortest_path_closure(std::vector<std::vector<Rational>> dist);

/// Instance format: {"labels": [...], "dist": [[...], ...]} with entries as
/// integers, decimals or "p/q" strings. Throws ParseError / ValidationError.
PseudometricSpace parse_space(std::string_view text);
PseudometricSpace space_from_json(const Json& doc);
Json space_to_json(const PseudometricSpace& space);
std::string serialize_space(const PseudometricSpace& space);

}  // namespace minfill
