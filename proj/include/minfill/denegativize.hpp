#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "minfill/filling.hpp"
#include "minfill/json_io.hpp"
#include "minfill/metric_space.hpp"

namespace minfill {

/// Record of one rewiring at a negative interior edge XY of weight -2e.
///
/// Before: X is adjacent to A, B, Y and Y to C, D, X, with the exact path
/// gamma running A-X-Y-C. After: X is adjacent to A, D, Y and Y to B, C, X;
/// XY weighs 2e and XA, YB, YC, XD each lose e. Vertex names refer to the
/// topology (labels for boundary vertices, "i<k>" for interior ones).
struct ModificationStep {
  std::string x, y, a, b, c, d;
  Rational e;
  /// Exact boundary pair (labels) whose path is lengthened.
  std::string gamma_from, gamma_to;
  /// Weights of XA, XB, YC, YD, XY before the step ...
  Rational before_a, before_b, before_c, before_d, before_xy;
  /// ... and of XA, YB, YC, XD, XY after it.
  Rational after_a, after_b, after_c, after_d, after_xy;
  std::size_t exact_before = 0;
  std::size_t exact_after = 0;
};

/// Applies the rewiring at edge `xy` using the exact pair (gamma_i,
/// gamma_j), given as space label indices. Edge XB becomes YB and edge YD
/// becomes XD in place, so edge ids are stable. Every postcondition (equal
/// total weight, no boundary distance decreases, gamma no longer exact, no
/// new exact pairs) is checked and a violation throws DenegativizeError.
/// Throws ValidationError when the preconditions fail.
std::pair<WeightedFilling, ModificationStep> modify(const WeightedFilling& f, const PseudometricSpace& space,
                                                    EdgeId xy, std::size_t gamma_i, std::size_t gamma_j);

struct DenegativizeResult {
  WeightedFilling filling;
  std::vector<ModificationStep> steps;
};

/// Repeats modify() at the negative edge with the smallest key, using the
/// first exact pair (label order) through it, until no weight is negative.
/// `f` must be a binary generalized filling of globally minimal weight over a
/// space satisfying the triangle inequality.
DenegativizeResult remove_negative_edges(const WeightedFilling& f, const PseudometricSpace& space);

Json step_to_json(const ModificationStep& step);

}  // namespace minfill
