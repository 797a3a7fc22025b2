#pragma once

#include <cstddef>
#include <vector>

#include "minfill/rational.hpp"

namespace minfill {

/// coeffs . x >= rhs
struct Constraint {
  std::vector<Rational> coeffs;
  Rational rhs;
};

/// Minimize objective . x subject to every constraint; variable i is
/// restricted to x_i >= 0 iff nonneg[i].
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<Constraint> constraints;
  std::vector<Rational> objective;
  std::vector<bool> nonneg;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

/// Optimal: `value` and `point` (exact). Unbounded: `ray` is a direction d
/// with every constraint row . d >= 0, objective . d < 0, d_i >= 0 on
/// non-negative variables. Infeasible: `farkas` is y >= 0 (one entry per
/// constraint) with y^T A_j <= 0 on non-negative columns, y^T A_j = 0 on
/// free columns and y^T b > 0.
struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> point;
  std::vector<Rational> ray;
  std::vector<Rational> farkas;
};

/// Two-phase dense tableau simplex over exact rationals. Free variables are
/// split as x = x+ - x-. Bland's rule (lowest eligible index, ties in the
/// ratio test broken by lowest basic index) guarantees termination and makes
/// the result a deterministic function of the input. Throws ValidationError
/// on length mismatches.
LpOutcome solve(const LinearProgram& lp);

void validate(const LinearProgram& lp);

/// Certificate checks, used by tests and by the solver's self-checks.
bool satisfies_constraints(const LinearProgram& lp, const std::vector<Rational>& x);
bool is_unbounded_ray(const LinearProgram& lp, const std::vector<Rational>& d);
bool is_farkas_certificate(const LinearProgram& lp, const std::vector<Rational>& y);
Rational objective_value(const LinearProgram& lp, const std::vector<Rational>& x);

}  // namespace minfill
