#include <gtest/gtest.h>

#include <random>

#include "minfill/error.hpp"
#include "minfill/lp.hpp"
#include "oracles.hpp"

namespace minfill {
namespace {

Constraint row(std::vector<Rational> coeffs, Rational rhs) { return Constraint{std::move(coeffs), std::move(rhs)}; }

// Variables: a-u, b-u, u-v, c-v, d-v.
LinearProgram gap_system(bool nonneg) {
  LinearProgram lp;
  lp.num_vars = 5;
  lp.objective.assign(5, 1);
  lp.nonneg.assign(5, nonneg);
  lp.constraints = {
      row({1, 1, 0, 0, 0}, 4),  // a-b
      row({1, 0, 1, 1, 0}, 3),  // a-c
      row({1, 0, 1, 0, 1}, 3),  // a-d
      row({0, 1, 1, 1, 0}, 3),  // b-c
      row({0, 1, 1, 0, 1}, 3),  // b-d
      row({0, 0, 0, 1, 1}, 4),  // c-d
  };
  return lp;
}

TEST(LpSolve, SingleBound) {
  LinearProgram lp{1, {row({1}, 3)}, {1}, {true}};
  LpOutcome out = solve(lp);
  ASSERT_EQ(out.status, LpStatus::Optimal);
  EXPECT_EQ(out.value, 3);
  EXPECT_EQ(out.point, (std::vector<Rational>{3}));
}

TEST(LpSolve, GapSystem) {
  LpOutcome gen = solve(gap_system(false));
  ASSERT_EQ(gen.status, LpStatus::Optimal);
  EXPECT_EQ(gen.value, 7);
  EXPECT_EQ(gen.point, (std::vector<Rational>{2, 2, -1, 2, 2}));

  LpOutcome nonneg = solve(gap_system(true));
  ASSERT_EQ(nonneg.status, LpStatus::Optimal);
  EXPECT_EQ(nonneg.value, 8);
  EXPECT_TRUE(satisfies_constraints(gap_system(true), nonneg.point));
}

TEST(LpSolve, FreeVariableWithoutConstraintsIsUnbounded) {
  LinearProgram lp{1, {}, {1}, {false}};
  LpOutcome out = solve(lp);
  ASSERT_EQ(out.status, LpStatus::Unbounded);
  EXPECT_TRUE(is_unbounded_ray(lp, out.ray));
}

TEST(LpSolve, InfeasibleHasFarkasCertificate) {
  // x >= 2 and -x >= -1.
  LinearProgram lp{1, {row({1}, 2), row({-1}, -1)}, {1}, {false}};
  LpOutcome out = solve(lp);
  ASSERT_EQ(out.status, LpStatus::Infeasible);
  EXPECT_TRUE(is_farkas_certificate(lp, out.farkas));
}

TEST(LpSolve, EmptyProgram) {
  LinearProgram lp{0, {}, {}, {}};
  LpOutcome out = solve(lp);
  EXPECT_EQ(out.status, LpStatus::Optimal);
  EXPECT_EQ(out.value, 0);
}

TEST(LpSolve, RejectsLengthMismatch) {
  EXPECT_THROW(solve(LinearProgram{2, {row({1}, 0)}, {1, 1}, {true, true}}), ValidationError);
  EXPECT_THROW(solve(LinearProgram{2, {}, {1}, {true, true}}), ValidationError);
  EXPECT_THROW(solve(LinearProgram{2, {}, {1, 1}, {true}}), ValidationError);
}

TEST(LpSolve, Deterministic) {
  LpOutcome a = solve(gap_system(true));
  LpOutcome b = solve(gap_system(true));
  EXPECT_EQ(a.point, b.point);
}

// Random small LPs against vertex enumeration, with certificate checks.
TEST(LpProperty, AgreesWithVertexEnumeration) {
  std::mt19937_64 rng(2024);
  std::size_t seen[3] = {0, 0, 0};
  for (int trial = 0; trial < 300; ++trial) {
    LinearProgram lp = oracle::random_lp(rng);
    LpOutcome out = solve(lp);
    oracle::BruteResult brute = oracle::brute_force_lp(lp);
    ASSERT_EQ(out.status, brute.status) << "trial " << trial;
    ++seen[static_cast<int>(out.status)];
    switch (out.status) {
      case LpStatus::Optimal:
        EXPECT_EQ(out.value, brute.value) << "trial " << trial;
        EXPECT_TRUE(satisfies_constraints(lp, out.point));
        EXPECT_EQ(objective_value(lp, out.point), out.value);
        break;
      case LpStatus::Unbounded:
        EXPECT_TRUE(is_unbounded_ray(lp, out.ray)) << "trial " << trial;
        break;
      case LpStatus::Infeasible:
        EXPECT_TRUE(is_farkas_certificate(lp, out.farkas)) << "trial " << trial;
        break;
    }
  }
  for (std::size_t s : seen) EXPECT_GT(s, 0u);
}

TEST(LpProperty, RedundantConstraintKeepsValue) {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    LinearProgram lp = oracle::random_lp(rng);
    if (lp.constraints.size() < 2) continue;
    LpOutcome base = solve(lp);
    if (base.status != LpStatus::Optimal) continue;
    const Constraint& p = lp.constraints[0];
    const Constraint& q = lp.constraints[1];
    Constraint sum{std::vector<Rational>(lp.num_vars), p.rhs + q.rhs};
    for (std::size_t i = 0; i < lp.num_vars; ++i) sum.coeffs[i] = p.coeffs[i] + q.coeffs[i];
    lp.constraints.push_back(sum);
    LpOutcome with = solve(lp);
    ASSERT_EQ(with.status, LpStatus::Optimal);
    EXPECT_EQ(with.value, base.value);
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(LpProperty, FreeingAVariableNeverRaisesTheOptimum) {
  std::mt19937_64 rng(8);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    LinearProgram lp = oracle::random_lp(rng);
    LpOutcome tight = solve(lp);
    if (tight.status != LpStatus::Optimal) continue;
    for (std::size_t i = 0; i < lp.num_vars; ++i) {
      if (!lp.nonneg[i]) continue;
      LinearProgram relaxed = lp;
      relaxed.nonneg[i] = false;
      LpOutcome r = solve(relaxed);
      ASSERT_NE(r.status, LpStatus::Infeasible);
      if (r.status == LpStatus::Optimal) EXPECT_LE(r.value, tight.value);
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}

}  // namespace
}  // namespace minfill
