#include <gtest/gtest.h>

#include "minfill/denegativize.hpp"
#include "minfill/error.hpp"
#include "minfill/harness.hpp"
#include "minfill/solver.hpp"

namespace minfill {
namespace {

const std::vector<std::string> kAbcd{"a", "b", "c", "d"};

// Edges: 0 a-i0, 1 b-i0, 2 i0-i1, 3 c-i1, 4 d-i1.
WeightedFilling gap_filling(const Rational& center) {
  return WeightedFilling(
      TreeTopology::from_named_edges(kAbcd, 2, {{"a", "i0"}, {"b", "i0"}, {"i0", "i1"}, {"c", "i1"}, {"d", "i1"}}),
      {2, 2, center, 2, 2});
}

void expect_distances(const WeightedFilling& f, const std::vector<std::tuple<std::string, std::string, int>>& want) {
  for (const auto& [u, v, d] : want) EXPECT_EQ(f.dw(u, v), d) << u << "-" << v;
}

TEST(Modify, GammaThroughAandC) {
  PseudometricSpace space = example_gap_space();
  auto [g, step] = modify(gap_filling(-1), space, 2, 0, 2);
  EXPECT_EQ(step.x, "i0");
  EXPECT_EQ(step.y, "i1");
  EXPECT_EQ(step.a, "a");
  EXPECT_EQ(step.b, "b");
  EXPECT_EQ(step.c, "c");
  EXPECT_EQ(step.d, "d");
  EXPECT_EQ(step.e, Rational(1, 2));
  EXPECT_EQ(step.after_xy, 1);
  EXPECT_EQ(step.exact_before, 6u);
  EXPECT_EQ(step.exact_after, 4u);

  const TreeTopology& t = g.topology();
  EXPECT_EQ(t.edge_key(1), "b-i1");
  EXPECT_EQ(t.edge_key(4), "d-i0");
  Rational three_halves(3, 2);
  EXPECT_EQ(g.weights(), (std::vector<Rational>{three_halves, three_halves, 1, three_halves, three_halves}));
  EXPECT_EQ(g.total_weight(), 7);
  EXPECT_TRUE(is_nonneg_filling(g, space));
  expect_distances(g, {{"a", "b", 4}, {"c", "d", 4}, {"a", "d", 3}, {"b", "c", 3}, {"a", "c", 4}, {"b", "d", 4}});
}

TEST(Modify, GammaThroughBandD) {
  PseudometricSpace space = example_gap_space();
  auto [g, step] = modify(gap_filling(-1), space, 2, 1, 3);
  EXPECT_EQ(step.a, "b");
  EXPECT_EQ(step.b, "a");
  EXPECT_EQ(step.c, "d");
  EXPECT_EQ(step.d, "c");
  EXPECT_EQ(g.topology().edge_key(0), "a-i1");
  EXPECT_EQ(g.topology().edge_key(3), "c-i0");
  EXPECT_EQ(g.total_weight(), 7);
  EXPECT_TRUE(is_nonneg_filling(g, space));
  expect_distances(g, {{"b", "c", 3}, {"a", "d", 3}, {"b", "d", 4}, {"a", "c", 4}});
}

TEST(Modify, RejectsBadPreconditions) {
  PseudometricSpace space = example_gap_space();
  EXPECT_THROW(modify(gap_filling(-1), space, 0, 0, 1), ValidationError);  // boundary edge
  EXPECT_THROW(modify(gap_filling(0), space, 2, 0, 1), ValidationError);   // weight not negative
  EXPECT_THROW(modify(gap_filling(-1), space, 2, 0, 1), ValidationError);  // a-b avoids the edge
  EXPECT_THROW(modify(gap_filling(-1), space, 9, 0, 2), ValidationError);  // unknown edge

  // a-c is not exact once the leaf edges grow.
  WeightedFilling loose(gap_filling(-1).topology(), {3, 2, -1, 2, 2});
  EXPECT_THROW(modify(loose, space, 2, 0, 2), ValidationError);

  std::vector<std::pair<std::string, std::string>> star_edges;
  for (const auto& l : kAbcd) star_edges.emplace_back(l, "i0");
  WeightedFilling star(TreeTopology::from_named_edges(kAbcd, 1, star_edges), {2, 2, 2, 2});
  EXPECT_THROW(modify(star, space, 0, 0, 1), ValidationError);
}

TEST(RemoveNegativeEdges, GapSpace) {
  PseudometricSpace space = example_gap_space();
  DenegativizeResult r = remove_negative_edges(gap_filling(-1), space);
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_EQ(r.filling.total_weight(), 7);
  EXPECT_TRUE(is_nonneg_filling(r.filling, space));
  EXPECT_EQ(r.steps[0].gamma_from, "a");
  EXPECT_EQ(r.steps[0].gamma_to, "c");
  Json j = step_to_json(r.steps[0]);
  EXPECT_EQ(j["e"], "1/2");
}

TEST(RemoveNegativeEdges, NonNegativeIsIdentity) {
  SolveReport report = solve_space(example_gap_space());
  ASSERT_FALSE(report.mf_filling.has_negative_edge());
  DenegativizeResult r = remove_negative_edges(report.mf_filling, example_gap_space());
  EXPECT_TRUE(r.steps.empty());
  EXPECT_EQ(r.filling.weights(), report.mf_filling.weights());
}

TEST(RemoveNegativeEdges, RejectsViolatingSpace) {
  SolveReport report = solve_space(example_violating_space());
  EXPECT_THROW(remove_negative_edges(report.mf_minus_filling, example_violating_space()), ValidationError);
}

// Six-point metrics whose generalized optimum has a negative edge.
TEST(RemoveNegativeEdges, RandomSixPointOptima) {
  for (std::uint64_t seed : {90, 112}) {
    PseudometricSpace s = random_space(6, seed, SpaceRequest::Metric);
    SolveReport report = solve_space(s);
    ASSERT_TRUE(report.mf_minus_filling.has_negative_edge()) << seed;
    const std::size_t exact = exact_pair_count(report.mf_minus_filling, s);
    DenegativizeResult r = remove_negative_edges(report.mf_minus_filling, s);
    EXPECT_FALSE(r.steps.empty());
    EXPECT_LE(r.steps.size(), exact);
    EXPECT_EQ(r.filling.total_weight(), report.mf_minus);
    EXPECT_EQ(r.filling.total_weight(), report.mf);
    EXPECT_TRUE(is_nonneg_filling(r.filling, s));
    for (std::size_t k = 0; k < r.steps.size(); ++k) {
      EXPECT_LT(r.steps[k].exact_after, r.steps[k].exact_before);
      if (k > 0) EXPECT_EQ(r.steps[k].exact_before, r.steps[k - 1].exact_after);
    }
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = i + 1; j < 6; ++j) {
        EXPECT_GE(r.filling.dw(s.label(i), s.label(j)), report.mf_minus_filling.dw(s.label(i), s.label(j)));
      }
    }
  }
}

// Caterpillar a,c | b | e | d,f with two negative interior edges; the space is
// its own distance matrix, and the filling is globally minimal.
TEST(RemoveNegativeEdges, TwoNegativeEdgesTakeTwoSteps) {
  const std::vector<std::string> labels{"a", "b", "c", "d", "e", "f"};
  TreeTopology t = TreeTopology::from_named_edges(labels, 4,
                                                  {{"a", "i0"},
                                                   {"i0", "i1"},
                                                   {"i0", "c"},
                                                   {"i1", "b"},
                                                   {"i1", "i2"},
                                                   {"i2", "i3"},
                                                   {"i2", "e"},
                                                   {"i3", "d"},
                                                   {"i3", "f"}});
  WeightedFilling f(t, {3, -1, 3, 2, 1, -1, 3, 4, 5});
  std::vector<std::vector<Rational>> m(6, std::vector<Rational>(6, 0));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      if (i != j) m[i][j] = f.dw(labels[i], labels[j]);
    }
  }
  PseudometricSpace s(labels, m);
  SolveReport report = solve_space(s);
  ASSERT_EQ(report.mf_minus, 19);
  ASSERT_EQ(report.mf, 19);

  DenegativizeResult r = remove_negative_edges(f, s);
  ASSERT_EQ(r.steps.size(), 2u);
  EXPECT_EQ(r.steps[0].exact_before, 15u);
  EXPECT_LT(r.steps[0].exact_after, r.steps[0].exact_before);
  EXPECT_EQ(r.steps[1].exact_before, r.steps[0].exact_after);
  EXPECT_LT(r.steps[1].exact_after, r.steps[1].exact_before);
  EXPECT_EQ(r.filling.total_weight(), 19);
  EXPECT_TRUE(is_nonneg_filling(r.filling, s));
}

}  // namespace
}  // namespace minfill
