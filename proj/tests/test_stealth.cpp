#include <gtest/gtest.h>

#include "support.hpp"

using namespace minorkit;

namespace {

Graph path3() { return Graph(3, {{1, 2, Rational(1)}, {2, 3, Rational(1)}}); }

// Path 1-2-...-k with unit gains and F = every edge: k singleton components
// with exponents 0..k-1 in order.
Graph unit_path(int k) {
  std::vector<Edge> edges;
  for (int i = 1; i < k; ++i) edges.push_back({i, i + 1, Rational(1)});
  return Graph(k, edges);
}

EdgeSet all_edges(const Graph& g) {
  EdgeSet f(g.edge_count());
  std::iota(f.begin(), f.end(), 0);
  return f;
}

}  // namespace

TEST(Feasibility, TriangleSingleEdge) {
  const Graph g = Graph::from_pairs(3, {{1, 2}, {2, 3}, {1, 3}});
  const auto f = feasibility(g, {0});
  EXPECT_FALSE(f.feasible);
  ASSERT_TRUE(f.violating_edge.has_value());
  EXPECT_EQ(f.witness_cycle.size(), 3u);
  EXPECT_EQ(f.witness_edges, (EdgeSet{0, 1, 2}));
}

TEST(Feasibility, BridgeAndEmpty) {
  const auto f = feasibility(path3(), {0});
  EXPECT_TRUE(f.feasible);
  EXPECT_EQ(f.spec.k, 2u);
  const Graph two = Graph::from_pairs(4, {{1, 2}, {3, 4}});
  const auto e = feasibility(two, {});
  EXPECT_TRUE(e.feasible);
  EXPECT_EQ(e.spec.k, 2u);
}

TEST(Feasibility, MatchesCycleOracleExhaustivelyOnSmallGraphs) {
  std::mt19937_64 rng(testkit::seed(61));
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testkit::random_connected(rng, testkit::uniform(rng, 3, 6), testkit::uniform(rng, 0, 4));
    const auto cycles = enumerate_cycles(g);
    for (const auto& f : testkit::all_subsets_up_to(g.edge_count(), 3))
      EXPECT_EQ(feasibility(g, f).feasible, testkit::cycle_oracle_feasible(g, f, cycles));
  }
}

TEST(ComponentGraph, Examples) {
  EXPECT_TRUE(component_graph(feasibility(path3(), {0}).spec).same_topology(Graph::from_pairs(2, {{1, 2}})));
  const Graph star = Graph::from_pairs(4, {{1, 2}, {1, 3}, {1, 4}});
  EXPECT_TRUE(component_graph(feasibility(star, {0, 1, 2}).spec).same_topology(Graph::from_pairs(4, {{1, 2}, {1, 3}, {1, 4}})));
  const Graph c4 = Graph::from_pairs(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  EXPECT_TRUE(component_graph(feasibility(c4, {0, 1, 2, 3}).spec).same_topology(c4));
}

TEST(Stealth, K2HalfLambda) {
  const Graph g(2, {{1, 2, Rational(1)}});
  const auto spec = feasibility(g, {0}).spec;
  const auto h = assemble_gain_matrix(g);
  const auto attack = build_stealth(g, spec, h, Rational(1, 2));
  EXPECT_EQ(attack.s, (RationalVector{1, Rational(1, 2)}));
  for (const auto& x : attack.a) EXPECT_NE(x, 0);
  EXPECT_TRUE(attack.rejected.empty());
}

TEST(Stealth, LambdaOneIsARootAndGetsPerturbed) {
  const Graph g(2, {{1, 2, Rational(1)}});
  const auto spec = feasibility(g, {0}).spec;
  const auto h = assemble_gain_matrix(g);
  for (const auto& p : boundary_polynomials(g, spec, h, identity_exponents(spec))) EXPECT_EQ(p(Rational(1)), 0);
  const auto attack = build_stealth(g, spec, h, Rational(1));
  ASSERT_EQ(attack.rejected.size(), 1u);
  EXPECT_EQ(attack.rejected[0], 1);
  EXPECT_EQ(attack.lambda, Rational(1, 2));
  EXPECT_THROW(build_stealth(g, spec, h, Rational(3, 2)), Error);
  EXPECT_THROW(build_stealth(g, spec, h, Rational(0)), Error);
}

TEST(Stealth, PathZeroPattern) {
  const Graph g = path3();
  const auto spec = feasibility(g, {0}).spec;
  const auto attack = build_stealth(g, spec, assemble_gain_matrix(g), Rational(1, 2));
  EXPECT_EQ(attack.s[1], attack.s[2]);
  EXPECT_EQ(attack.a[2], 0);  // vertex 3
  EXPECT_EQ(attack.a[4], 0);  // edge (2,3)
  EXPECT_EQ(attack.support, (std::vector<std::size_t>{1, 2, 4}));
}

TEST(Stealth, InfeasibleRejected) {
  const Graph g(3, {{1, 2, Rational(1)}, {2, 3, Rational(1)}, {1, 3, Rational(1)}});
  try {
    build_stealth(g, feasibility(g, {0}).spec, assemble_gain_matrix(g), Rational(1, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InfeasibleSpec);
  }
}

TEST(Stealth, RootsAreSkipped) {
  // Vertex 2 (component 1) has one F-edge to component 0 and two to
  // component 2, so a_2 = (l - 1) + 2 (l - l^2) = -(l - 1)(2 l - 1)
  // vanishes at lambda = 1/2.
  const Graph g(4, {{1, 2, Rational(1)}, {2, 3, Rational(1)}, {2, 4, Rational(1)}, {3, 4, Rational(1)}});
  const auto spec = feasibility(g, {0, 1, 2}).spec;
  ASSERT_EQ(spec.k, 3u);
  const auto attack = build_stealth(g, spec, assemble_gain_matrix(g), Rational(1, 2));
  EXPECT_EQ(attack.rejected, (std::vector<Rational>{Rational(1, 2)}));
  EXPECT_EQ(attack.lambda, Rational(1, 4));
  EXPECT_EQ(attack.support, required_support(g, spec));
}

TEST(Stealth, ColoredMatchesBasicForIdentityColouring) {
  const Graph g = unit_path(4);
  const auto spec = feasibility(g, all_edges(g)).spec;
  const auto h = assemble_gain_matrix(g);
  Coloring identity;
  for (std::size_t i = 0; i < spec.k; ++i) identity.colors.push_back(static_cast<int>(i) + 1);
  identity.count = static_cast<int>(spec.k);
  EXPECT_EQ(build_stealth_colored(g, spec, h, identity, Rational(1, 3)).s, build_stealth(g, spec, h, Rational(1, 3)).s);
}

TEST(Stealth, ImproperColouringRejected) {
  const Graph g = unit_path(3);
  const auto spec = feasibility(g, all_edges(g)).spec;
  Coloring bad{{1, 1, 2}, 2, false};
  try {
    build_stealth_colored(g, spec, assemble_gain_matrix(g), bad, Rational(1, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ImproperColoring);
  }
}

TEST(Variation, Examples) {
  const Graph g2(2, {{1, 2, Rational(1)}});
  EXPECT_EQ(variation_ratio(g2, {1, Rational(3, 7)}, {0}), 1);
  // Three components in a row, F also containing the long edge.
  const Graph g = Graph::from_pairs(3, {{1, 2}, {2, 3}, {1, 3}});
  const Rational l(9, 10);
  EXPECT_EQ(variation_ratio(g, {1, l, l * l}, {0, 1, 2}), Rational(19, 9));
  EXPECT_EQ(power_ratio_bound(3, l), Rational(19, 9));
  EXPECT_THROW(variation_ratio(g, {1, l, l * l}, {}), Error);
}

TEST(Variation, PointwiseRatioOfPowerConstructionExceedsLimit) {
  // The ratio approaches c - 1 from above.
  for (int c = 3; c <= 6; ++c)
    for (int q = 1; q < 20; ++q) {
      const Rational l(q, 20);
      EXPECT_GT(power_ratio_bound(c, l), c - 1);
    }
}

TEST(Schedule, KTwoIsExactlyOneAtFirstLambda) {
  const Graph g(2, {{1, 2, Rational(1)}});
  const auto spec = feasibility(g, {0}).spec;
  const auto r = variation_limit_schedule(g, spec, assemble_gain_matrix(g), identity_exponents(spec), Rational(1, 100));
  EXPECT_EQ(r.ratio, 1);
  EXPECT_EQ(r.history.size(), 1u);
}

TEST(Schedule, TriangleOfComponentsConvergesToTwo) {
  const Graph g(3, {{1, 2, Rational(1)}, {2, 3, Rational(1)}, {1, 3, Rational(1)}});
  const auto spec = feasibility(g, {0, 1, 2}).spec;
  const auto r = variation_limit_schedule(g, spec, assemble_gain_matrix(g), identity_exponents(spec), Rational(1, 100));
  EXPECT_EQ(r.limit, 2);
  EXPECT_LE(abs(r.ratio - 2), Rational(1, 100));
  EXPECT_GE(r.ratio, 2);
}

TEST(Schedule, ColouredOddCycleHasThreeLevels) {
  std::vector<Edge> edges;
  for (int i = 1; i <= 5; ++i) edges.push_back({i, i % 5 + 1, Rational(1)});
  const Graph g(5, edges);
  const auto spec = feasibility(g, all_edges(g)).spec;
  const auto colors = color_assignment(component_graph(spec));
  const auto exps = color_exponents(spec, colors);
  EXPECT_EQ(distinct_levels(exps), 3);
  const auto r = variation_limit_schedule(g, spec, assemble_gain_matrix(g), exps, Rational(1, 100));
  EXPECT_EQ(r.limit, 2);
}

TEST(Schedule, BipartiteComponentGraphHasLimitOne) {
  std::vector<Edge> edges;
  for (int i = 1; i <= 6; ++i) edges.push_back({i, i % 6 + 1, Rational(1)});
  const Graph g(6, edges);
  const auto spec = feasibility(g, all_edges(g)).spec;
  const auto exps = color_exponents(spec, color_assignment(component_graph(spec)));
  EXPECT_EQ(distinct_levels(exps), 2);
  const auto r = variation_limit_schedule(g, spec, assemble_gain_matrix(g), exps, Rational(1, 100));
  EXPECT_EQ(r.ratio, 1);
}

TEST(Robust, FormulaValues) {
  const Graph g = unit_path(3).topology();
  const auto spec = feasibility(g, {0, 1}).spec;
  const auto r = build_robust_stealth(g, spec, 1, 2);
  EXPECT_EQ(r.lambda_threshold, 13);
  EXPECT_EQ(r.lambda, 13);
  EXPECT_FALSE(r.raised);
  const auto u = build_robust_stealth(g, spec, 3, 3);
  EXPECT_EQ(u.lambda, 2 * 3 + 1);
  try {
    build_robust_stealth(g, spec, 2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadBounds);
  }
}

TEST(Robust, AuditHoldsOnSampledGains) {
  const Graph g = unit_path(4).topology();
  const auto spec = feasibility(g, {0, 1, 2}).spec;
  const auto r = build_robust_stealth(g, spec, 1, 2);
  const auto audit = audit_robust(g, spec, r.s, 1, 2, 100, testkit::seed(62));
  EXPECT_EQ(audit.boundary_failures, 0u);
  EXPECT_EQ(audit.support_failures, 0u);
  EXPECT_GE(audit.min_boundary, Rational(1, 2));
}

// One vertex with many F-edges into a lower component: the closed-form
// threshold leaves a gain assignment with a_l = 0, so lambda is raised.
TEST(Robust, ManyLowerEdgesForceRaise) {
  // Component 0 = {1..7} (a star at 1), component 1 = {8}, component 2 = {9}.
  std::vector<std::pair<int, int>> pairs{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}};
  for (int i = 1; i <= 7; ++i) pairs.emplace_back(i, 8);
  pairs.emplace_back(8, 9);
  const Graph g = Graph::from_pairs(9, pairs);
  EdgeSet f;
  for (EdgePos p = 6; p < g.edge_count(); ++p) f.push_back(p);
  const auto spec = feasibility(g, f).spec;
  ASSERT_TRUE(feasibility(g, f).feasible);
  ASSERT_EQ(spec.k, 3u);
  EXPECT_EQ(robust_worst_case(g, spec, identity_exponents(spec), 13, 1, 2), 0);
  const auto r = build_robust_stealth(g, spec, 1, 2);
  EXPECT_TRUE(r.raised);
  EXPECT_GT(r.lambda, 13);
  EXPECT_GE(r.worst_case, Rational(1, 2));
  const auto audit = audit_robust(g, spec, r.s, 1, 2, 100, testkit::seed(63));
  EXPECT_EQ(audit.boundary_failures, 0u);
  EXPECT_EQ(audit.support_failures, 0u);
}

TEST(Theta, Examples) {
  const Graph g2(2, {{1, 2, Rational(1)}});
  EXPECT_EQ(theta_oracle(g2, feasibility(g2, {0}).spec, assemble_gain_matrix(g2)).best, 1);

  std::vector<Edge> edges;
  for (int i = 1; i <= 4; ++i) edges.push_back({i, i % 4 + 1, Rational(1)});
  const Graph c4(4, edges);
  const auto spec = feasibility(c4, all_edges(c4)).spec;
  EXPECT_EQ(theta_oracle(c4, spec, assemble_gain_matrix(c4)).best, 1);

  const Graph tri(3, {{1, 2, Rational(1)}, {2, 3, Rational(1)}, {1, 3, Rational(1)}});
  // Values a < b < c: the middle one may not be the midpoint (its boundary
  // entry would vanish), so the best grid ratio is (x + y) / min(x, y) with
  // x != y and x + y <= grid.
  const auto t = theta_oracle(tri, feasibility(tri, {0, 1, 2}).spec, assemble_gain_matrix(tri), 200);
  EXPECT_EQ(t.best, Rational(199, 99));
}
