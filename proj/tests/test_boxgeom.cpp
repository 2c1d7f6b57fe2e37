#include <gtest/gtest.h>

#include "support.hpp"

using namespace minorkit;

namespace {

Box iv(int a, int b) { return Box({{a, b}}); }
Box rect(Rational x0, Rational x1, Rational y0, Rational y1) { return Box({{x0, x1}, {y0, y1}}); }

Representation interval_path() { return Representation(1, {iv(0, 2), iv(1, 4), iv(2, 5)}); }

Representation square_path() { return Representation(2, {rect(0, 2, 0, 2), rect(1, 5, 1, 3), rect(4, 6, 0, 2)}); }

Graph path3() { return Graph::from_pairs(3, {{1, 2}, {2, 3}}); }

}  // namespace

TEST(Intersects, Examples) {
  EXPECT_TRUE(intersects(iv(0, 2), iv(1, 4)));
  EXPECT_TRUE(intersects(iv(0, 2), iv(2, 5)));
  EXPECT_FALSE(intersects(rect(0, 1, 0, 1), rect(2, 3, 0, 1)));
  EXPECT_THROW(intersects(iv(0, 1), rect(0, 1, 0, 1)), Error);
}

TEST(VerifyC1, IntervalPathTouchIsViolation) {
  const auto r = verify_c1(path3(), interval_path());
  EXPECT_FALSE(r.ok);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0], std::make_pair(1, 3));
}

TEST(VerifyC1, SquarePathPasses) { EXPECT_TRUE(verify_c1(path3(), square_path()).ok); }

TEST(VerifyC1, SingleVertex) { EXPECT_TRUE(verify_c1(Graph::from_pairs(1, {}), Representation(2, {rect(0, 1, 0, 1)})).ok); }

TEST(VerifyC1, VertexMismatch) {
  try {
    verify_c1(Graph::from_pairs(2, {{1, 2}}), Representation(1, {iv(0, 1)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VertexMismatch);
  }
}

TEST(BoundaryCovered, Examples) {
  EXPECT_FALSE(boundary_covered(1, Representation(2, {rect(0, 2, 0, 2)})));
  EXPECT_TRUE(boundary_covered(1, Representation(2, {rect(0, 2, 0, 2), rect(-1, 3, -1, 3)})));
  EXPECT_TRUE(boundary_covered(2, interval_path()));
  EXPECT_FALSE(boundary_covered(1, interval_path()));
  EXPECT_FALSE(boundary_covered(3, interval_path()));
}

TEST(BoundaryCovered, FacetCoveredByTwoHalves) {
  // Box [0,2]^2 whose four facets are covered by four overlapping strips.
  const Representation rep(2, {rect(0, 2, 0, 2), rect(-1, 1, -1, 3), rect(1, 3, -1, 3), rect(-1, 3, -1, Rational(1, 2)),
                               rect(-1, 3, Rational(3, 2), 3)});
  EXPECT_TRUE(boundary_covered(1, rep));
  // Leave a hairline gap on the right facet.
  const Representation gap(2, {rect(0, 2, 0, 2), rect(-1, 1, -1, 3), rect(Rational(1, 1000) + 2, 3, -1, 3),
                               rect(-1, 3, -1, Rational(1, 2)), rect(-1, 3, Rational(3, 2), 3)});
  const auto p = exposed_boundary_point(1, gap);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ((*p)[0], 2);
}

TEST(VerifyC2, IntervalPathFailsForVertex2) {
  const auto r = verify_c2(path3(), interval_path());
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.covered, std::vector<int>{2});
}

TEST(VerifyC2, SquarePathPassesWithOuterWitnesses) {
  const Representation rep = square_path();
  const auto r = verify_c2(path3(), rep);
  ASSERT_TRUE(r.ok);
  for (int v = 1; v <= 3; ++v) {
    ASSERT_TRUE(r.witnesses[v - 1].has_value());
    Representation with = rep;
    with.set_witness(v, *r.witnesses[v - 1]);
    EXPECT_TRUE(check_witness(v, with)) << v;
  }
}

TEST(VerifyC2, BadStoredWitnessFallsBackToSweep) {
  Representation rep = square_path();
  rep.set_witness(2, {{3, 2}, Rational(1, 4)});  // interior point
  const auto r = verify_c2(path3(), rep);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.rejected_witnesses, std::vector<int>{2});
}

TEST(CheckWitness, Examples) {
  Representation lone(2, {rect(0, 1, 0, 1)});
  lone.set_witness(1, {{0, 0}, 1});
  EXPECT_TRUE(check_witness(1, lone));
  lone.set_witness(1, {{Rational(1, 2), Rational(1, 2)}, Rational(1, 10)});
  EXPECT_FALSE(check_witness(1, lone));

  Representation two(2, {rect(0, 2, 0, 2), rect(1, 3, 1, 3)});
  two.set_witness(1, {{2, Rational(3, 2)}, Rational(1, 10)});
  EXPECT_FALSE(check_witness(1, two));
  two.set_witness(1, {{0, 0}, Rational(1, 10)});
  EXPECT_TRUE(check_witness(1, two));
  // A cube that reaches the other box is rejected even from a free point.
  two.set_witness(1, {{2, Rational(1, 2)}, Rational(3, 2)});
  EXPECT_FALSE(check_witness(1, two));
}

TEST(CheckWitness, MissingWitness) {
  const Representation rep(1, {iv(0, 1)});
  try {
    check_witness(1, rep);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingWitness);
  }
}

TEST(Representation, RejectsDegenerateBoxes) {
  EXPECT_THROW(Representation(1, {iv(1, 1)}), Error);
  EXPECT_THROW(Representation(2, {iv(0, 1)}), Error);
}

namespace {

Representation random_config(std::mt19937_64& rng, std::size_t d, int count) {
  std::vector<Box> boxes;
  for (int b = 0; b < count; ++b) {
    std::vector<Interval> ivs;
    for (std::size_t i = 0; i < d; ++i) {
      const int a = testkit::uniform(rng, 0, 6);
      ivs.push_back({Rational(a, 2), Rational(a + testkit::uniform(rng, 1, 5), 2)});
    }
    boxes.emplace_back(std::move(ivs));
  }
  return Representation(d, std::move(boxes));
}

Representation transformed(const Representation& rep, const std::vector<std::size_t>& perm, const Rational& shift) {
  std::vector<Box> boxes;
  for (const Box& b : rep.boxes) {
    std::vector<Interval> ivs;
    for (std::size_t i = 0; i < rep.dim; ++i) ivs.push_back({b[perm[i]].lo + shift, b[perm[i]].hi + shift});
    boxes.emplace_back(std::move(ivs));
  }
  return Representation(rep.dim, std::move(boxes));
}

}  // namespace

TEST(Coverage, InvariantUnderTranslationAndAxisPermutation) {
  std::mt19937_64 rng(testkit::seed(31));
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t d = static_cast<std::size_t>(testkit::uniform(rng, 1, 3));
    const Representation rep = random_config(rng, d, testkit::uniform(rng, 2, 7));
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Representation moved = transformed(rep, perm, Rational(testkit::uniform(rng, -20, 20), 3));
    for (int v = 1; v <= rep.vertex_count(); ++v) EXPECT_EQ(boundary_covered(v, rep), boundary_covered(v, moved));
  }
}

TEST(Coverage, ExposedPointIsGenuine) {
  std::mt19937_64 rng(testkit::seed(32));
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = static_cast<std::size_t>(testkit::uniform(rng, 1, 3));
    const Representation rep = random_config(rng, d, testkit::uniform(rng, 2, 8));
    for (int v = 1; v <= rep.vertex_count(); ++v) {
      const auto p = exposed_boundary_point(v, rep);
      if (!p) continue;
      EXPECT_TRUE(rep.box(v).on_boundary(*p));
      for (int u = 1; u <= rep.vertex_count(); ++u)
        if (u != v) {
          EXPECT_FALSE(rep.box(u).contains(*p));
        }
      Representation with = rep;
      with.set_witness(v, {*p, safe_radius(v, *p, rep)});
      EXPECT_TRUE(check_witness(v, with));
    }
  }
}

// (c2) for v depends only on boxes that meet box v.
TEST(Coverage, FarBoxesAreIrrelevant) {
  std::mt19937_64 rng(testkit::seed(33));
  for (int trial = 0; trial < 100; ++trial) {
    const Representation rep = random_config(rng, 2, testkit::uniform(rng, 2, 6));
    std::vector<Box> boxes = rep.boxes;
    boxes.push_back(rect(100, 101, 100, 101));
    const Representation more(2, boxes);
    for (int v = 1; v <= rep.vertex_count(); ++v) EXPECT_EQ(boundary_covered(v, rep), boundary_covered(v, more));
  }
}

TEST(Coverage, BudgetExceededIsReported) {
  std::vector<Box> boxes{Box({{0, 10}, {0, 10}, {0, 10}})};
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) boxes.push_back(Box({{i, i + 1}, {j, j + 1}, {-1, 11}}));
  const Representation rep(3, boxes);
  try {
    exposed_boundary_point(1, rep, {5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}
