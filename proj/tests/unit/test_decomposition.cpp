#include <gtest/gtest.h>

#include <random>

#include "idiag/decomposition.hpp"
#include "idiag/error.hpp"
#include "idiag/measures.hpp"
#include "oracles.hpp"

using namespace idiag;

namespace {

Diagram D(std::vector<Vector> rows) { return make_diagram(rows); }

bool same_pair(const Decomposable& d, const Diagram& a, const Diagram& b) {
  return (d.left == a && d.right == b) || (d.left == b && d.right == a);
}

Diagram random_lattice_diagram(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(1, 6);
  return make_diagram(oracle::from_p2(oracle::random_lattice_points(rng, count(rng), 5)));
}

}  // namespace

TEST(SummandOf, SpecExamples) {
  SummandSystem s(D({{3, 0}, {1, 1}, {0, 2}}));
  // vertices are sorted: (0,2), (1,1), (3,0); propagate from the middle vertex
  Vector t(s.num_edges());
  for (std::size_t e = 0; e < s.num_edges(); ++e) {
    const auto& edge = s.graph().edges[e];
    const bool touches_origin_side = s.base().generators()[edge.first] == Point(Vector{3, 0}) ||
                                     s.base().generators()[edge.second] == Point(Vector{3, 0});
    t[e] = touches_origin_side ? 1 : 0;
  }
  auto a = s.propagate(1, {0, 1}, t);
  ASSERT_TRUE(a);
  EXPECT_EQ(summand_of(s, *a), D({{2, 0}, {0, 1}}));
  EXPECT_EQ(s.cosummand(*a), D({{1, 0}, {0, 1}}));

  EXPECT_EQ(summand_of(s, s.homothetic_assignment(0, {0, 0})), D({{0, 0}}));
  EXPECT_EQ(summand_of(s, s.homothetic_assignment(1, {0, 0})), s.base());

  Assignment bad = s.homothetic_assignment(1, {0, 0});
  bad.u[0][0] += 1;
  try {
    summand_of(s, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InfeasibleAssignment);
  }
}

TEST(SummandSystem, DualityAndHomothetyClosure) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    Diagram g = random_lattice_diagram(rng);
    SummandSystem s(g);
    // a random feasible point: LP optimum of a random objective
    auto problem = s.constraints();
    std::uniform_int_distribution<int> c(-3, 3);
    problem.objective.assign(s.num_variables(), 0);
    for (auto& x : problem.objective) x = c(rng);
    auto sol = lp::solve(problem);
    ASSERT_EQ(sol.status, lp::Status::Optimal);
    Assignment a = s.assignment_from(sol.x);
    ASSERT_TRUE(s.is_feasible(a));
    EXPECT_EQ(minkowski_sum(summand_of(s, a), s.cosummand(a)), g);

    const Rational lambda = Rational(1 + trial % 3) / 4;
    Assignment h = s.homothetic_assignment(lambda, Vector(2, 0));
    EXPECT_TRUE(s.is_feasible(h));
    EXPECT_TRUE(s.in_h1(h));
    EXPECT_TRUE(s.in_h2(s.complement(h)));
  }
}

TEST(Verify, SpecExamples) {
  EXPECT_TRUE(verify_decomposition(D({{3, 0}, {1, 1}, {0, 2}}), D({{1, 0}, {0, 1}}), D({{2, 0}, {0, 1}})));
  EXPECT_FALSE(verify_decomposition(D({{2, 0}, {0, 2}}), D({{1, 0}, {0, 1}}), D({{1, 0}, {0, 1}})));
  EXPECT_TRUE(verify_decomposition(D({{1, 1}}), D({{1, 0}}), D({{0, 1}})));
  // one homothetic part is not enough
  EXPECT_FALSE(verify_decomposition(D({{2, 1}, {1, 2}}), D({{1, 1}}), D({{1, 0}, {0, 1}})) &&
               is_homothetic_to(D({{1, 0}, {0, 1}}), D({{2, 1}, {1, 2}})));
  EXPECT_FALSE(verify_decomposition(D({{2, 2}}), D({{2, 1}}), D({{0, 1}})));
}

TEST(Decide, SpecExamples) {
  auto c = decide_decomposability(D({{1, 0}, {0, 1}}));
  ASSERT_FALSE(is_decomposable(c));
  EXPECT_EQ(std::get<Indecomposable>(c).method, Method::SimplexFacet);
  EXPECT_FALSE(is_decomposable(decide_decomposability(D({{2, 0}, {0, 2}}))));

  c = decide_decomposability(D({{3, 0}, {1, 1}, {0, 2}}));
  ASSERT_TRUE(is_decomposable(c));
  EXPECT_TRUE(same_pair(std::get<Decomposable>(c), D({{1, 0}, {0, 1}}), D({{2, 0}, {0, 1}})));

  c = decide_decomposability(D({{1, 1}}));
  ASSERT_TRUE(is_decomposable(c));
  EXPECT_TRUE(same_pair(std::get<Decomposable>(c), D({{1, 0}}), D({{0, 1}})));

  c = decide_decomposability(D({{2, 1}, {1, 2}}));
  ASSERT_TRUE(is_decomposable(c));
  const auto& d = std::get<Decomposable>(c);
  EXPECT_TRUE(verify_decomposition(D({{2, 1}, {1, 2}}), d.left, d.right));
}

TEST(Decide, MixedSignWitnessForShiftedSegment) {
  Diagram g = D({{2, 1}, {1, 2}});
  Diagram left = D({{0, Rational(3, 2)}, {Rational(1, 2), 1}});
  Diagram right = D({{1, Rational(1, 2)}, {Rational(3, 2), 0}});
  EXPECT_TRUE(verify_decomposition(g, left, right));
  bool found_mixed = false;
  for (const auto& [a, b] : facet_pair_witnesses(g)) {
    EXPECT_TRUE(verify_decomposition(g, a, b));
    if (!a.is_lattice() || !b.is_lattice()) found_mixed = true;
  }
  EXPECT_TRUE(found_mixed);
}

TEST(Decide, DegenerateInputs) {
  EXPECT_FALSE(is_decomposable(decide_decomposability(D({{0, 0}}))));
  EXPECT_FALSE(is_decomposable(decide_decomposability(D({{3, 0}}))));
  EXPECT_TRUE(is_decomposable(decide_decomposability(D({{1, 0, 2}}))));
  // monomial factor times a simplex
  auto c = decide_decomposability(D({{3, 1}, {1, 2}}));
  ASSERT_TRUE(is_decomposable(c));
}

TEST(Decide, ForcedStrategies) {
  Diagram simplex = D({{2, 0}, {0, 3}});
  for (auto s : {Strategy::SimplexFacet, Strategy::TwoDimChain, Strategy::FacetPairLp})
    EXPECT_FALSE(is_decomposable(decide_decomposability(simplex, s)));
  try {
    decide_decomposability(D({{3, 0}, {1, 1}, {0, 2}}), Strategy::SimplexFacet);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
  }
  try {
    decide_decomposability(D({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), Strategy::TwoDimChain);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
  }
}

TEST(Decide, WeightedSimplicesAreIndecomposableOnBothPaths) {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + trial % 2;
    Diagram g = weighted_simplex(oracle::random_weight(rng, n));
    EXPECT_FALSE(is_decomposable(decide_decomposability(g)));
    EXPECT_FALSE(is_decomposable(decide_decomposability(g, Strategy::FacetPairLp)));
  }
}

TEST(Decide, ThreeDim) {
  // sum of two non-homothetic simplices
  Diagram a = D({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  Diagram b = D({{2, 0, 0}, {0, 1, 0}, {0, 0, 3}});
  Diagram g = minkowski_sum(a, b);
  auto c = decide_decomposability(g);
  ASSERT_TRUE(is_decomposable(c));
  const auto& d = std::get<Decomposable>(c);
  EXPECT_TRUE(verify_decomposition(g, d.left, d.right));
  // simplex with a monomial factor
  EXPECT_TRUE(is_decomposable(decide_decomposability(translate(a, Point(Vector{0, 0, 1})))));
}

TEST(Decide, ScaleInvariance) {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    Diagram g = random_lattice_diagram(rng);
    const Rational c = Rational(1 + trial % 5) / 3;
    EXPECT_EQ(is_decomposable(decide_decomposability(g)), is_decomposable(decide_decomposability(scale(g, c))));
  }
}

TEST(Decide, TwoDimAgreesWithGridOracleAndFacetPairPath) {
  std::mt19937 rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    Diagram g = random_lattice_diagram(rng);
    auto chain = decide_decomposability(g, Strategy::TwoDimChain);
    auto lp = decide_decomposability(g, Strategy::FacetPairLp);
    auto grid = oracle::grid_decomposition(oracle::to_p2(g));
    EXPECT_EQ(is_decomposable(chain), grid.has_value()) << to_string(g);
    EXPECT_EQ(is_decomposable(lp), grid.has_value()) << to_string(g);
    if (grid) {
      EXPECT_TRUE(verify_decomposition(g, make_diagram(oracle::from_p2(grid->left, 4)),
                                       make_diagram(oracle::from_p2(grid->right, 4))));
    }
  }
}

TEST(Classify, SpecExamples) {
  auto r = classify_extreme(parse_input(2, {"z1^3", "z1^2*z2", "z1*z2", "z2^2"}));
  EXPECT_EQ(r.verdict, Verdict::NotExtreme);
  ASSERT_TRUE(is_decomposable(r.certificate));
  EXPECT_TRUE(same_pair(std::get<Decomposable>(r.certificate), D({{1, 0}, {0, 1}}), D({{2, 0}, {0, 1}})));
  EXPECT_EQ(r.caveat, kHomogeneityCaveat);

  EXPECT_EQ(classify_extreme(parse_input(2, {"z1 + z2"})).verdict, Verdict::Extreme);
  EXPECT_EQ(classify_extreme(parse_input(2, {"z1*z2"})).verdict, Verdict::NotExtreme);
  EXPECT_EQ(to_string(Verdict::Extreme), "extreme");
  EXPECT_EQ(to_string(Method::FacetPairLp), "facet-pair-lp");
}
