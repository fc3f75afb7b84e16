#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "idiag/diagram.hpp"
#include "idiag/error.hpp"
#include "oracles.hpp"

using namespace idiag;

namespace {

Diagram D(std::vector<Vector> rows) { return make_diagram(rows); }

std::vector<Vector> gens(const Diagram& g) {
  std::vector<Vector> out;
  for (const auto& p : g.generators()) out.push_back(p.coords());
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no idiag::Error thrown";
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST(Canonicalize, SpecExamples) {
  EXPECT_EQ(gens(D({{3, 0}, {2, 1}, {2, 0}, {1, 1}, {0, 2}})), (std::vector<Vector>{{0, 2}, {2, 0}}));
  EXPECT_EQ(gens(D({{1, 2}})), (std::vector<Vector>{{1, 2}}));
  EXPECT_EQ(gens(D({{3, 0}, {2, 1}, {1, 1}, {0, 2}})), (std::vector<Vector>{{0, 2}, {1, 1}, {3, 0}}));
}

TEST(Canonicalize, Errors) {
  EXPECT_EQ(code_of([] { canonicalize(2, {}); }), ErrorCode::EmptyInput);
  EXPECT_EQ(code_of([] { Point(Vector{1, -1}); }), ErrorCode::NegativeCoordinate);
  EXPECT_EQ(code_of([] { D({{1, 0}, {1, 0, 0}}); }), ErrorCode::DimensionMismatch);
}

TEST(Canonicalize, IdempotentOrderInvariantAndAgreesWithLpOracle) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 4;
    std::uniform_int_distribution<int> coord(0, 10), count(1, 7);
    std::vector<Vector> raw(static_cast<std::size_t>(count(rng)));
    for (auto& v : raw)
      for (std::size_t k = 0; k < n; ++k) v.push_back(coord(rng));
    Diagram g = make_diagram(raw);
    auto shuffled = raw;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(make_diagram(shuffled), g);
    EXPECT_EQ(make_diagram(gens(g)), g);
    // every raw point is in the hull; no generator is in the hull of the others
    for (const auto& p : raw) EXPECT_TRUE(oracle::lp_member(gens(g), p));
    auto vs = gens(g);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      auto rest = vs;
      rest.erase(rest.begin() + static_cast<long>(i));
      if (!rest.empty()) EXPECT_FALSE(oracle::lp_member(rest, vs[i]));
    }
  }
}

TEST(Contains, SpecExamples) {
  Diagram g = D({{2, 0}, {0, 2}});
  EXPECT_TRUE(contains(g, Point(Vector{1, 1})));
  EXPECT_TRUE(contains(g, Point(Vector{5, 7})));
  EXPECT_FALSE(contains(g, Point(Vector{1, 0})));
  EXPECT_EQ(code_of([&] { contains(g, Point(Vector{1, 1, 1})); }), ErrorCode::DimensionMismatch);
}

TEST(SupportValue, SpecExamples) {
  EXPECT_EQ(support_value(D({{2, 0}, {0, 2}}), {-1, -1}), -2);
  EXPECT_EQ(support_value(D({{3, 0}, {1, 1}, {0, 2}}), {-1, -2}), -3);
  EXPECT_EQ(support_value(D({{3, 0}, {1, 1}, {0, 2}}), {0, 0}), 0);
  EXPECT_EQ(code_of([] { support_value(D({{1, 0}}), {1, -1}); }), ErrorCode::PositiveDirection);
}

TEST(Lelong, SpecExamples) {
  EXPECT_EQ(lelong_directional(D({{2, 0}, {0, 2}}), Weight({1, 1})), 2);
  EXPECT_EQ(lelong_directional(D({{3, 0}, {1, 1}, {0, 2}}), Weight({1, 1})), 2);
  EXPECT_EQ(lelong_directional(D({{0, 0, 0}}), Weight({3, 1, 2})), 0);
  EXPECT_EQ(code_of([] { Weight({1, 0}); }), ErrorCode::NonpositiveWeight);
}

TEST(MinkowskiSum, SpecExamples) {
  EXPECT_EQ(minkowski_sum(D({{1, 0}, {0, 1}}), D({{2, 0}, {0, 1}})), D({{3, 0}, {1, 1}, {0, 2}}));
  Diagram g = D({{3, 0}, {1, 1}, {0, 2}});
  EXPECT_EQ(minkowski_sum(g, D({{0, 0}})), g);
  EXPECT_EQ(minkowski_sum(D({{2, 0}, {0, 2}}), D({{2, 0}, {0, 2}})), D({{4, 0}, {0, 4}}));
  EXPECT_EQ(code_of([&] { minkowski_sum(g, D({{1, 1, 1}})); }), ErrorCode::DimensionMismatch);
}

TEST(MinkowskiSum, SupportAdditivityAssociativityCommutativity) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(0, 6), neg(-5, 0);
  auto random_diagram = [&](std::size_t n) {
    std::vector<Vector> raw(4);
    for (auto& v : raw)
      for (std::size_t k = 0; k < n; ++k) v.push_back(coord(rng));
    return make_diagram(raw);
  };
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 2;
    Diagram a = random_diagram(n), b = random_diagram(n), c = random_diagram(n);
    EXPECT_EQ(minkowski_sum(a, b), minkowski_sum(b, a));
    EXPECT_EQ(minkowski_sum(minkowski_sum(a, b), c), minkowski_sum(a, minkowski_sum(b, c)));
    for (int s = 0; s < 5; ++s) {
      Vector t;
      for (std::size_t k = 0; k < n; ++k) t.push_back(neg(rng));
      EXPECT_EQ(support_value(minkowski_sum(a, b), t), support_value(a, t) + support_value(b, t));
      EXPECT_EQ(support_value(hull_union(a, b), t), std::max(support_value(a, t), support_value(b, t)));
    }
  }
}

TEST(MinkowskiSum, AgreesWithTwoDimOracle) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    auto pa = oracle::random_lattice_points(rng, 4, 6), pb = oracle::random_lattice_points(rng, 3, 6);
    Diagram a = make_diagram(oracle::from_p2(pa)), b = make_diagram(oracle::from_p2(pb));
    EXPECT_EQ(oracle::to_p2(a), oracle::staircase(pa));
    EXPECT_EQ(oracle::to_p2(minkowski_sum(a, b)), oracle::minkowski(oracle::staircase(pa), oracle::staircase(pb)));
  }
}

TEST(Scale, SpecExamples) {
  EXPECT_EQ(scale(D({{1, 0}, {0, 1}}), 2), D({{2, 0}, {0, 2}}));
  Diagram g = D({{3, 0}, {1, 1}, {0, 2}});
  EXPECT_EQ(scale(g, 1), g);
  EXPECT_EQ(gens(scale(g, Rational(1, 3))),
            (std::vector<Vector>{{0, Rational(2, 3)}, {Rational(1, 3), Rational(1, 3)}, {1, 0}}));
  EXPECT_EQ(code_of([&] { scale(g, 0); }), ErrorCode::NonpositiveScale);
  EXPECT_EQ(lelong_directional(scale(g, Rational(5, 2)), Weight({1, 3})),
            Rational(5, 2) * lelong_directional(g, Weight({1, 3})));
}

TEST(Translate, SpecExamples) {
  EXPECT_EQ(translate(D({{1, 0}, {0, 1}}), Point(Vector{1, 1})), D({{2, 1}, {1, 2}}));
  Diagram g = D({{3, 0}, {1, 1}, {0, 2}});
  EXPECT_EQ(translate(g, Point::zero(2)), g);
  EXPECT_EQ(translate(D({{0, 0}}), Point(Vector{2, 3})), D({{2, 3}}));
}

TEST(Homothety, SpecExamples) {
  auto w = is_homothetic_to(D({{2, 0}, {0, 2}}), D({{1, 0}, {0, 1}}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->c, 2);
  EXPECT_EQ(w->x, Point::zero(2));
  w = is_homothetic_to(D({{2, 1}, {1, 2}}), D({{1, 0}, {0, 1}}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->c, 1);
  EXPECT_EQ(w->x, Point(Vector{1, 1}));
  EXPECT_FALSE(is_homothetic_to(D({{1, 0}, {0, 1}}), D({{2, 1}, {1, 2}})));
  EXPECT_FALSE(is_homothetic_to(D({{3, 0}, {1, 1}, {0, 2}}), D({{1, 0}, {0, 1}})));
}

TEST(Homothety, WitnessReproducesSetAndMatchesOracle) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto pa = oracle::random_lattice_points(rng, 3, 5), pb = oracle::random_lattice_points(rng, 3, 5);
    Diagram a = make_diagram(oracle::from_p2(pa)), b = make_diagram(oracle::from_p2(pb));
    auto w = is_homothetic_to(a, b);
    EXPECT_EQ(w.has_value(), oracle::homothetic(oracle::staircase(pa), oracle::staircase(pb)));
    if (w) EXPECT_EQ(translate(scale(b, w->c), w->x), a);
  }
}

TEST(HullUnion, SpecExamples) {
  EXPECT_EQ(hull_union(D({{2, 0}}), D({{0, 2}})), D({{2, 0}, {0, 2}}));
  Diagram g = D({{3, 0}, {1, 1}, {0, 2}});
  EXPECT_EQ(hull_union(g, g), g);
  EXPECT_EQ(hull_union(D({{1, 0}, {0, 1}}), D({{2, 0}, {0, 1}})), D({{1, 0}, {0, 1}}));
}

TEST(CompactGraph, SpecExamples) {
  auto graph = compact_graph(D({{3, 0}, {1, 1}, {0, 2}}));
  ASSERT_EQ(graph.edges.size(), 2u);
  EXPECT_EQ(compact_graph(D({{2, 0}, {0, 2}})).edges.size(), 1u);
  EXPECT_TRUE(compact_graph(D({{1, 1}})).edges.empty());
}

TEST(CompactGraph, TwoDimEdgesAreConsecutiveChainPairs) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto pts = oracle::random_lattice_points(rng, 6, 8);
    auto chain = oracle::staircase(pts);
    Diagram g = make_diagram(oracle::from_p2(pts));
    auto graph = compact_graph(g);
    std::set<std::pair<Point, Point>> got, expected;
    for (const auto& e : graph.edges) got.insert(std::minmax(graph.vertices[e.first], graph.vertices[e.second]));
    auto vs = oracle::from_p2(chain);
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) expected.insert(std::minmax(Point(vs[i]), Point(vs[i + 1])));
    EXPECT_EQ(got, expected);
  }
}

TEST(CompactGraph, ThreeDimSimplexHasTriangle) {
  auto graph = compact_graph(D({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(graph.edges.size(), 3u);
  // a vertex off the axes lying above the simplex adds a vertex and three edges
  auto graph2 = compact_graph(D({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {Rational(1, 2), Rational(1, 2), Rational(1, 2)}}));
  EXPECT_EQ(graph2.edges.size(), 6u);
}

TEST(TouchesAllAxes, SpecExamples) {
  EXPECT_TRUE(touches_all_axes(D({{2, 0}, {0, 2}})));
  EXPECT_FALSE(touches_all_axes(D({{1, 1}})));
  EXPECT_TRUE(touches_all_axes(D({{3, 0}, {1, 1}, {0, 2}})));
}

TEST(HomothetyRepresentative, NormalizesClass) {
  EXPECT_EQ(homothety_representative(D({{2, 0}, {0, 2}})), D({{1, 0}, {0, 1}}));
  EXPECT_EQ(homothety_representative(D({{3, 1}, {1, 2}})), homothety_representative(D({{4, 0}, {0, 2}})));
  EXPECT_EQ(monomial_part(D({{3, 1}, {1, 2}})), Point(Vector{1, 1}));
}
