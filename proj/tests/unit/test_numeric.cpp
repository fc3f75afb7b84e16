#include <gtest/gtest.h>

#include "idiag/error.hpp"
#include "idiag/linalg.hpp"
#include "idiag/lp.hpp"
#include "idiag/polyhedron.hpp"
#include "idiag/rational.hpp"

using namespace idiag;

namespace {

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

TEST(Rational, ParseAndPrintCanonical) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-3")), "-3");
  EXPECT_EQ(to_string(parse_rational("0/7")), "0");
  EXPECT_EQ(code_of([] { parse_rational("1/0"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_rational("1.5"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_rational(""); }), ErrorCode::SyntaxError);
}

TEST(Rational, VectorRoundTrip) {
  Vector v = parse_vector("1, -2/3,0");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[1], Rational(-2, 3));
  EXPECT_EQ(to_string(v), "(1, -2/3, 0)");
  EXPECT_EQ(dot(v, Vector{3, 3, 5}), 1);
}

TEST(Linalg, DeterminantRankInverse) {
  linalg::Matrix m{{2, 1}, {1, 1}};
  EXPECT_EQ(linalg::determinant(m), 1);
  auto inv = linalg::inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(linalg::multiply(*inv, Vector{3, 2}), (Vector{1, 1}));
  linalg::Matrix singular{{1, 2}, {2, 4}};
  EXPECT_EQ(linalg::rank(singular), 1u);
  EXPECT_FALSE(linalg::inverse(singular));
  EXPECT_EQ(linalg::determinant(singular), 0);
}

TEST(Linalg, NullspaceAnnihilates) {
  linalg::Matrix m{{1, 1, 1}, {0, 1, 2}};
  auto ns = linalg::nullspace(m, 3);
  ASSERT_EQ(ns.size(), 1u);
  for (const auto& row : m) EXPECT_EQ(dot(row, ns[0]), 0);
  EXPECT_EQ(linalg::affine_dimension({{0, 0}, {1, 1}, {2, 2}}), 1);
  EXPECT_EQ(linalg::affine_dimension({{0, 0}, {1, 0}, {0, 1}}), 2);
}

TEST(Lp, OptimalVertex) {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6
  lp::Problem p(2);
  p.add_le({1, 2}, 4);
  p.add_le({3, 1}, 6);
  p.objective = {1, 1};
  auto s = lp::solve(p);
  ASSERT_EQ(s.status, lp::Status::Optimal);
  EXPECT_EQ(s.value, Rational(14, 5));
  EXPECT_EQ(s.x, (Vector{Rational(8, 5), Rational(6, 5)}));
}

TEST(Lp, InfeasibleAndUnbounded) {
  lp::Problem infeasible(1);
  infeasible.add_ge({1}, 3);
  infeasible.add_le({1}, 2);
  EXPECT_EQ(lp::solve(infeasible).status, lp::Status::Infeasible);

  lp::Problem unbounded(2);
  unbounded.add_ge({1, -1}, 0);
  unbounded.objective = {1, 0};
  EXPECT_EQ(lp::solve(unbounded).status, lp::Status::Unbounded);
}

TEST(Lp, DegenerateCyclingExampleTerminates) {
  // Beale's example cycles under the textbook rule
  lp::Problem p(4);
  p.add_le({Rational(1, 4), -8, -1, 9}, 0);
  p.add_le({Rational(1, 2), -12, Rational(-1, 2), 3}, 0);
  p.add_le({0, 0, 1, 0}, 1);
  p.objective = {Rational(3, 4), -20, Rational(1, 2), -6};
  auto s = lp::solve(p);
  ASSERT_EQ(s.status, lp::Status::Optimal);
  EXPECT_EQ(s.value, Rational(5, 4));
}

TEST(Lp, RedundantEqualities) {
  lp::Problem p(2);
  p.add_eq({1, 1}, 2);
  p.add_eq({2, 2}, 4);
  p.objective = {1, 0};
  auto s = lp::solve(p);
  ASSERT_EQ(s.status, lp::Status::Optimal);
  EXPECT_EQ(s.value, 2);
}

TEST(Polyhedron, UnitCubeVerticesAndVolume) {
  std::vector<geometry::HalfSpace> cube;
  for (std::size_t k = 0; k < 3; ++k) {
    Vector e(3, 0);
    e[k] = 1;
    cube.push_back({e, 0});
    e[k] = -1;
    cube.push_back({e, -2});
  }
  auto vertices = geometry::polytope_vertices(cube, 3);
  EXPECT_EQ(vertices.size(), 8u);
  EXPECT_EQ(geometry::polytope_volume(vertices, cube), 8);
}

TEST(Polyhedron, SimplexVolumeAndUnbounded) {
  EXPECT_EQ(geometry::simplex_normalized_volume({{0, 0, 0}, {1, 0, 0}, {0, 2, 0}, {0, 0, 3}}), 6);
  std::vector<geometry::HalfSpace> orthant{{{1, 0}, 0}, {{0, 1}, 0}};
  EXPECT_EQ(code_of([&] { geometry::polytope_vertices(orthant, 2); }), ErrorCode::Unbounded);
}

TEST(Polyhedron, ExtremeRaysOfOrthantAndPrimitive) {
  auto rays = geometry::extreme_rays({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(rays.size(), 3u);
  Vector v{Rational(2, 3), Rational(4, 3)};
  geometry::make_primitive(v);
  EXPECT_EQ(v, (Vector{1, 2}));
}
