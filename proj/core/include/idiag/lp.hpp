#pragma once

#include <cstddef>
#include <vector>

#include "idiag/rational.hpp"

/// Exact linear programming over the rationals: a dense two-phase tableau
/// simplex with Bland's rule, so it terminates on degenerate problems.
/// All variables are implicitly nonnegative.
namespace idiag::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
  Vector coeffs;
  Relation relation;
  Rational rhs;
};

struct Problem {
  std::size_t num_vars = 0;
  std::vector<Constraint> constraints;
  Vector objective;  // maximized; empty means pure feasibility

  explicit Problem(std::size_t n) : num_vars(n) {}

  void add(Vector coeffs, Relation relation, Rational rhs);
  void add_le(Vector coeffs, Rational rhs) { add(std::move(coeffs), Relation::LessEqual, std::move(rhs)); }
  void add_ge(Vector coeffs, Rational rhs) { add(std::move(coeffs), Relation::GreaterEqual, std::move(rhs)); }
  void add_eq(Vector coeffs, Rational rhs) { add(std::move(coeffs), Relation::Equal, std::move(rhs)); }
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational value;  // objective value when Optimal
  Vector x;        // a basic optimal (or feasible) point
};

Solution solve(const Problem& problem);

inline bool feasible(const Problem& problem) {
  Problem p = problem;
  p.objective.clear();
  return solve(p).status == Status::Optimal;
}

}  // namespace idiag::lp
