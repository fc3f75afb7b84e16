#pragma once

#include <ostream>

#include "idiag/diagram.hpp"
#include "idiag/polynomial.hpp"
#include "idiag/rational.hpp"

namespace idiag {

/// n! Vol(R^n_+ \ G), or Infinite when that complement is unbounded.
class NewtonNumber {
 public:
  static NewtonNumber infinite() { return NewtonNumber(true, 0); }
  static NewtonNumber finite(Rational v) { return NewtonNumber(false, std::move(v)); }

  bool is_infinite() const { return infinite_; }
  /// Throws Unbounded when infinite.
  const Rational& value() const;

  friend bool operator==(const NewtonNumber&, const NewtonNumber&) = default;

 private:
  NewtonNumber(bool inf, Rational v) : infinite_(inf), value_(std::move(v)) {}
  bool infinite_;
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const NewtonNumber& n);

/// { x >= 0 : <x, a> >= 1 }, generators e_k / a_k.
Diagram weighted_simplex(const Weight& a);

/// Generators b_k e_k (axis intercepts b).
Diagram intercept_simplex(const Weight& b);

/// Exact Newton number. The complement of G lies in the box [0, M]^n with
/// M the largest axis intercept; the volume of [0, M]^n cut by G is computed
/// by vertex enumeration and fan triangulation and subtracted from M^n.
NewtonNumber newton_number(const Diagram& g);

/// Pieces of the box computation: M, Vol([0,M]^n \ G) and Vol([0,M]^n cut by G).
struct BoxSplit {
  Rational side;
  Rational covolume;
  Rational capped_volume;
};
/// Throws Unbounded if the diagram misses an axis.
BoxSplit box_split(const Diagram& g);

/// Second route to the Newton number: the complement is the union of the
/// cones from the origin over the compact facets, so n! Vol is the sum of
/// |det| over a triangulation of those facets. Throws Unbounded.
Rational newton_number_by_cones(const Diagram& g);

/// Shoelace area of the polygon bounded by the axes and the vertex chain.
/// Throws DimensionMismatch unless dim == 2, Unbounded unless both axes are hit.
Rational covolume_2d_oracle(const Diagram& g);

/// Relative type of u with respect to the monomial weight phi_a, i.e. the
/// directional Lelong number nu(u, a).
Rational relative_type_monomial(const SingularityInput& u, const Weight& a);

/// Value of the indicator at |z_k| = e^{t_k}, t <= 0.
Rational indicator_eval(const Diagram& g, const Vector& t);

}  // namespace idiag
