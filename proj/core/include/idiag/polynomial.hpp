#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "idiag/diagram.hpp"
#include "idiag/linalg.hpp"
#include "idiag/rational.hpp"

namespace idiag {

using Monomial = std::vector<std::uint32_t>;

/// Sparse polynomial in z1..zn with exact rational coefficients. Terms are
/// kept in descending lexicographic order of exponents and never store a
/// zero coefficient; the empty map is the zero polynomial.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, std::greater<>>;

  explicit Polynomial(std::size_t dim);

  static Polynomial constant(std::size_t dim, const Rational& c);
  /// z_{index+1}
  static Polynomial variable(std::size_t dim, std::size_t index);
  static Polynomial monomial(const Monomial& exponent, const Rational& c);

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * z^exponent, dropping the term if it cancels.
  void add_term(const Monomial& exponent, const Rational& c);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t dim_;
  Terms terms_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_sub(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial poly_pow(const Polynomial& p, std::uint32_t e);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return poly_add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return poly_sub(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return poly_mul(p, q); }

/// Parses the grammar
///   expr   := ["+"|"-"] term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := base ("^" nonneg-integer)?
///   base   := rational | variable | "(" expr ")"
/// with variables z1..z<dim>. Throws SyntaxError (with byte position),
/// UnknownVariable or NegativeExponent.
Polynomial parse_polynomial(std::string_view text, std::size_t dim);

/// Canonical text, e.g. "z1^2 + 2*z1*z2 - 1/3*z2". Reparses to an equal value.
std::string to_string(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// p(M zeta): the rows of M express the old variables in the new ones,
/// z_i = sum_j M_ij zeta_j. Throws SingularMatrix or DimensionMismatch.
Polynomial substitute_linear(const Polynomial& p, const linalg::Matrix& m);

/// Exponents with nonzero coefficient. Throws ZeroPolynomial.
std::vector<Point> support_of(const Polynomial& p);

/// min over the support of <a, J>. Throws ZeroPolynomial.
Rational index_of(const Polynomial& p, const Weight& a);

/// u = log(|p_1| + ... + |p_m|).
class SingularityInput {
 public:
  /// Throws EmptyInput, ZeroPolynomial or DimensionMismatch.
  SingularityInput(std::size_t dim, std::vector<Polynomial> polys);

  std::size_t dim() const { return dim_; }
  const std::vector<Polynomial>& polys() const { return polys_; }

 private:
  std::size_t dim_;
  std::vector<Polynomial> polys_;
};

SingularityInput parse_input(std::size_t dim, const std::vector<std::string>& texts);

SingularityInput substitute_linear(const SingularityInput& u, const linalg::Matrix& m);

/// Hull of the union of the Newton polyhedra of the p_i.
Diagram diagram_of_input(const SingularityInput& u);

}  // namespace idiag
