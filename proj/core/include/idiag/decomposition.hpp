#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "idiag/diagram.hpp"
#include "idiag/lp.hpp"
#include "idiag/polynomial.hpp"

namespace idiag {

/// A candidate summand of a diagram, given by one displaced vertex u_i per
/// generator v_i and one scale t_e per compact edge.
struct Assignment {
  std::vector<Vector> u;
  Vector t;
};

/// The polytope S of Minkowski summands of a diagram:
///   u_i - u_j = t_e (v_i - v_j) for every compact edge e = (i, j),
///   0 <= t_e <= 1,  0 <= u_i <= v_i.
/// The summand is conv(u) + R^n_+ and the co-summand conv(v - u) + R^n_+.
class SummandSystem {
 public:
  explicit SummandSystem(Diagram base);

  const Diagram& base() const { return base_; }
  const CompactGraph& graph() const { return graph_; }
  std::size_t num_vertices() const { return base_.size(); }
  std::size_t num_edges() const { return graph_.edges.size(); }

  bool is_feasible(const Assignment& a) const;

  /// Fixes u at one vertex and the edge scales, then propagates along the
  /// edges. Returns nullopt if the cycle conditions fail.
  std::optional<Assignment> propagate(std::size_t anchor, const Vector& u_anchor, const Vector& t) const;

  /// u_i = lambda v_i + x, t_e = lambda.
  Assignment homothetic_assignment(const Rational& lambda, const Vector& x) const;

  Assignment complement(const Assignment& a) const;

  /// Throws InfeasibleAssignment.
  Diagram summand(const Assignment& a) const;
  Diagram cosummand(const Assignment& a) const;

  /// Whether the summand (resp. co-summand) is homothetic to the base.
  bool in_h1(const Assignment& a) const;
  bool in_h2(const Assignment& a) const;

  // LP layout: u_{i,k} at i*n + k, t_e after all u, then `extra` slots.
  std::size_t u_index(std::size_t i, std::size_t k) const { return i * base_.dim() + k; }
  std::size_t t_index(std::size_t e) const { return num_vertices() * base_.dim() + e; }
  std::size_t num_variables() const { return t_index(num_edges()); }
  lp::Problem constraints(std::size_t extra = 0) const;
  Assignment assignment_from(const Vector& lp_point) const;

 private:
  Diagram base_;
  CompactGraph graph_;
};

/// summand_of(assignment in S).
Diagram summand_of(const SummandSystem& system, const Assignment& a);

/// k1 + k2 = g with neither k1 nor k2 homothetic to g.
bool verify_decomposition(const Diagram& g, const Diagram& k1, const Diagram& k2);

enum class Method { SimplexFacet, TwoDimChain, FacetPairLp };
std::string_view to_string(Method m);

struct Decomposable {
  Diagram left;
  Diagram right;
  Method method;
};

struct Indecomposable {
  Method method;
  std::string detail;
};

using DecompositionCertificate = std::variant<Decomposable, Indecomposable>;

inline bool is_decomposable(const DecompositionCertificate& c) { return std::holds_alternative<Decomposable>(c); }

enum class Strategy { Automatic, SimplexFacet, TwoDimChain, FacetPairLp };

/// True for diagrams whose generators are b_k e_k, one per axis: the single
/// compact facet family that is indecomposable outright.
bool is_simplex_facet(const Diagram& g);

/// Decides decomposability modulo homothety. Automatic tries the simplex
/// fast path, then the planar chain argument, then the facet-pair LP search.
/// Every Decomposable result has passed verify_decomposition; a witness
/// that fails it raises InvariantViolation. Forcing a strategy that does
/// not apply throws InvalidInput.
DecompositionCertificate decide_decomposability(const Diagram& g, Strategy strategy = Strategy::Automatic);

/// All verified witnesses found by the facet-pair LP search, normalized
/// (left <= right), deduplicated and sorted by preference.
std::vector<std::pair<Diagram, Diagram>> facet_pair_witnesses(const Diagram& g);

enum class Verdict { Extreme, NotExtreme };
std::string_view to_string(Verdict v);

extern const std::string_view kHomogeneityCaveat;

struct ExtremityReport {
  SingularityInput input;
  Diagram diagram;
  Verdict verdict;
  DecompositionCertificate certificate;
  std::string caveat;
};

ExtremityReport classify_extreme(const SingularityInput& u);

}  // namespace idiag
