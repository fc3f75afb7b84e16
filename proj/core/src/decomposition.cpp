#include "idiag/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "idiag/error.hpp"

namespace idiag {

namespace {

Vector sub(const Vector& a, const Vector& b) {
  Vector r(a);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
  return r;
}

}  // namespace

SummandSystem::SummandSystem(Diagram base) : base_(std::move(base)), graph_(compact_graph(base_)) {
  // The bounded part of a polyhedron is connected; the parameterization
  // relies on it, so check rather than assume.
  std::vector<bool> seen(num_vertices(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    auto i = queue.front();
    queue.pop_front();
    for (const auto& e : graph_.edges) {
      std::size_t j = e.first == i ? e.second : e.second == i ? e.first : i;
      if (j != i && !seen[j]) {
        seen[j] = true;
        queue.push_back(j);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw Error(ErrorCode::UnsupportedDimension, "compact edge graph of " + to_string(base_) + " is disconnected");
}

bool SummandSystem::is_feasible(const Assignment& a) const {
  const auto& V = base_.generators();
  if (a.u.size() != V.size() || a.t.size() != num_edges()) return false;
  for (std::size_t i = 0; i < V.size(); ++i) {
    if (a.u[i].size() != base_.dim()) return false;
    for (std::size_t k = 0; k < base_.dim(); ++k)
      if (a.u[i][k] < 0 || a.u[i][k] > V[i][k]) return false;
  }
  for (std::size_t e = 0; e < num_edges(); ++e) {
    const auto& edge = graph_.edges[e];
    if (a.t[e] < 0 || a.t[e] > 1) return false;
    for (std::size_t k = 0; k < base_.dim(); ++k)
      if (a.u[edge.second][k] - a.u[edge.first][k] != a.t[e] * edge.direction[k]) return false;
  }
  return true;
}

std::optional<Assignment> SummandSystem::propagate(std::size_t anchor, const Vector& u_anchor, const Vector& t) const {
  if (anchor >= num_vertices() || t.size() != num_edges() || u_anchor.size() != base_.dim()) return std::nullopt;
  Assignment a{std::vector<Vector>(num_vertices()), t};
  std::vector<bool> set(num_vertices(), false);
  a.u[anchor] = u_anchor;
  set[anchor] = true;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t e = 0; e < num_edges(); ++e) {
      const auto& edge = graph_.edges[e];
      if (set[edge.first] == set[edge.second]) continue;
      Vector step = edge.direction;
      for (auto& x : step) x *= t[e];
      if (set[edge.first]) {
        a.u[edge.second] = a.u[edge.first];
        for (std::size_t k = 0; k < step.size(); ++k) a.u[edge.second][k] += step[k];
        set[edge.second] = true;
      } else {
        a.u[edge.first] = sub(a.u[edge.second], step);
        set[edge.first] = true;
      }
      progress = true;
    }
  }
  for (std::size_t e = 0; e < num_edges(); ++e) {
    const auto& edge = graph_.edges[e];
    for (std::size_t k = 0; k < base_.dim(); ++k)
      if (a.u[edge.second][k] - a.u[edge.first][k] != t[e] * edge.direction[k]) return std::nullopt;
  }
  return a;
}

Assignment SummandSystem::homothetic_assignment(const Rational& lambda, const Vector& x) const {
  Assignment a;
  for (const auto& v : base_.generators()) {
    Vector u(v.coords());
    for (std::size_t k = 0; k < u.size(); ++k) u[k] = lambda * u[k] + x[k];
    a.u.push_back(std::move(u));
  }
  a.t.assign(num_edges(), lambda);
  return a;
}

Assignment SummandSystem::complement(const Assignment& a) const {
  Assignment c;
  for (std::size_t i = 0; i < a.u.size(); ++i) c.u.push_back(sub(base_.generators()[i].coords(), a.u[i]));
  for (const auto& t : a.t) c.t.push_back(1 - t);
  return c;
}

Diagram SummandSystem::summand(const Assignment& a) const {
  if (!is_feasible(a)) throw Error(ErrorCode::InfeasibleAssignment, "assignment violates the summand constraints of " + to_string(base_));
  std::vector<Point> pts;
  for (const auto& u : a.u) pts.emplace_back(u);
  return canonicalize(base_.dim(), std::move(pts));
}

Diagram SummandSystem::cosummand(const Assignment& a) const { return summand(complement(a)); }

bool SummandSystem::in_h1(const Assignment& a) const { return is_homothetic_to(summand(a), base_).has_value(); }

bool SummandSystem::in_h2(const Assignment& a) const { return is_homothetic_to(cosummand(a), base_).has_value(); }

lp::Problem SummandSystem::constraints(std::size_t extra) const {
  const std::size_t n = base_.dim();
  const std::size_t width = num_variables() + extra;
  lp::Problem p(width);
  const auto& V = base_.generators();
  for (std::size_t i = 0; i < V.size(); ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      Vector row(width, 0);
      row[u_index(i, k)] = 1;
      p.add_le(std::move(row), V[i][k]);
    }
  }
  for (std::size_t e = 0; e < num_edges(); ++e) {
    const auto& edge = graph_.edges[e];
    Vector bound(width, 0);
    bound[t_index(e)] = 1;
    p.add_le(std::move(bound), 1);
    for (std::size_t k = 0; k < n; ++k) {
      Vector row(width, 0);
      row[u_index(edge.second, k)] = 1;
      row[u_index(edge.first, k)] = -1;
      row[t_index(e)] = -edge.direction[k];
      p.add_eq(std::move(row), 0);
    }
  }
  return p;
}

Assignment SummandSystem::assignment_from(const Vector& x) const {
  const std::size_t n = base_.dim();
  Assignment a;
  for (std::size_t i = 0; i < num_vertices(); ++i) {
    Vector u(n);
    for (std::size_t k = 0; k < n; ++k) u[k] = x[u_index(i, k)];
    a.u.push_back(std::move(u));
  }
  for (std::size_t e = 0; e < num_edges(); ++e) a.t.push_back(x[t_index(e)]);
  return a;
}

Diagram summand_of(const SummandSystem& system, const Assignment& a) { return system.summand(a); }

bool verify_decomposition(const Diagram& g, const Diagram& k1, const Diagram& k2) {
  if (g.dim() != k1.dim() || g.dim() != k2.dim())
    throw Error(ErrorCode::DimensionMismatch, "verify_decomposition: dimensions differ");
  return minkowski_sum(k1, k2) == g && !is_homothetic_to(k1, g) && !is_homothetic_to(k2, g);
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::SimplexFacet: return "simplex-facet";
    case Method::TwoDimChain: return "two-dim-chain";
    case Method::FacetPairLp: return "facet-pair-lp";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) { return v == Verdict::Extreme ? "extreme" : "not-extreme"; }

const std::string_view kHomogeneityCaveat =
    "The verdict concerns the homogeneous singularity whose indicator diagram is shown. "
    "It applies to the input only if the input is almost homogeneous, which cannot be "
    "certified from support data alone.";

bool is_simplex_facet(const Diagram& g) {
  if (g.size() != g.dim()) return false;
  std::vector<bool> axis(g.dim(), false);
  for (const auto& p : g.generators()) {
    std::size_t nonzero = 0, where = 0;
    for (std::size_t k = 0; k < p.dim(); ++k)
      if (p[k] != 0) {
        ++nonzero;
        where = k;
      }
    if (nonzero != 1 || axis[where]) return false;
    axis[where] = true;
  }
  return true;
}

namespace {

using Witness = std::pair<Diagram, Diagram>;

Witness normalized(Diagram a, Diagram b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

// Lattice summands first, then fewer generators, then lexicographic.
auto preference_key(const Witness& w) {
  return std::make_tuple(!(w.first.is_lattice() && w.second.is_lattice()), w.first.size() + w.second.size(),
                         std::cref(w.first), std::cref(w.second));
}

std::vector<Witness> verified_sorted(const Diagram& g, std::vector<Witness> candidates) {
  for (const auto& [a, b] : candidates)
    if (!verify_decomposition(g, a, b))
      throw Error(ErrorCode::InvariantViolation,
                  "candidate " + to_string(a) + " + " + to_string(b) + " does not decompose " + to_string(g));
  std::sort(candidates.begin(), candidates.end(),
            [](const Witness& x, const Witness& y) { return preference_key(x) < preference_key(y); });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  return candidates;
}

// A single vertex v: {u} is homothetic to {v} iff u is positive on supp(v),
// so a split exists iff v has at least two nonzero coordinates.
std::vector<Witness> single_vertex_witnesses(const Diagram& g) {
  const Point& v = g.generators().front();
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < v.dim(); ++k)
    if (v[k] != 0) support.push_back(k);
  if (support.size() < 2) return {};
  Vector axis(v.dim(), 0), rest(v.coords());
  axis[support.front()] = v[support.front()];
  rest[support.front()] = 0;
  return {normalized(canonicalize(v.dim(), {Point(axis)}), canonicalize(v.dim(), {Point(rest)}))};
}

std::string single_vertex_detail(const Diagram& g) {
  if (lelong_directional(g, Weight(Vector(g.dim(), 1))) == 0) return "zero diagram (orthant): vacuously indecomposable";
  return "single vertex supported on one axis";
}

std::optional<Witness> monomial_factor(const Diagram& g) {
  const Point ell = monomial_part(g);
  if (std::all_of(ell.coords().begin(), ell.coords().end(), [](const Rational& q) { return q == 0; })) return std::nullopt;
  std::vector<Point> rest;
  for (const auto& p : g.generators()) rest.emplace_back(sub(p.coords(), ell.coords()));
  return normalized(canonicalize(g.dim(), {ell}), canonicalize(g.dim(), std::move(rest)));
}

struct SearchResult {
  std::vector<Witness> witnesses;
  std::size_t programs = 0;
};

SearchResult facet_pair_search(const Diagram& g) {
  SearchResult result;
  if (g.size() == 1) {
    result.witnesses = single_vertex_witnesses(g);
    return result;
  }
  const SummandSystem system(g);
  const std::size_t n = g.dim();
  const std::size_t E = system.num_edges();
  const Point& v0 = g.generators().front();
  std::vector<Witness> found;

  auto record = [&](const lp::Solution& sol) {
    auto a = system.assignment_from(sol.x);
    found.push_back(normalized(system.summand(a), system.cosummand(a)));
  };

  // H1 and H2 both require a common edge scale; a point of S violating
  // t_e = t_0 lies outside both at once.
  for (std::size_t e = 1; e < E; ++e) {
    for (int sign : {1, -1}) {
      lp::Problem p = system.constraints();
      p.objective.assign(p.num_vars, 0);
      p.objective[system.t_index(e)] = sign;
      p.objective[system.t_index(0)] = -sign;
      auto sol = lp::solve(p);
      ++result.programs;
      if (sol.status == lp::Status::Optimal && sol.value > 0) record(sol);
    }
  }

  // On the common-scale slice the translation is x = u_0 - t_0 v_0:
  // H1 needs x >= 0, H2 needs x <= 0. Pair a violated facet of each.
  const std::size_t s = system.num_variables();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (k == l) continue;
      lp::Problem p = system.constraints(1);
      Vector below(p.num_vars, 0);  // -x_k - s >= 0
      below[system.u_index(0, k)] = -1;
      below[system.t_index(0)] = v0[k];
      below[s] = -1;
      p.add_ge(std::move(below), 0);
      Vector above(p.num_vars, 0);  // x_l - s >= 0
      above[system.u_index(0, l)] = 1;
      above[system.t_index(0)] = -v0[l];
      above[s] = -1;
      p.add_ge(std::move(above), 0);
      Vector cap(p.num_vars, 0);
      cap[s] = 1;
      p.add_le(std::move(cap), 1);
      p.objective.assign(p.num_vars, 0);
      p.objective[s] = 1;
      auto sol = lp::solve(p);
      ++result.programs;
      if (sol.status == lp::Status::Optimal && sol.value > 0) record(sol);
    }
  }

  // H1 and H2 are not closed: homothety needs c > 0, so the slices t = 0
  // (summand is a translated orthant) and t = 1 (co-summand is) belong to
  // neither once the translation is nonzero.
  for (int end : {0, 1}) {
    lp::Problem p = system.constraints();
    for (std::size_t e = 0; e < E; ++e) {
      Vector row(p.num_vars, 0);
      row[system.t_index(e)] = 1;
      p.add_eq(std::move(row), end);
    }
    p.objective.assign(p.num_vars, 0);
    Rational offset = 0;
    for (std::size_t k = 0; k < n; ++k) {
      p.objective[system.u_index(0, k)] = end == 0 ? 1 : -1;
      if (end == 1) offset += v0[k];
    }
    auto sol = lp::solve(p);
    ++result.programs;
    if (sol.status == lp::Status::Optimal && sol.value + offset > 0) record(sol);
  }

  result.witnesses = verified_sorted(g, std::move(found));
  return result;
}

std::vector<Witness> two_dim_chain_witnesses(const Diagram& g) {
  if (g.size() == 1) return single_vertex_witnesses(g);
  // Lexicographic order on a planar diagram walks the chain with x rising
  // and y falling. Cutting at an interior vertex v_j splits it into the
  // chain up to v_j lowered by y_j and the chain from v_j shifted by -x_j.
  const auto& V = g.generators();
  std::vector<Witness> candidates;
  for (std::size_t j = 1; j + 1 < V.size(); ++j) {
    std::vector<Point> head, tail;
    for (std::size_t i = 0; i <= j; ++i) head.emplace_back(Vector{V[i][0], V[i][1] - V[j][1]});
    for (std::size_t i = j; i < V.size(); ++i) tail.emplace_back(Vector{V[i][0] - V[j][0], V[i][1]});
    candidates.push_back(normalized(canonicalize(2, std::move(head)), canonicalize(2, std::move(tail))));
  }
  if (auto w = monomial_factor(g)) candidates.push_back(std::move(*w));
  return verified_sorted(g, std::move(candidates));
}

DecompositionCertificate from_witnesses(const std::vector<Witness>& ws, Method method, std::string detail) {
  if (ws.empty()) return Indecomposable{method, std::move(detail)};
  return Decomposable{ws.front().first, ws.front().second, method};
}

}  // namespace

std::vector<std::pair<Diagram, Diagram>> facet_pair_witnesses(const Diagram& g) { return facet_pair_search(g).witnesses; }

DecompositionCertificate decide_decomposability(const Diagram& g, Strategy strategy) {
  if (strategy == Strategy::Automatic) {
    if (is_simplex_facet(g)) strategy = Strategy::SimplexFacet;
    else if (g.dim() == 2) strategy = Strategy::TwoDimChain;
    else strategy = Strategy::FacetPairLp;
  }

  switch (strategy) {
    case Strategy::SimplexFacet: {
      if (!is_simplex_facet(g))
        throw Error(ErrorCode::InvalidInput, "simplex-facet path needs one generator per axis: " + to_string(g));
      // A summand must keep one vertex per axis with a common edge scale
      // around the simplex, and the orthant forces a zero translation.
      return Indecomposable{Method::SimplexFacet,
                            "single compact facet with one vertex on each axis; summands are forced to be c*G"};
    }
    case Strategy::TwoDimChain: {
      if (g.dim() != 2) throw Error(ErrorCode::InvalidInput, "two-dim-chain path needs a planar diagram");
      auto ws = two_dim_chain_witnesses(g);
      std::string detail = g.size() == 1 ? single_vertex_detail(g)
                                         : "chain of " + std::to_string(g.size()) +
                                               " vertices with a single compact edge and no monomial factor";
      return from_witnesses(ws, Method::TwoDimChain, std::move(detail));
    }
    case Strategy::FacetPairLp:
    case Strategy::Automatic: {
      auto result = facet_pair_search(g);
      std::string detail = g.size() == 1 ? single_vertex_detail(g)
                                         : "S is covered by H1 and H2: " + std::to_string(result.programs) +
                                               " facet-pair programs have no strictly violating point";
      return from_witnesses(result.witnesses, Method::FacetPairLp, std::move(detail));
    }
  }
  throw Error(ErrorCode::InvariantViolation, "unknown strategy");
}

ExtremityReport classify_extreme(const SingularityInput& u) {
  Diagram g = diagram_of_input(u);
  auto cert = decide_decomposability(g);
  Verdict verdict = is_decomposable(cert) ? Verdict::NotExtreme : Verdict::Extreme;
  return ExtremityReport{u, std::move(g), verdict, std::move(cert), std::string(kHomogeneityCaveat)};
}

}  // namespace idiag
