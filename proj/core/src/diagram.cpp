#include "idiag/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "idiag/error.hpp"
#include "idiag/linalg.hpp"
#include "idiag/lp.hpp"

namespace idiag {

Point::Point(Vector coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error(ErrorCode::DimensionMismatch, "point of dimension 0");
  for (const auto& x : coords_)
    if (x < 0) throw Error(ErrorCode::NegativeCoordinate, "negative coordinate in " + idiag::to_string(coords_));
}

bool Point::is_lattice() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return is_integer(q); });
}

Point operator+(const Point& a, const Point& b) {
  Vector s(a.coords_);
  for (std::size_t k = 0; k < s.size(); ++k) s[k] += b.coords_[k];
  return Point(std::move(s));
}

std::string to_string(const Point& p) { return to_string(p.coords()); }
std::ostream& operator<<(std::ostream& os, const Point& p) { return os << to_string(p); }

Weight::Weight(Vector a) : a_(std::move(a)) {
  if (a_.empty()) throw Error(ErrorCode::DimensionMismatch, "weight of dimension 0");
  for (const auto& x : a_)
    if (x <= 0) throw Error(ErrorCode::NonpositiveWeight, "weight " + idiag::to_string(a_) + " is not strictly positive");
}

bool Diagram::is_lattice() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Point& p) { return p.is_lattice(); });
}

std::string to_string(const Diagram& g) {
  std::string out = "{";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out += ", ";
    out += to_string(g.generators()[i]);
  }
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const Diagram& g) { return os << to_string(g); }

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": dimensions " + std::to_string(a) + " and " + std::to_string(b));
}

bool dominates(const Point& q, const Point& p) {
  for (std::size_t k = 0; k < p.dim(); ++k)
    if (q[k] > p[k]) return false;
  return true;
}

// p in conv(others) + R^n_+ ?
bool in_upper_hull(const std::vector<const Point*>& others, const Point& p) {
  if (others.empty()) return false;
  const std::size_t n = p.dim();
  lp::Problem problem(others.size());
  problem.add_eq(Vector(others.size(), 1), 1);
  for (std::size_t k = 0; k < n; ++k) {
    Vector row(others.size());
    for (std::size_t j = 0; j < others.size(); ++j) row[j] = (*others[j])[k];
    problem.add_le(std::move(row), p[k]);
  }
  return lp::feasible(problem);
}

}  // namespace

Diagram canonicalize(std::size_t dim, std::vector<Point> raw_points) {
  if (raw_points.empty()) throw Error(ErrorCode::EmptyInput, "no points given");
  if (dim == 0) throw Error(ErrorCode::DimensionMismatch, "dimension must be positive");
  for (const auto& p : raw_points) require_same_dim(p.dim(), dim, "canonicalize");

  std::sort(raw_points.begin(), raw_points.end());
  raw_points.erase(std::unique(raw_points.begin(), raw_points.end()), raw_points.end());

  std::vector<Point> undominated;
  for (std::size_t i = 0; i < raw_points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < raw_points.size() && !dominated; ++j)
      dominated = j != i && dominates(raw_points[j], raw_points[i]);
    if (!dominated) undominated.push_back(raw_points[i]);
  }

  // Drop points in the upper hull of the remaining ones. Removing a
  // redundant point does not change the hull, so one pass suffices.
  std::vector<bool> keep(undominated.size(), true);
  for (std::size_t i = 0; i < undominated.size(); ++i) {
    std::vector<const Point*> others;
    for (std::size_t j = 0; j < undominated.size(); ++j)
      if (j != i && keep[j]) others.push_back(&undominated[j]);
    if (in_upper_hull(others, undominated[i])) keep[i] = false;
  }
  std::vector<Point> generators;
  for (std::size_t i = 0; i < undominated.size(); ++i)
    if (keep[i]) generators.push_back(std::move(undominated[i]));
  return Diagram(dim, std::move(generators));
}

Diagram make_diagram(const std::vector<Vector>& rows) {
  if (rows.empty()) throw Error(ErrorCode::EmptyInput, "no points given");
  std::vector<Point> pts;
  pts.reserve(rows.size());
  for (const auto& r : rows) pts.emplace_back(r);
  return canonicalize(rows.front().size(), std::move(pts));
}

bool contains(const Diagram& g, const Point& p) {
  require_same_dim(g.dim(), p.dim(), "contains");
  for (const auto& q : g.generators())
    if (dominates(q, p)) return true;
  std::vector<const Point*> gens;
  for (const auto& q : g.generators()) gens.push_back(&q);
  return in_upper_hull(gens, p);
}

Rational support_value(const Diagram& g, const Vector& t) {
  require_same_dim(g.dim(), t.size(), "support_value");
  for (const auto& x : t)
    if (x > 0) throw Error(ErrorCode::PositiveDirection, "direction " + to_string(t) + " has a positive coordinate");
  Rational best = dot(t, g.generators().front().coords());
  for (const auto& p : g.generators()) best = std::max(best, dot(t, p.coords()));
  return best;
}

Rational lelong_directional(const Diagram& g, const Weight& a) {
  require_same_dim(g.dim(), a.dim(), "lelong_directional");
  Rational best = dot(a.values(), g.generators().front().coords());
  for (const auto& p : g.generators()) best = std::min(best, dot(a.values(), p.coords()));
  return best;
}

Diagram minkowski_sum(const Diagram& a, const Diagram& b) {
  require_same_dim(a.dim(), b.dim(), "minkowski_sum");
  std::vector<Point> sums;
  sums.reserve(a.size() * b.size());
  for (const auto& p : a.generators())
    for (const auto& q : b.generators()) sums.push_back(p + q);
  return canonicalize(a.dim(), std::move(sums));
}

Diagram scale(const Diagram& g, const Rational& c) {
  if (c <= 0) throw Error(ErrorCode::NonpositiveScale, "scale factor " + to_string(c) + " is not positive");
  // Positive dilation preserves vertices and lexicographic order.
  std::vector<Point> gens;
  gens.reserve(g.size());
  for (const auto& p : g.generators()) {
    Vector v(p.coords());
    for (auto& x : v) x *= c;
    gens.emplace_back(std::move(v));
  }
  return Diagram(g.dim(), std::move(gens));
}

Diagram translate(const Diagram& g, const Point& x) {
  require_same_dim(g.dim(), x.dim(), "translate");
  std::vector<Point> gens;
  gens.reserve(g.size());
  for (const auto& p : g.generators()) gens.push_back(p + x);
  return Diagram(g.dim(), std::move(gens));
}

std::optional<HomothetyWitness> is_homothetic_to(const Diagram& a, const Diagram& b) {
  require_same_dim(a.dim(), b.dim(), "is_homothetic_to");
  if (a.size() != b.size()) return std::nullopt;
  const std::size_t n = a.dim();
  const auto& A = a.generators();
  const auto& B = b.generators();

  Rational c;
  if (A.size() == 1) {
    // {a} = c{b} + x needs a - c b >= 0; take the largest such c.
    std::optional<Rational> best;
    for (std::size_t k = 0; k < n; ++k) {
      if (B[0][k] == 0) continue;
      Rational r = A[0][k] / B[0][k];
      if (!best || r < *best) best = r;
    }
    c = best ? *best : Rational(1);
    if (c <= 0) return std::nullopt;
  } else {
    // Positive homothety maps the lexicographically sorted vertex lists onto
    // each other, so c is read off the first pair of distinct vertices.
    std::size_t k = 0;
    while (B[1][k] == B[0][k]) ++k;
    c = (A[1][k] - A[0][k]) / (B[1][k] - B[0][k]);
    if (c <= 0) return std::nullopt;
  }

  Vector x(n);
  for (std::size_t k = 0; k < n; ++k) {
    x[k] = A[0][k] - c * B[0][k];
    if (x[k] < 0) return std::nullopt;
  }
  for (std::size_t i = 1; i < A.size(); ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (A[i][k] != c * B[i][k] + x[k]) return std::nullopt;
  return HomothetyWitness{c, Point(std::move(x))};
}

Diagram hull_union(const Diagram& a, const Diagram& b) {
  require_same_dim(a.dim(), b.dim(), "hull_union");
  std::vector<Point> all(a.generators());
  all.insert(all.end(), b.generators().begin(), b.generators().end());
  return canonicalize(a.dim(), std::move(all));
}

std::vector<geometry::HalfSpace> facets(const Diagram& g) {
  // Valid inequalities <w,x> >= h form the cone w >= 0, <w,v_i> - h >= 0 in
  // (w,h)-space; its extreme rays with w != 0 are the facets.
  const std::size_t n = g.dim();
  std::vector<Vector> rows;
  for (std::size_t k = 0; k < n; ++k) {
    Vector r(n + 1, 0);
    r[k] = 1;
    rows.push_back(std::move(r));
  }
  for (const auto& v : g.generators()) {
    Vector r(v.coords());
    r.push_back(-1);
    rows.push_back(std::move(r));
  }
  std::vector<geometry::HalfSpace> out;
  for (auto& ray : geometry::extreme_rays(rows)) {
    Rational h = ray.back();
    ray.pop_back();
    if (std::all_of(ray.begin(), ray.end(), [](const Rational& q) { return q == 0; })) continue;
    out.push_back({std::move(ray), std::move(h)});
  }
  return out;
}

CompactGraph compact_graph(const Diagram& g) {
  CompactGraph graph{g.generators(), {}};
  const auto& V = g.generators();
  if (V.size() < 2) return graph;
  const auto hs = facets(g);
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < V.size(); ++i) {
    for (std::size_t j = i + 1; j < V.size(); ++j) {
      linalg::Matrix normals;
      for (const auto& h : hs)
        if (h.tight(V[i].coords()) && h.tight(V[j].coords())) normals.push_back(h.normal);
      if (normals.size() + 1 < n || linalg::rank(std::move(normals)) != n - 1) continue;
      Vector d(n);
      for (std::size_t k = 0; k < n; ++k) d[k] = V[j][k] - V[i][k];
      graph.edges.push_back({i, j, std::move(d)});
    }
  }
  return graph;
}

bool touches_all_axes(const Diagram& g) {
  const std::size_t n = g.dim();
  for (std::size_t k = 0; k < n; ++k) {
    bool found = std::any_of(g.generators().begin(), g.generators().end(), [&](const Point& p) {
      for (std::size_t j = 0; j < n; ++j)
        if (j != k && p[j] != 0) return false;
      return true;
    });
    if (!found) return false;
  }
  return true;
}

Point monomial_part(const Diagram& g) {
  Vector m(g.generators().front().coords());
  for (const auto& p : g.generators())
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], p[k]);
  return Point(std::move(m));
}

Diagram homothety_representative(const Diagram& g) {
  const Point shift = monomial_part(g);
  std::vector<Point> gens;
  for (const auto& p : g.generators()) {
    Vector v(p.coords());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= shift[k];
    gens.emplace_back(std::move(v));
  }
  Diagram base = canonicalize(g.dim(), std::move(gens));
  const Rational nu = lelong_directional(base, Weight(Vector(g.dim(), 1)));
  return nu == 0 ? base : scale(base, 1 / nu);
}

}  // namespace idiag
