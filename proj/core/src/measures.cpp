#include "idiag/measures.hpp"

#include <algorithm>

#include "idiag/error.hpp"
#include "idiag/linalg.hpp"
#include "idiag/polyhedron.hpp"

namespace idiag {

const Rational& NewtonNumber::value() const {
  if (infinite_) throw Error(ErrorCode::Unbounded, "Newton number is infinite");
  return value_;
}

std::ostream& operator<<(std::ostream& os, const NewtonNumber& n) {
  return n.is_infinite() ? os << "infinite" : os << to_string(n.value());
}

Diagram weighted_simplex(const Weight& a) {
  std::vector<Point> gens;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    Vector v(a.dim(), 0);
    v[k] = 1 / a[k];
    gens.emplace_back(std::move(v));
  }
  return canonicalize(a.dim(), std::move(gens));
}

Diagram intercept_simplex(const Weight& b) {
  std::vector<Point> gens;
  for (std::size_t k = 0; k < b.dim(); ++k) {
    Vector v(b.dim(), 0);
    v[k] = b[k];
    gens.emplace_back(std::move(v));
  }
  return canonicalize(b.dim(), std::move(gens));
}

namespace {

mpz_class factorial(std::size_t n) {
  mpz_class f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<unsigned long>(k);
  return f;
}

bool has_origin(const Diagram& g) {
  return std::all_of(g.generators().front().coords().begin(), g.generators().front().coords().end(),
                     [](const Rational& q) { return q == 0; });
}

}  // namespace

BoxSplit box_split(const Diagram& g) {
  if (!touches_all_axes(g)) throw Error(ErrorCode::Unbounded, "diagram " + to_string(g) + " misses an axis");
  const std::size_t n = g.dim();

  // Axis intercepts b_k; the complement lies in prod [0, b_k) since
  // b_k e_k + R^n_+ is inside the diagram.
  Rational side = 0;
  for (const auto& p : g.generators())
    for (std::size_t k = 0; k < n; ++k) side = std::max(side, p[k]);
  for (std::size_t k = 0; k < n; ++k) {
    bool bounded = std::any_of(g.generators().begin(), g.generators().end(), [&](const Point& p) {
      for (std::size_t j = 0; j < n; ++j)
        if (j != k && p[j] != 0) return false;
      return p[k] <= side;
    });
    if (!bounded) throw Error(ErrorCode::InvariantViolation, "box does not cover the complement");
  }

  Rational box = 1;
  for (std::size_t k = 0; k < n; ++k) box *= side;
  if (has_origin(g)) return {side, 0, box};

  auto halfspaces = facets(g);
  for (std::size_t k = 0; k < n; ++k) {
    Vector normal(n, 0);
    normal[k] = -1;
    halfspaces.push_back({std::move(normal), -side});
  }
  const auto vertices = geometry::polytope_vertices(halfspaces, n);
  Rational capped = geometry::polytope_volume(vertices, halfspaces);
  return {side, box - capped, capped};
}

NewtonNumber newton_number(const Diagram& g) {
  if (!touches_all_axes(g)) return NewtonNumber::infinite();
  return NewtonNumber::finite(factorial(g.dim()) * box_split(g).covolume);
}

Rational newton_number_by_cones(const Diagram& g) {
  if (!touches_all_axes(g)) throw Error(ErrorCode::Unbounded, "diagram " + to_string(g) + " misses an axis");
  if (has_origin(g)) return 0;
  const std::size_t n = g.dim();
  std::vector<Vector> verts;
  for (const auto& p : g.generators()) verts.push_back(p.coords());
  const auto hs = facets(g);

  Rational total = 0;
  for (const auto& h : hs) {
    if (std::any_of(h.normal.begin(), h.normal.end(), [](const Rational& w) { return w == 0; })) continue;
    std::vector<std::size_t> face;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (h.tight(verts[i])) face.push_back(i);
    for (const auto& simplex : geometry::fan_triangulation(verts, hs, face, static_cast<int>(n) - 1)) {
      linalg::Matrix m;
      for (auto i : simplex) m.push_back(verts[i]);
      total += abs(linalg::determinant(std::move(m)));
    }
  }
  return total;
}

Rational covolume_2d_oracle(const Diagram& g) {
  if (g.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "shoelace oracle needs a planar diagram");
  if (!touches_all_axes(g)) throw Error(ErrorCode::Unbounded, "diagram " + to_string(g) + " misses an axis");
  std::vector<Vector> polygon{{0, 0}};
  for (const auto& p : g.generators()) polygon.push_back(p.coords());
  Rational twice = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const auto& a = polygon[i];
    const auto& b = polygon[(i + 1) % polygon.size()];
    twice += a[0] * b[1] - b[0] * a[1];
  }
  return abs(twice) / 2;
}

Rational relative_type_monomial(const SingularityInput& u, const Weight& a) {
  return lelong_directional(diagram_of_input(u), a);
}

Rational indicator_eval(const Diagram& g, const Vector& t) { return support_value(g, t); }

}  // namespace idiag
