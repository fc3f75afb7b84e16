#include "idiag/polyhedron.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "idiag/error.hpp"
#include "idiag/linalg.hpp"

namespace idiag::geometry {

void make_primitive(Vector& v) {
  mpz_class lcm = 1;
  for (const auto& x : v)
    if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  mpz_class gcd = 0;
  for (auto& x : v) {
    x *= lcm;
    if (x != 0) mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), x.get_num_mpz_t());
  }
  if (gcd == 0) return;
  for (auto& x : v) x /= gcd;
}

namespace {

using ZeroSet = std::vector<bool>;

struct Ray {
  Vector dir;
  ZeroSet zeros;
};

bool subset(const ZeroSet& a, const ZeroSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

std::size_t count(const ZeroSet& z) { return static_cast<std::size_t>(std::count(z.begin(), z.end(), true)); }

}  // namespace

std::vector<Vector> extreme_rays(const std::vector<Vector>& rows) {
  if (rows.empty()) throw Error(ErrorCode::Unbounded, "cone without constraints is not pointed");
  const std::size_t d = rows.front().size();
  const std::size_t m = rows.size();

  // Initial simplicial cone from d independent rows.
  std::vector<std::size_t> chosen;
  linalg::Matrix basis;
  for (std::size_t i = 0; i < m && chosen.size() < d; ++i) {
    basis.push_back(rows[i]);
    if (linalg::rank(basis) == basis.size()) {
      chosen.push_back(i);
    } else {
      basis.pop_back();
    }
  }
  if (chosen.size() < d) throw Error(ErrorCode::Unbounded, "cone is not pointed");
  auto inv = linalg::inverse(basis);

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < d; ++j) {
    Ray r{Vector(d), ZeroSet(m, false)};
    for (std::size_t i = 0; i < d; ++i) r.dir[i] = (*inv)[i][j];
    for (std::size_t k = 0; k < d; ++k)
      if (k != j) r.zeros[chosen[k]] = true;
    make_primitive(r.dir);
    rays.push_back(std::move(r));
  }

  std::vector<bool> processed(m, false);
  for (auto c : chosen) processed[c] = true;

  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    processed[i] = true;
    const Vector& a = rows[i];
    std::vector<Rational> value(rays.size());
    std::vector<std::size_t> plus, minus;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(a, rays[r].dir);
      if (value[r] > 0) plus.push_back(r);
      else if (value[r] < 0) minus.push_back(r);
    }
    if (minus.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (value[r] == 0) rays[r].zeros[i] = true;
      continue;
    }

    std::vector<Ray> next;
    for (std::size_t p : plus) {
      for (std::size_t q : minus) {
        ZeroSet common(m, false);
        for (std::size_t k = 0; k < m; ++k) common[k] = rays[p].zeros[k] && rays[q].zeros[k];
        if (count(common) + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && subset(common, rays[r].zeros)) adjacent = false;
        if (!adjacent) continue;
        Ray fresh{Vector(d), common};
        for (std::size_t k = 0; k < d; ++k)
          fresh.dir[k] = value[p] * rays[q].dir[k] - value[q] * rays[p].dir[k];
        make_primitive(fresh.dir);
        fresh.zeros[i] = true;
        next.push_back(std::move(fresh));
      }
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (value[r] < 0) continue;
      if (value[r] == 0) rays[r].zeros[i] = true;
      next.push_back(std::move(rays[r]));
    }
    rays = std::move(next);
  }

  std::vector<Vector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.dir));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vector> polytope_vertices(const std::vector<HalfSpace>& halfspaces, std::size_t dim) {
  std::vector<Vector> rows;
  rows.reserve(halfspaces.size() + 1);
  for (const auto& h : halfspaces) {
    Vector row(h.normal);
    row.push_back(-h.offset);
    rows.push_back(std::move(row));
  }
  Vector positivity(dim + 1, 0);
  positivity[dim] = 1;
  rows.push_back(std::move(positivity));

  std::vector<Vector> vertices;
  for (auto& ray : extreme_rays(rows)) {
    if (ray[dim] == 0) throw Error(ErrorCode::Unbounded, "polyhedron is unbounded");
    Vector v(dim);
    for (std::size_t k = 0; k < dim; ++k) v[k] = ray[k] / ray[dim];
    vertices.push_back(std::move(v));
  }
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

namespace {

void triangulate(const std::vector<Vector>& vertices, const std::vector<HalfSpace>& halfspaces,
                 const std::vector<std::size_t>& face, int face_dim, std::vector<std::size_t>& prefix,
                 std::vector<std::vector<std::size_t>>& out) {
  if (face_dim == 0) {
    auto simplex = prefix;
    simplex.push_back(face.front());
    out.push_back(std::move(simplex));
    return;
  }
  const std::size_t apex = face.front();
  std::set<std::vector<std::size_t>> seen;
  for (const auto& h : halfspaces) {
    if (h.tight(vertices[apex])) continue;
    std::vector<std::size_t> sub;
    for (auto v : face)
      if (h.tight(vertices[v])) sub.push_back(v);
    if (sub.size() < static_cast<std::size_t>(face_dim) || seen.contains(sub)) continue;
    std::vector<Vector> pts;
    for (auto v : sub) pts.push_back(vertices[v]);
    if (linalg::affine_dimension(pts) != face_dim - 1) continue;
    seen.insert(sub);
    prefix.push_back(apex);
    triangulate(vertices, halfspaces, sub, face_dim - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> fan_triangulation(
    const std::vector<Vector>& vertices, const std::vector<HalfSpace>& halfspaces,
    std::vector<std::size_t> face, int face_dim) {
  std::vector<std::vector<std::size_t>> out;
  if (face.empty()) return out;
  std::sort(face.begin(), face.end());
  std::vector<std::size_t> prefix;
  triangulate(vertices, halfspaces, face, face_dim, prefix, out);
  return out;
}

Rational simplex_normalized_volume(const std::vector<Vector>& points) {
  linalg::Matrix m;
  for (std::size_t i = 1; i < points.size(); ++i) {
    Vector d(points[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = points[i][k] - points[0][k];
    m.push_back(std::move(d));
  }
  return abs(linalg::determinant(std::move(m)));
}

Rational polytope_volume(const std::vector<Vector>& vertices, const std::vector<HalfSpace>& halfspaces) {
  if (vertices.empty()) return 0;
  const std::size_t dim = vertices.front().size();
  std::vector<std::size_t> all(vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (linalg::affine_dimension(vertices) != static_cast<int>(dim)) return 0;

  Rational total = 0;
  for (const auto& simplex : fan_triangulation(vertices, halfspaces, all, static_cast<int>(dim))) {
    std::vector<Vector> pts;
    for (auto v : simplex) pts.push_back(vertices[v]);
    total += simplex_normalized_volume(pts);
  }
  mpz_class factorial = 1;
  for (std::size_t k = 2; k <= dim; ++k) factorial *= static_cast<unsigned long>(k);
  return total / factorial;
}

}  // namespace idiag::geometry
