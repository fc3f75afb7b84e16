#pragma once

#include <cstddef>
#include <vector>

#include "idiag/rational.hpp"

/// Exact polyhedral kernel: double description, vertex enumeration and
/// fan triangulation for small rational polyhedra.
namespace idiag::geometry {

/// { x : normal . x >= offset }
struct HalfSpace {
  Vector normal;
  Rational offset;

  bool contains(const Vector& x) const { return dot(normal, x) >= offset; }
  bool tight(const Vector& x) const { return dot(normal, x) == offset; }
  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// Scales v by a positive factor so that it becomes a primitive integer
/// vector (coprime entries). Zero vectors are left untouched.
void make_primitive(Vector& v);

/// Extreme rays of the pointed cone { y : row . y >= 0 for every row },
/// each scaled to a primitive integer vector, in deterministic order.
/// Throws Error(Unbounded) if the rows do not span the space (cone not pointed).
std::vector<Vector> extreme_rays(const std::vector<Vector>& rows);

/// Vertices of the bounded polyhedron cut out by `halfspaces` in R^dim.
/// Throws Error(Unbounded) if the polyhedron has a recession direction.
std::vector<Vector> polytope_vertices(const std::vector<HalfSpace>& halfspaces, std::size_t dim);

/// Triangulates the face spanned by `face` (indices into `vertices`, all of
/// them lying on that face) of dimension `face_dim`, by pulling the smallest
/// index vertex and recursing into the subfaces cut by `halfspaces` that
/// avoid it. Every simplex is returned as face_dim + 1 vertex indices.
std::vector<std::vector<std::size_t>> fan_triangulation(
    const std::vector<Vector>& vertices, const std::vector<HalfSpace>& halfspaces,
    std::vector<std::size_t> face, int face_dim);

/// |det(p_1 - p_0, ..., p_d - p_0)|, i.e. d! times the simplex volume.
Rational simplex_normalized_volume(const std::vector<Vector>& points);

/// Volume of the full-dimensional polytope with the given vertices and an
/// H-description containing all of its facets.
Rational polytope_volume(const std::vector<Vector>& vertices, const std::vector<HalfSpace>& halfspaces);

}  // namespace idiag::geometry
