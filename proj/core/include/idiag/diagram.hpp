#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "idiag/polyhedron.hpp"
#include "idiag/rational.hpp"

namespace idiag {

/// A point of the closed nonnegative orthant: an exponent or a generator.
class Point {
 public:
  /// Throws NegativeCoordinate, or DimensionMismatch for an empty vector.
  explicit Point(Vector coords);

  static Point zero(std::size_t dim) { return Point(Vector(dim, 0)); }

  std::size_t dim() const { return coords_.size(); }
  const Vector& coords() const { return coords_; }
  const Rational& operator[](std::size_t k) const { return coords_[k]; }

  bool is_lattice() const;

  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Point& a, const Point& b) { return a.coords_ < b.coords_; }
  friend Point operator+(const Point& a, const Point& b);

 private:
  Vector coords_;
};

std::string to_string(const Point& p);
std::ostream& operator<<(std::ostream& os, const Point& p);

/// Strictly positive direction a, as in the weight max_k a_k^{-1} log|z_k|.
class Weight {
 public:
  /// Throws NonpositiveWeight.
  explicit Weight(Vector a);

  std::size_t dim() const { return a_.size(); }
  const Vector& values() const { return a_; }
  const Rational& operator[](std::size_t k) const { return a_[k]; }

 private:
  Vector a_;
};

/// A complete convex set conv(generators) + R^n_+, held by its vertices in
/// lexicographic order. Two diagrams are equal iff they are the same set.
class Diagram {
 public:
  std::size_t dim() const { return dim_; }
  const std::vector<Point>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }

  bool is_lattice() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend bool operator<(const Diagram& a, const Diagram& b) { return a.generators_ < b.generators_; }

 private:
  Diagram(std::size_t dim, std::vector<Point> generators)
      : dim_(dim), generators_(std::move(generators)) {}

  friend Diagram canonicalize(std::size_t dim, std::vector<Point> raw_points);
  friend Diagram scale(const Diagram& g, const Rational& c);
  friend Diagram translate(const Diagram& g, const Point& x);

  std::size_t dim_ = 0;
  std::vector<Point> generators_;
};

std::string to_string(const Diagram& g);
std::ostream& operator<<(std::ostream& os, const Diagram& g);

struct HomothetyWitness {
  Rational c;
  Point x;
};

struct CompactEdge {
  std::size_t first;   // generator indices, first < second
  std::size_t second;
  Vector direction;    // generators[second] - generators[first]
};

struct CompactGraph {
  std::vector<Point> vertices;
  std::vector<CompactEdge> edges;
};

/// Minimal generator set of conv(raw_points) + R^n_+.
/// Throws EmptyInput or DimensionMismatch.
Diagram canonicalize(std::size_t dim, std::vector<Point> raw_points);

/// Convenience for literals: canonicalize from coordinate rows.
Diagram make_diagram(const std::vector<Vector>& rows);

/// Exact membership test p in conv(generators) + R^n_+.
bool contains(const Diagram& g, const Point& p);

/// sup over g of <t, .> for t <= 0; throws PositiveDirection otherwise.
Rational support_value(const Diagram& g, const Vector& t);

/// min over generators of <a, .>.
Rational lelong_directional(const Diagram& g, const Weight& a);

Diagram minkowski_sum(const Diagram& a, const Diagram& b);

/// Throws NonpositiveScale for c <= 0.
Diagram scale(const Diagram& g, const Rational& c);

Diagram translate(const Diagram& g, const Point& x);

/// Some (c > 0, x >= 0) with a = c b + x, if one exists. Not symmetric.
std::optional<HomothetyWitness> is_homothetic_to(const Diagram& a, const Diagram& b);

Diagram hull_union(const Diagram& a, const Diagram& b);

/// Facet inequalities of conv(generators) + R^n_+, as primitive integer
/// normals w >= 0 with <w, x> >= h.
std::vector<geometry::HalfSpace> facets(const Diagram& g);

/// Vertices and bounded edges of the diagram.
CompactGraph compact_graph(const Diagram& g);

/// True iff every coordinate axis carries a generator, i.e. the complement
/// of the diagram in the orthant is bounded.
bool touches_all_axes(const Diagram& g);

/// Componentwise minimum of the generators: the largest x >= 0 with
/// g contained in x + R^n_+.
Point monomial_part(const Diagram& g);

/// Normal form of the homothety class of g: translated down by its monomial
/// part and scaled to unit Lelong number (unless it is the orthant itself).
/// g is always homothetic to the result.
Diagram homothety_representative(const Diagram& g);

}  // namespace idiag
