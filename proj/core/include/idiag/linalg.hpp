#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "idiag/rational.hpp"

/// Dense exact linear algebra over the rationals. Sizes here are tiny
/// (a few dozen rows at most), so plain Gaussian elimination is used.
namespace idiag::linalg {

using Matrix = std::vector<Vector>;  // row-major

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);

Rational determinant(Matrix m);

std::optional<Matrix> inverse(const Matrix& m);

/// Basis of { x : m x = 0 }. `cols` is needed when m has no rows.
std::vector<Vector> nullspace(Matrix m, std::size_t cols);

/// Dimension of the affine hull of the points; -1 for an empty set.
int affine_dimension(const std::vector<Vector>& points);

Matrix identity(std::size_t n);

Vector multiply(const Matrix& m, const Vector& x);

}  // namespace idiag::linalg
