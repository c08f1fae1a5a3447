#pragma once

// Dense exact linear algebra: matrices over a Field, reduced echelon form,
// and subspaces canonicalized by their echelon basis.

#include <optional>
#include <vector>

#include "jalg/exactnum.hpp"

namespace jalg {

using Vector = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(Field field, std::size_t n);
  /// Rows given as vectors of equal length.
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  Vector apply(const Vector& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct EchelonForm {
  Matrix reduced;                   // all rows, zero rows last
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

EchelonForm row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Some solution of m x = b, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
/// Rows form a basis of {x : m x = 0}.
std::vector<Vector> nullspace(const Matrix& m);

Vector zero_vector(Field field, std::size_t n);
Vector unit_vector(Field field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

/// Subspace of k^n stored as the nonzero rows of its reduced echelon basis,
/// so equal subspaces compare equal structurally.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(Field field, std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace zero(Field field, std::size_t ambient_dim);
  static Subspace whole(Field field, std::size_t ambient_dim);
  /// Span of the given standard basis vectors.
  static Subspace coordinate(Field field, std::size_t ambient_dim,
                             const std::vector<std::size_t>& indices);

  Field field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool contains(const Vector& v) const;
  /// Coordinates of v in the echelon basis; throws std::invalid_argument when
  /// v is not in the subspace.
  Vector coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  Field field_;
  std::size_t ambient_dim_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);

}  // namespace jalg
