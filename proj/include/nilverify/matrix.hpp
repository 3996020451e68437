#pragma once

// Dense exact linear algebra over Q(zeta_12): Gauss-Jordan elimination,
// kernels, inverses, determinants and an incremental span tracker.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nilverify/scalar.hpp"

namespace nilverify {

using Vector = std::vector<CycloScalar>;

bool is_zero(std::span<const CycloScalar> v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Builds a rows x columns.size() matrix whose j-th column is columns[j].
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  CycloScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CycloScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;

  Vector apply(std::span<const CycloScalar> v) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycloScalar> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form with unit pivots.
RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Kernel basis read off the RREF: one vector per free column, ascending.
std::vector<Vector> nullspace(const Matrix& m);
/// Some x with a*x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, std::span<const CycloScalar> b);
std::optional<Matrix> inverse(const Matrix& m);
CycloScalar determinant(Matrix m);

/// Span of inserted vectors kept in echelon form; answers membership queries.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t ambient_dim) : dim_(ambient_dim) {}

  /// Adds v; returns true iff it was not already in the span.
  bool insert(Vector v);
  bool contains(Vector v) const;
  std::size_t dimension() const { return rows_.size(); }
  std::size_t ambient_dimension() const { return dim_; }

 private:
  void reduce(Vector& v) const;

  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace nilverify
