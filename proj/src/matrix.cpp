#include "nilverify/matrix.hpp"

#include <algorithm>

#include "nilverify/error.hpp"

namespace nilverify {

bool is_zero(std::span<const CycloScalar> v) {
  return std::all_of(v.begin(), v.end(), [](const CycloScalar& x) { return x.is_zero(); });
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw PreconditionError("from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const CycloScalar> v) const {
  if (v.size() != cols_) throw PreconditionError("apply: dimension mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& a = (*this)(r, c);
      if (a.is_zero() || v[c].is_zero()) continue;
      out[r] += a * v[c];
    }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix product: dimension mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
    }
  return out;
}

RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < m.rows() && m(r, col).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(r, c), m(pivot_row, c));
    const CycloScalar scale = inv(m(pivot_row, col));
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!m(pivot_row, c).is_zero()) m(pivot_row, c) *= scale;
    for (std::size_t rr = 0; rr < m.rows(); ++rr) {
      if (rr == pivot_row || m(rr, col).is_zero()) continue;
      const CycloScalar f = m(rr, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(pivot_row, c).is_zero()) m(rr, c) -= f * m(pivot_row, c);
    }
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_columns.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivot_columns) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) v[e.pivot_columns[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& a, std::span<const CycloScalar> b) {
  if (b.size() != a.rows()) throw PreconditionError("solve: dimension mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const RowEchelon e = rref(std::move(aug));
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) x[e.pivot_columns[i]] = e.reduced(i, a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RowEchelon e = rref(std::move(aug));
  if (e.pivot_columns.size() < n || (n > 0 && e.pivot_columns[n - 1] != n - 1)) return std::nullopt;
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = e.reduced(r, n + c);
  return out;
}

CycloScalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant: matrix is not square");
  const std::size_t n = m.rows();
  CycloScalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t r = col;
    while (r < n && m(r, col).is_zero()) ++r;
    if (r == n) return CycloScalar(0);
    if (r != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(r, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    const CycloScalar pinv = inv(m(col, col));
    for (std::size_t rr = col + 1; rr < n; ++rr) {
      if (m(rr, col).is_zero()) continue;
      const CycloScalar f = m(rr, col) * pinv;
      for (std::size_t c = col; c < n; ++c) m(rr, c) -= f * m(col, c);
    }
  }
  return det;
}

void EchelonSpan::reduce(Vector& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (v[p].is_zero()) continue;
    const CycloScalar f = v[p];
    for (std::size_t c = 0; c < dim_; ++c)
      if (!rows_[i][c].is_zero()) v[c] -= f * rows_[i][c];
  }
}

bool EchelonSpan::insert(Vector v) {
  if (v.size() != dim_) throw PreconditionError("EchelonSpan: dimension mismatch");
  reduce(v);
  auto it = std::find_if(v.begin(), v.end(), [](const CycloScalar& x) { return !x.is_zero(); });
  if (it == v.end()) return false;
  const std::size_t p = static_cast<std::size_t>(it - v.begin());
  const CycloScalar scale = inv(v[p]);
  for (auto& x : v)
    if (!x.is_zero()) x *= scale;
  // Keep earlier rows reduced against the new pivot so reduce() stays one pass.
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const CycloScalar f = row[p];
    for (std::size_t c = 0; c < dim_; ++c)
      if (!v[c].is_zero()) row[c] -= f * v[c];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool EchelonSpan::contains(Vector v) const {
  if (v.size() != dim_) throw PreconditionError("EchelonSpan: dimension mismatch");
  reduce(v);
  return is_zero(v);
}

}  // namespace nilverify
