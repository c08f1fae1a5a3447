#include "jalg/linalg.hpp"

#include <stdexcept>

namespace jalg {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix/vector dimension mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix m(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
    }
  }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

EchelonForm row_reduce(Matrix m) {
  EchelonForm out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(lead_row, k));
    }
    const Scalar inv = m(lead_row, c).inverse();
    for (std::size_t k = 0; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      const Scalar factor = m(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) -= factor * m(lead_row, k);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Matrix a = m;
  Scalar det = Scalar::one(m.field());
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c).is_zero()) ++pivot;
    if (pivot == n) return Scalar::zero(m.field());
    if (pivot != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(pivot, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    const Scalar inv = a(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const Scalar factor = a(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) a(r, k) -= factor * a(c, k);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar::one(m.field());
  }
  EchelonForm e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  }
  return inv;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  EchelonForm e = row_reduce(std::move(aug));
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, m.cols());
  }
  return x;
}

std::vector<Vector> nullspace(const Matrix& m) {
  EchelonForm e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[free] = Scalar::one(m.field());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector zero_vector(Field field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

Vector unit_vector(Field field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = Scalar::one(field);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(Field field, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s;
  s.field_ = field;
  s.ambient_dim_ = ambient_dim;
  if (vectors.empty()) return s;
  EchelonForm e = row_reduce(Matrix::from_rows(field, ambient_dim, vectors));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) s.basis_.push_back(e.reduced.row(i));
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::zero(Field field, std::size_t ambient_dim) {
  return span(field, ambient_dim, {});
}

Subspace Subspace::whole(Field field, std::size_t ambient_dim) {
  std::vector<std::size_t> all(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) all[i] = i;
  return coordinate(field, ambient_dim, all);
}

Subspace Subspace::coordinate(Field field, std::size_t ambient_dim,
                              const std::vector<std::size_t>& indices) {
  std::vector<Vector> vs;
  for (auto i : indices) vs.push_back(unit_vector(field, ambient_dim, i));
  return span(field, ambient_dim, vs);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("vector outside ambient space");
  Vector rest = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar c = rest[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < ambient_dim_; ++k) rest[k] -= c * basis_[i][k];
  }
  return is_zero(rest);
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw std::invalid_argument("vector is not in the subspace");
  Vector coords;
  coords.reserve(basis_.size());
  for (auto p : pivots_) coords.push_back(v[p]);
  return coords;
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim() || u.field() != w.field()) {
    throw std::invalid_argument("subspaces of different ambient spaces");
  }
  std::vector<Vector> all = u.basis();
  all.insert(all.end(), w.basis().begin(), w.basis().end());
  return Subspace::span(u.field(), u.ambient_dim(), all);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim() || u.field() != w.field()) {
    throw std::invalid_argument("subspaces of different ambient spaces");
  }
  const std::size_t n = u.ambient_dim();
  const std::size_t du = u.dim();
  const std::size_t dw = w.dim();
  // sum alpha_i u_i - sum beta_j w_j = 0
  Matrix m(u.field(), n, du + dw);
  for (std::size_t i = 0; i < du; ++i) {
    for (std::size_t k = 0; k < n; ++k) m(k, i) = u.basis()[i][k];
  }
  for (std::size_t j = 0; j < dw; ++j) {
    for (std::size_t k = 0; k < n; ++k) m(k, du + j) = -w.basis()[j][k];
  }
  std::vector<Vector> vs;
  for (const auto& sol : nullspace(m)) {
    Vector v = zero_vector(u.field(), n);
    for (std::size_t i = 0; i < du; ++i) {
      if (sol[i].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) v[k] += sol[i] * u.basis()[i][k];
    }
    vs.push_back(std::move(v));
  }
  return Subspace::span(u.field(), n, vs);
}

}  // namespace jalg
