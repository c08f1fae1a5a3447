#include "dense_fp.hpp"

#include <stdexcept>

namespace jalg::detail {

namespace {

Res residue_of(const Poly& p) {
  auto c = p.constant();
  if (!c) throw std::invalid_argument("dense kernel needs constant structure constants");
  return c->residue();
}

using Vec = std::vector<Res>;

Vec mat_vec(const DenseMatrix& m, std::size_t rows, std::size_t cols, const Res* v, Res p) {
  Vec out(rows, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols; ++c) acc += std::uint64_t{m[r * cols + c]} * v[c];
    out[r] = static_cast<Res>(acc % p);
  }
  return out;
}

Vec column(const DenseMatrix& m, std::size_t rows, std::size_t cols, std::size_t j) {
  Vec out(rows);
  for (std::size_t r = 0; r < rows; ++r) out[r] = m[r * cols + j];
  return out;
}

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

Vec apply(const DenseBilinear& b, const Vec& x, const Vec& y, Res p) {
  Vec out(b.o, 0);
  b.apply(x.data(), y.data(), out.data(), p);
  return out;
}

void add_into(Vec& acc, const Vec& v, Res p) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = (acc[i] + v[i]) % p;
}

void sub_into(Vec& acc, const Vec& v, Res p) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = (acc[i] + p - v[i]) % p;
}

bool next_digits(std::vector<Res>& digits, Res base) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

Res inv_mod(Res a, Res p) {
  std::uint64_t result = 1;
  std::uint64_t base = a;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Res>(result);
}

}  // namespace

DenseBilinear DenseBilinear::from(const Bilinear& b) {
  DenseBilinear d;
  d.l = b.left_dim();
  d.r = b.right_dim();
  d.o = b.out_dim();
  d.t.resize(d.l * d.r * d.o);
  for (std::size_t i = 0; i < d.l; ++i) {
    for (std::size_t j = 0; j < d.r; ++j) {
      for (std::size_t k = 0; k < d.o; ++k) d.t[(i * d.r + j) * d.o + k] = residue_of(b.at(i, j, k));
    }
  }
  return d;
}

void DenseBilinear::apply(const Res* x, const Res* y, Res* out, Res p) const {
  for (std::size_t i = 0; i < l; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (!y[j]) continue;
      const std::uint64_t xy = std::uint64_t{x[i]} * y[j] % p;
      const Res* row = &t[(i * r + j) * o];
      for (std::size_t k = 0; k < o; ++k) {
        if (row[k]) out[k] = static_cast<Res>((out[k] + xy * row[k]) % p);
      }
    }
  }
}

DensePair DensePair::from(const MatchedPair& mp) {
  DensePair d;
  d.p = prime_of(mp.A);
  prime_of(mp.V);
  d.n = mp.A.dim();
  d.m = mp.V.dim();
  d.a = DenseBilinear::from(mp.A.table());
  d.v = DenseBilinear::from(mp.V.table());
  d.right = DenseBilinear::from(mp.right);
  d.left = DenseBilinear::from(mp.left);
  return d;
}

Res prime_of(const Algebra& a) {
  if (!a.field().is_prime()) throw std::invalid_argument("exhaustive search needs a prime field");
  if (a.uses_parameters()) throw std::invalid_argument("exhaustive search needs constant structure constants");
  return a.field().modulus();
}

DenseMatrix to_dense(const Matrix& m) {
  DenseMatrix d(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) d[r * m.cols() + c] = m(r, c).residue();
  }
  return d;
}

Matrix from_dense(const DenseMatrix& d, std::size_t rows, std::size_t cols, Field field) {
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(field, static_cast<long>(d[r * cols + c]));
  }
  return m;
}

bool dense_invertible(const DenseMatrix& m, std::size_t n, Res p) {
  auto mul = [p](std::uint64_t a, std::uint64_t b) { return a * b % p; };
  if (n == 1) return m[0] != 0;
  if (n == 2) return (mul(m[0], m[3]) + p - mul(m[1], m[2])) % p != 0;
  if (n == 3) {
    const std::uint64_t pos = mul(mul(m[0], m[4]), m[8]) + mul(mul(m[1], m[5]), m[6]) + mul(mul(m[2], m[3]), m[7]);
    const std::uint64_t neg = mul(mul(m[2], m[4]), m[6]) + mul(mul(m[0], m[5]), m[7]) + mul(mul(m[1], m[3]), m[8]);
    return (pos % p + p - neg % p) % p != 0;
  }
  DenseMatrix a = m;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot * n + c] == 0) ++pivot;
    if (pivot == n) return false;
    for (std::size_t k = 0; k < n; ++k) std::swap(a[pivot * n + k], a[c * n + k]);
    const Res inv = inv_mod(a[c * n + c], p);
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::uint64_t f = mul(a[r * n + c], inv);
      if (!f) continue;
      for (std::size_t k = c; k < n; ++k) a[r * n + k] = static_cast<Res>((a[r * n + k] + p - mul(f, a[c * n + k])) % p);
    }
  }
  return true;
}

bool dense_hom(const DenseBilinear& a, const DenseBilinear& b, const DenseMatrix& m, Res p) {
  const std::size_t n = a.l;
  const std::size_t k = b.l;
  std::vector<Vec> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(column(m, k, n, j));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Vec lhs = mat_vec(m, k, n, &a.t[(i * n + j) * n], p);
      const Vec rhs = apply(b, images[i], images[j], p);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::optional<DenseMatrix> least_isomorphism(const DenseBilinear& a, const DenseBilinear& b, Res p) {
  const std::size_t n = a.l;
  if (b.l != n) return std::nullopt;
  if (n == 0) return DenseMatrix{};
  DenseMatrix m(n * n, 0);
  do {
    if (dense_invertible(m, n, p) && dense_hom(a, b, m, p)) return m;
  } while (next_digits(m, p));
  return std::nullopt;
}

bool dense_deformation(const DensePair& dp, const DenseMatrix& r) {
  const Res p = dp.p;
  const std::size_t n = dp.n;
  const std::size_t m = dp.m;
  std::vector<Vec> images;
  for (std::size_t j = 0; j < m; ++j) images.push_back(column(r, n, m, j));
  for (std::size_t i = 0; i < m; ++i) {
    const Vec ei = unit(m, i);
    for (std::size_t j = i; j < m; ++j) {
      const Vec ej = unit(m, j);
      Vec lhs = mat_vec(r, n, m, &dp.v.t[(i * m + j) * m], p);
      sub_into(lhs, apply(dp.a, images[i], images[j], p), p);
      Vec rhs = apply(dp.left, ei, images[j], p);
      add_into(rhs, apply(dp.left, ej, images[i], p), p);
      Vec inner = apply(dp.right, ei, images[j], p);
      add_into(inner, apply(dp.right, ej, images[i], p), p);
      sub_into(rhs, mat_vec(r, n, m, inner.data(), p), p);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::vector<DenseMatrix> dense_enumerate_deformations(const DensePair& dp, std::uint64_t budget) {
  const std::size_t n = dp.n;
  const std::size_t m = dp.m;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * m; ++i) {
    total *= dp.p;
    if (total > budget) throw std::length_error("deformation enumeration exceeds the candidate budget");
  }
  std::vector<DenseMatrix> out;
  // digits[j * n + i] is coordinate i of r(e_j)
  std::vector<Res> digits(n * m, 0);
  DenseMatrix r(n * m, 0);
  do {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < n; ++i) r[i * m + j] = digits[j * n + i];
    }
    if (dense_deformation(dp, r)) out.push_back(r);
  } while (next_digits(digits, dp.p));
  return out;
}

bool dense_equiv(const DensePair& dp, const DenseMatrix& r, const DenseMatrix& s, const DenseMatrix& sigma) {
  const Res p = dp.p;
  const std::size_t n = dp.n;
  const std::size_t m = dp.m;
  std::vector<Vec> sig;
  std::vector<Vec> rimg;
  for (std::size_t j = 0; j < m; ++j) {
    sig.push_back(column(sigma, m, m, j));
    rimg.push_back(column(r, n, m, j));
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Vec ei = unit(m, i);
    for (std::size_t j = i; j < m; ++j) {
      const Vec ej = unit(m, j);
      Vec lhs = mat_vec(sigma, m, m, &dp.v.t[(i * m + j) * m], p);
      sub_into(lhs, apply(dp.v, sig[i], sig[j], p), p);
      Vec rhs = apply(dp.right, sig[i], mat_vec(s, n, m, sig[j].data(), p), p);
      sub_into(rhs, mat_vec(sigma, m, m, apply(dp.right, ei, rimg[j], p).data(), p), p);
      add_into(rhs, apply(dp.right, sig[j], mat_vec(s, n, m, sig[i].data(), p), p), p);
      sub_into(rhs, mat_vec(sigma, m, m, apply(dp.right, ej, rimg[i], p).data(), p), p);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::vector<DenseMatrix> invertible_matrices(std::size_t n, Res p) {
  std::vector<DenseMatrix> out;
  if (n == 0) return {DenseMatrix{}};
  DenseMatrix m(n * n, 0);
  do {
    if (dense_invertible(m, n, p)) out.push_back(m);
  } while (next_digits(m, p));
  return out;
}

DenseBilinear dense_deformed(const DensePair& dp, const DenseMatrix& r) {
  const Res p = dp.p;
  const std::size_t n = dp.n;
  const std::size_t m = dp.m;
  DenseBilinear out;
  out.l = out.r = out.o = m;
  out.t.assign(m * m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Vec c(dp.v.t.begin() + static_cast<std::ptrdiff_t>((i * m + j) * m),
            dp.v.t.begin() + static_cast<std::ptrdiff_t>((i * m + j + 1) * m));
      add_into(c, apply(dp.right, unit(m, i), column(r, n, m, j), p), p);
      add_into(c, apply(dp.right, unit(m, j), column(r, n, m, i), p), p);
      for (std::size_t k = 0; k < m; ++k) out.t[(i * m + j) * m + k] = c[k];
    }
  }
  return out;
}

}  // namespace jalg::detail
