#pragma once

// Independent reference computations for the tests: plain integer tables
// mod p and GMP rational tables, evaluated at concrete points. Only the
// raw structure constants are read from library objects.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "jalg/algebra.hpp"
#include "jalg/matched_pair.hpp"

namespace oracle {

using i64 = std::int64_t;

inline i64 mod(i64 x, i64 p) { return ((x % p) + p) % p; }

/// t[(i * r + j) * o + k], entries reduced mod p.
struct ModTensor {
  i64 p = 5;
  std::size_t l = 0, r = 0, o = 0;
  std::vector<i64> t;

  ModTensor() = default;
  ModTensor(i64 prime, std::size_t left, std::size_t right, std::size_t out)
      : p(prime), l(left), r(right), o(out), t(left * right * out, 0) {}

  i64& at(std::size_t i, std::size_t j, std::size_t k) { return t[(i * r + j) * o + k]; }
  i64 at(std::size_t i, std::size_t j, std::size_t k) const { return t[(i * r + j) * o + k]; }

  std::vector<i64> operator()(const std::vector<i64>& x, const std::vector<i64>& y) const {
    std::vector<i64> out(o, 0);
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < o; ++k) out[k] = mod(out[k] + x[i] * y[j] % p * at(i, j, k), p);
    return out;
  }
};

inline ModTensor mod_tensor(const jalg::Bilinear& b, i64 p) {
  ModTensor m(p, b.left_dim(), b.right_dim(), b.out_dim());
  for (std::size_t i = 0; i < m.l; ++i)
    for (std::size_t j = 0; j < m.r; ++j)
      for (std::size_t k = 0; k < m.o; ++k) {
        const jalg::Scalar c = *b.at(i, j, k).constant();
        m.at(i, j, k) = c.field().is_prime() ? static_cast<i64>(c.residue()) : 0;
        if (c.field().is_rational()) {
          mpz_class num = c.rational().get_num() % p;
          mpz_class den = c.rational().get_den() % p;
          i64 inv = 1;
          for (i64 e = 0; e < p - 2; ++e) inv = inv * den.get_si() % p;
          m.at(i, j, k) = mod(num.get_si() * inv, p);
        }
      }
  return m;
}

inline std::vector<i64> add(std::vector<i64> a, const std::vector<i64>& b, i64 p) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = mod(a[i] + b[i], p);
  return a;
}

inline std::vector<i64> sub(std::vector<i64> a, const std::vector<i64>& b, i64 p) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = mod(a[i] - b[i], p);
  return a;
}

inline std::vector<i64> scale(std::vector<i64> a, i64 c, i64 p) {
  for (auto& x : a) x = mod(x * c, p);
  return a;
}

/// Calls f on every vector of F_p^n.
template <class F>
void for_all_vectors(std::size_t n, i64 p, F&& f) {
  std::vector<i64> v(n, 0);
  while (true) {
    f(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) return;
  }
}

/// (a^2 b) a = a^2 (b a) for every a in F_p^n and every basis vector b.
inline bool jordan_exhaustive(const ModTensor& m) {
  bool ok = true;
  for_all_vectors(m.l, m.p, [&](const std::vector<i64>& a) {
    if (!ok) return;
    const auto a2 = m(a, a);
    for (std::size_t j = 0; j < m.l && ok; ++j) {
      std::vector<i64> b(m.l, 0);
      b[j] = 1;
      if (m(m(a2, b), a) != m(a2, m(b, a))) ok = false;
    }
  });
  return ok;
}

/// Rational table with GMP entries.
struct RatTensor {
  std::size_t n = 0;
  std::vector<mpq_class> t;

  std::vector<mpq_class> operator()(const std::vector<mpq_class>& x, const std::vector<mpq_class>& y) const {
    std::vector<mpq_class> out(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * t[(i * n + j) * n + k];
    return out;
  }
};

inline RatTensor rat_tensor(const jalg::Algebra& a) {
  RatTensor r{a.dim(), std::vector<mpq_class>(a.dim() * a.dim() * a.dim())};
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) r.t[(i * a.dim() + j) * a.dim() + k] = a.sc(i, j, k).constant()->rational();
  return r;
}

/// Jordan identity at `samples` random points with small integer coordinates.
inline bool jordan_sampled(const RatTensor& m, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (int s = 0; s < samples; ++s) {
    std::vector<mpq_class> a(m.n), b(m.n);
    for (auto& x : a) x = coord(rng);
    for (auto& x : b) x = coord(rng);
    const auto a2 = m(a, a);
    if (m(m(a2, b), a) != m(a2, m(b, a))) return false;
  }
  return true;
}

/// Bicrossed product table mod p built straight from the defining formula.
inline ModTensor bicross_mod(const ModTensor& a, const ModTensor& v, const ModTensor& right, const ModTensor& left) {
  const std::size_t n = a.l, m = v.l, d = n + m;
  const i64 p = a.p;
  ModTensor e(p, d, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<i64> ai(n, 0), aj(n, 0), xi(m, 0), xj(m, 0);
      (i < n ? ai[i] : xi[i - n]) = 1;
      (j < n ? aj[j] : xj[j - n]) = 1;
      // (a,x)(b,y) = (ab + x|>b + y|>a, x<|b + y<|a + xy)
      const auto first = add(add(a(ai, aj), left(xi, aj), p), left(xj, ai), p);
      const auto second = add(add(right(xi, aj), right(xj, ai), p), v(xi, xj), p);
      for (std::size_t k = 0; k < n; ++k) e.at(i, j, k) = first[k];
      for (std::size_t k = 0; k < m; ++k) e.at(i, j, n + k) = second[k];
    }
  return e;
}

/// Column-major images: r[j] = r(e_j).
using ModMap = std::vector<std::vector<i64>>;

inline std::vector<i64> apply(const ModMap& f, const std::vector<i64>& x, std::size_t target, i64 p) {
  std::vector<i64> out(target, 0);
  for (std::size_t j = 0; j < f.size(); ++j) out = add(out, scale(f[j], x[j], p), p);
  return out;
}

/// Deformation condition at every pair of basis vectors.
inline bool deformation_holds(const ModTensor& a, const ModTensor& v, const ModTensor& right, const ModTensor& left,
                              const ModMap& r) {
  const i64 p = a.p;
  const std::size_t n = a.l, m = v.l;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<i64> x(m, 0), y(m, 0);
      x[i] = 1;
      y[j] = 1;
      const auto rx = r[i], ry = r[j];
      const auto lhs = sub(apply(r, v(x, y), n, p), a(rx, ry), p);
      const auto rhs = sub(add(left(x, ry), left(y, rx), p), apply(r, add(right(x, ry), right(y, rx), p), n, p), p);
      if (lhs != rhs) return false;
    }
  return true;
}

inline bool invertible2(const std::vector<i64>& m, i64 p) { return mod(m[0] * m[3] - m[1] * m[2], p) != 0; }

}  // namespace oracle
