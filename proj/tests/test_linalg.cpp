#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "jalg/linalg.hpp"

using namespace jalg;

namespace {
const Field Q = Field::rationals();
const Field F7 = Field::prime(7);

Matrix random_matrix(Field k, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-3, 3);
  Matrix m(k, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar(k, d(rng));
  return m;
}

// Leibniz expansion over all permutations.
Scalar leibniz(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = Scalar::zero(m.field());
  do {
    Scalar term = Scalar::one(m.field());
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      term *= m(i, perm[i]);
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}
}  // namespace

TEST_CASE("determinant agrees with the Leibniz formula") {
  std::mt19937_64 rng(7);
  for (Field k : {Q, F7}) {
    for (int trial = 0; trial < 40; ++trial) {
      const Matrix m = random_matrix(k, 1 + trial % 4, rng);
      CHECK(determinant(m) == leibniz(m));
    }
  }
}

TEST_CASE("inverse and solve") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix m = random_matrix(Q, 3, rng);
    const auto inv = inverse(m);
    CHECK(inv.has_value() == !determinant(m).is_zero());
    if (inv) {
      CHECK(m * *inv == Matrix::identity(Q, 3));
      const Vector b{Scalar(Q, 1), Scalar(Q, -2), Scalar(Q, 5)};
      const auto x = solve(m, b);
      REQUIRE(x);
      CHECK(m.apply(*x) == b);
    }
  }
  Matrix singular = Matrix::from_rows(Q, 2, {{Scalar(Q, 1), Scalar(Q, 2)}, {Scalar(Q, 2), Scalar(Q, 4)}});
  CHECK_FALSE(inverse(singular));
  CHECK_FALSE(solve(singular, {Scalar(Q, 1), Scalar(Q, 0)}));
}

TEST_CASE("rank-nullity") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = random_matrix(F7, 4, rng);
    for (std::size_t c = 0; c < 4; ++c) m(3, c) = m(0, c) + m(1, c);
    const auto ns = nullspace(m);
    CHECK(rank(m) + ns.size() == 4);
    for (const auto& v : ns) CHECK(is_zero(m.apply(v)));
  }
}

TEST_CASE("subspaces") {
  const auto e = [](std::size_t i) { return unit_vector(Q, 3, i); };
  const Subspace xy = Subspace::span(Q, 3, {e(0), e(1)});
  const Subspace diag = Subspace::span(Q, 3, {Vector{Scalar(Q, 1), Scalar(Q, 1), Scalar(Q, 1)}});
  CHECK(xy == Subspace::coordinate(Q, 3, {0, 1}));
  CHECK(xy == Subspace::span(Q, 3, {Vector{Scalar(Q, 1), Scalar(Q, 1), Scalar(Q, 0)}, e(1), e(1)}));
  CHECK(subspace_sum(xy, diag) == Subspace::whole(Q, 3));
  CHECK(intersect(xy, diag).dim() == 0);
  CHECK(intersect(xy, Subspace::coordinate(Q, 3, {1, 2})) == Subspace::coordinate(Q, 3, {1}));
  CHECK(xy.contains(e(0)));
  CHECK_FALSE(xy.contains(e(2)));
  const Vector v{Scalar(Q, 2), Scalar(Q, -3), Scalar(Q, 0)};
  const Vector c = xy.coordinates(v);
  CHECK(c == Vector{Scalar(Q, 2), Scalar(Q, -3)});
  CHECK_THROWS_AS(xy.coordinates(e(2)), std::invalid_argument);
  CHECK(Subspace::zero(Q, 3).dim() == 0);
}
