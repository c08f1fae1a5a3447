#pragma once

// Dense residue arithmetic for the exhaustive F_p scans. Results are
// cross-checked against the polynomial routines in the tests.

#include <cstdint>
#include <optional>
#include <vector>

#include "jalg/algebra.hpp"
#include "jalg/matched_pair.hpp"

namespace jalg::detail {

using Res = std::uint32_t;
/// Row-major matrix, column j = image of e_j.
using DenseMatrix = std::vector<Res>;

struct DenseBilinear {
  std::size_t l = 0, r = 0, o = 0;
  std::vector<Res> t;

  static DenseBilinear from(const Bilinear& b);
  Res at(std::size_t i, std::size_t j, std::size_t k) const { return t[(i * r + j) * o + k]; }
  /// out += x * y through the tensor.
  void apply(const Res* x, const Res* y, Res* out, Res p) const;
};

struct DensePair {
  Res p = 0;
  std::size_t n = 0;  // dim A
  std::size_t m = 0;  // dim V
  DenseBilinear a, v, right, left;

  static DensePair from(const MatchedPair& mp);
};

/// Throws std::invalid_argument unless the field is F_p and entries are constant.
Res prime_of(const Algebra& a);

DenseMatrix to_dense(const Matrix& m);
Matrix from_dense(const DenseMatrix& d, std::size_t rows, std::size_t cols, Field field);

bool dense_invertible(const DenseMatrix& m, std::size_t n, Res p);
/// m: source dim n -> target dim k.
bool dense_hom(const DenseBilinear& a, const DenseBilinear& b, const DenseMatrix& m, Res p);

/// Least invertible homomorphism A -> B in row-major lex order.
std::optional<DenseMatrix> least_isomorphism(const DenseBilinear& a, const DenseBilinear& b, Res p);

/// Deformation condition r(xy) - r(x)r(y) = x|>r(y) + y|>r(x) - r(x<|r(y) + y<|r(x)) on basis pairs.
bool dense_deformation(const DensePair& dp, const DenseMatrix& r);
/// Candidates ordered by the coordinates of r(e_1), then r(e_2), ...
std::vector<DenseMatrix> dense_enumerate_deformations(const DensePair& dp, std::uint64_t budget);
/// Equivalence condition for sigma between r and s.
bool dense_equiv(const DensePair& dp, const DenseMatrix& r, const DenseMatrix& s, const DenseMatrix& sigma);
/// All invertible n x n matrices in row-major lex order.
std::vector<DenseMatrix> invertible_matrices(std::size_t n, Res p);

/// Product table of B_r: x._r y = xy + x<|r(y) + y<|r(x).
DenseBilinear dense_deformed(const DensePair& dp, const DenseMatrix& r);

}  // namespace jalg::detail
