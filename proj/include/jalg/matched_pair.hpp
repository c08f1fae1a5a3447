#pragma once

// Matched pairs of Jordan algebras, bicrossed and semidirect products,
// factorizations and their canonical matched pairs.

#include <optional>
#include <vector>

#include "jalg/algebra.hpp"

namespace jalg {

enum class PairState { unchecked, matched, not_matched };

/// (A, V, <|, |>) with x <| a in V and x |> a in A for x in V, a in A.
/// Both tensors are indexed [x][a][out].
struct MatchedPair {
  Algebra A;
  Algebra V;
  Bilinear right;  // V x A -> V
  Bilinear left;   // V x A -> A
  PairState state = PairState::unchecked;

  MatchedPair() = default;
  /// Zero actions.
  MatchedPair(Algebra a, Algebra v);

  Field field() const { return A.field(); }
  VarNames params() const { return merge_params(A.params(), V.params()); }
  Element act_right(const Element& x, const Element& a) const { return right.apply(x, a); }
  Element act_left(const Element& x, const Element& a) const { return left.apply(x, a); }

  /// Tensors and algebras only; labels and state are ignored.
  friend bool operator==(const MatchedPair& p, const MatchedPair& q) {
    return p.A == q.A && p.V == q.V && p.right == q.right && p.left == q.left;
  }
};

enum class CheckMode { all, first_failure };

/// Same tensors reduced to another field; the state is reset.
MatchedPair pair_over(const MatchedPair& mp, Field target);

/// (x <| a^2) <| a = (x <| a) <| a^2.
Verdict right_action_check(const MatchedPair& mp);
/// x |> (x^2 |> a) = x^2 |> (x |> a); V is the acting algebra.
Verdict left_action_check(const MatchedPair& mp);
/// Jordan identity of both factors, both action axioms and MP1-MP6.
Verdict mp_check(const MatchedPair& mp, CheckMode mode = CheckMode::all);
/// Runs mp_check and records the verdict in the pair's state.
bool verify_pair(MatchedPair& mp);

/// (a,x)(b,y) = (ab + x|>b + y|>a, x<|b + y<|a + xy) without any checks.
/// Basis: A labels followed by V labels.
Algebra bicrossed_algebra(const MatchedPair& mp);

struct BicrossedProduct {
  Algebra product;
  Subspace a_embedding;
  Subspace v_embedding;
  MatchedPair pair;
};

/// Throws std::invalid_argument when the pair fails mp_check.
BicrossedProduct bicross(const MatchedPair& mp);

/// Jordan factors, left action axiom and L1-L3.
Verdict semidirect_left_check(const Algebra& a, const Algebra& v, const Bilinear& left);
/// Jordan factors, right action axiom and R1-R3.
Verdict semidirect_right_check(const Algebra& a, const Algebra& v, const Bilinear& right);
Algebra semidirect_left(const Algebra& a, const Algebra& v, const Bilinear& left);
Algebra semidirect_right(const Algebra& a, const Algebra& v, const Bilinear& right);

/// E = A + B with A, B complementary subalgebras.
struct Factorization {
  Algebra E;
  Subspace A;
  Subspace B;
};

/// Throws std::invalid_argument when A, B are not complementary subalgebras.
void validate(const Factorization& f);
Factorization factorization_of(const BicrossedProduct& bp);
/// Projection of E onto A along B, as an endomorphism of E.
LinearMap projection(const Factorization& f);
/// x |> a = pi_A(xa), x <| a = xa - pi_A(xa).
MatchedPair canonical_pair(const Factorization& f);

struct SplitDecomposition {
  Subspace image;          // A = im p
  Subspace kernel;         // V = ker p
  MatchedPair pair;        // right action only
  Algebra product;         // A x| V
  LinearMap psi;           // (a, x) -> a + x into E
};

/// Throws std::invalid_argument unless p is an idempotent algebra map.
SplitDecomposition split_mono_decompose(const Algebra& e, const LinearMap& p);

/// A0 abelian, V = k (basis `t`), <| = 0, t |> a = D(a).
MatchedPair pair_from_nilpotent(const Algebra& a0, const LinearMap& d);

struct AbelianCandidate {
  Vector lambda;  // t <| e_j = lambda_j t
  Matrix d;       // t |> e_j = D e_j
};

struct AbelianScan {
  std::size_t candidates = 0;
  std::vector<AbelianCandidate> valid;
  std::size_t nilpotent = 0;  // number of D with D^3 = 0
  /// valid == {(0, D) : D^3 = 0}.
  bool bijection = false;
};

/// All (lambda, D) over F_p for the abelian pair (A0 of dimension n, k0).
/// Throws std::length_error when p^(n + n^2) exceeds the budget.
AbelianScan enumerate_abelian_pairs(std::size_t n, Field field, std::uint64_t budget = 20000);

}  // namespace jalg
