#pragma once

// Deformation maps of a matched pair, the deformed algebras B_r, their
// equivalence and the factorization index over finite fields.

#include <cstdint>
#include <string>
#include <vector>

#include "jalg/algebra.hpp"
#include "jalg/matched_pair.hpp"

namespace jalg {

/// r: V -> A with r(xy) - r(x)r(y) = x |> r(y) + y |> r(x) - r(x <| r(y) + y <| r(x))
/// on all basis pairs, identically in the parameters.
Verdict deformation_check(const MatchedPair& mp, const LinearMap& r);

/// B_r on the basis of V: x . y = xy + x <| r(y) + y <| r(x).
/// Throws std::invalid_argument unless r passes deformation_check.
Algebra r_deform(const MatchedPair& mp, const LinearMap& r);

struct GraphComplement {
  Subspace subspace;  // {(r(x), x)} inside the bicrossed product
  LinearMap f_r;      // B_r -> A x V, x -> (r(x), x)
  Algebra deformed;   // B_r
};

/// Needs a numeric r.
GraphComplement graph_complement(const MatchedPair& mp, const LinearMap& r);

/// sigma: V -> V is an algebra isomorphism B_r -> B_s satisfying
/// sigma(xy) - sigma(x)sigma(y) = sigma(x) <| s(sigma(y)) - sigma(x <| r(y))
///                              + sigma(y) <| s(sigma(x)) - sigma(y <| r(x)).
/// Throws std::invalid_argument when sigma is singular.
Verdict equiv_check(const MatchedPair& mp, const LinearMap& r, const LinearMap& s, const LinearMap& sigma);

/// All deformation maps over F_p, ordered by the coordinates of r(e_1),
/// then r(e_2), ...  Throws std::length_error above `budget` candidates.
std::vector<LinearMap> enumerate_deformations(const MatchedPair& mp, std::uint64_t budget = 1'953'125);

struct ComplementClass {
  std::size_t representative = 0;    // least member in enumeration order
  std::vector<std::size_t> members;  // indices into ComplementReport::maps
  std::vector<LinearMap> witnesses;  // B_rep -> B_member, one per member
};

struct ComplementReport {
  std::vector<LinearMap> maps;
  std::vector<Algebra> deformed;
  std::vector<ComplementClass> classes;  // isomorphism classes of B_r
  std::vector<std::vector<std::size_t>> equiv_classes;
  bool partitions_agree = false;
  std::size_t index = 0;
  std::string note;
};

/// Isomorphism classes of the B-complements of A in A x V over F_p, by
/// exhaustive search, cross-checked against the equivalence relation on
/// deformation maps.
ComplementReport factorization_index(const MatchedPair& mp, std::uint64_t budget = 1'953'125);

struct ComplementRecovery {
  LinearMap r;      // B -> A in the echelon bases of B and A
  LinearMap v;      // B_r -> B-bar, x -> x + r(x)
  Algebra deformed;
  Algebra b_bar;
  MatchedPair pair;  // canonical pair of (E, A, B)
};

/// For another complement B-bar of A: x = u(x) + v(x) with u(x) in A and
/// v(x) in B-bar, and r = -u.
ComplementRecovery complement_recover(const Algebra& e, const Subspace& a, const Subspace& b,
                                      const Subspace& b_bar);

}  // namespace jalg
