#pragma once

// Homomorphisms, morphism quadruples between bicrossed products,
// isomorphism search and small invariants.

#include <cstdint>
#include <optional>
#include <string>

#include "jalg/algebra.hpp"
#include "jalg/matched_pair.hpp"

namespace jalg {

/// f(e_i e_j) = f(e_i) f(e_j) for all basis pairs; identically in the
/// parameters when entries are polynomials.
bool hom_check(const LinearMap& f, const Algebra& a, const Algebra& b);

/// r: A -> A', s: A -> V', t: V -> A', q: V -> V'.
struct MorphismQuadruple {
  LinearMap r;
  LinearMap s;
  LinearMap t;
  LinearMap q;

  friend bool operator==(const MorphismQuadruple&, const MorphismQuadruple&) = default;
};

/// C1-C6 on basis pairs.
Verdict quadruple_check(const MorphismQuadruple& qd, const MatchedPair& src, const MatchedPair& dst);
/// psi(a, x) = (r(a) + t(x), s(a) + q(x)).
LinearMap quadruple_to_map(const MorphismQuadruple& qd, const MatchedPair& src, const MatchedPair& dst);
MorphismQuadruple map_to_quadruple(const LinearMap& psi, const MatchedPair& src, const MatchedPair& dst);

enum class IsoMode { exhaustive, invariants };
enum class IsoOutcome { isomorphic, non_isomorphic, unknown };

struct IsoVerdict {
  IsoOutcome outcome = IsoOutcome::unknown;
  std::optional<LinearMap> witness;  // A -> B
  std::string invariant;             // certificate name for non_isomorphic
  std::string source_value;
  std::string target_value;
  std::string note;
};

std::string to_string(IsoOutcome outcome);

/// Exhaustive mode: F_p, dim <= 3, returns the least witness in row-major
/// order of its matrix. Invariants mode: compares exact invariants, then
/// scans matrices with entries of height <= `height`, at most `budget`
/// candidates.
IsoVerdict iso_search(const Algebra& a, const Algebra& b, IsoMode mode, std::uint32_t height = 2,
                      std::uint64_t budget = 2'000'000);

struct Signature {
  std::size_t product_span = 0;  // dim A^2
  std::size_t cube_span = 0;     // dim A^2 A
  std::size_t annihilator = 0;
  bool has_unit = false;
  std::size_t trace_rank = 0;    // rank of (x, y) -> tr L_{xy}
  std::size_t idempotents = 0;   // nonzero solutions of e^2 = e found
  bool idempotents_exact = false;

  friend bool operator==(const Signature&, const Signature&) = default;
  std::string to_string() const;
};

/// Over F_p the idempotent count is exact (all p^n vectors); over Q it
/// counts solutions with coordinates of height <= `height`.
Signature invariants(const Algebra& a, std::uint32_t height = 3);
/// Signature of a 2-dimensional Jordan algebra.
Signature classify_dim2(const Algebra& a, std::uint32_t height = 3);

}  // namespace jalg
