#pragma once

// Text formats: `.jalg` algebras, `.jpair` matched pairs, and the
// linear-combination syntax shared with the CLI.

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jalg/algebra.hpp"
#include "jalg/matched_pair.hpp"

namespace jalg {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// `3/2 u - alpha*b + 2 alpha^2 c`, or `0`. The last factor of a term is a
/// basis label; the others are scalars or parameter powers. When
/// `new_params` is set, unknown coefficient names are appended to `params`.
Element parse_combination(std::string_view text, const std::vector<std::string>& labels, Field field,
                          VarNames& params, bool new_params = false);

/// field, dim, basis, param and `mult x y = ...` lines; `#` starts a comment.
Algebra parse_algebra(std::string_view text);
/// Canonical form: header, then the nonzero products e_i e_j with i <= j.
std::string write_algebra(const Algebra& a);

using IncludeResolver = std::function<Algebra(const std::string& reference)>;

/// `algebra A ... end` and `algebra V ... end` blocks (inline or a single
/// `@include <ref>` line), optional `param` lines, then
/// `left x . a = <A-combination>` and `right x . a = <V-combination>`.
MatchedPair parse_pair(std::string_view text, const IncludeResolver& include = {});
std::string write_pair(const MatchedPair& mp);

/// `u -> a + b; v -> alpha b`; unlisted basis vectors map to zero.
LinearMap parse_map(std::string_view text, const std::vector<std::string>& source,
                    const std::vector<std::string>& target, Field field, VarNames& params);
/// Comma separated combinations spanning a subspace, e.g. `a + b, c`.
Subspace parse_subspace(std::string_view text, const std::vector<std::string>& labels, Field field);

}  // namespace jalg
