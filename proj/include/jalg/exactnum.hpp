#pragma once

// Exact scalars over Q and F_p (p >= 5) and sparse multivariate polynomials
// over them.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace jalg {

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Base field: the rationals, or a prime field F_p with p >= 5.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  static Field prime(std::uint32_t p);
  /// Accepts `Q`, `F5`, `F<5>`.
  static Field parse(std::string_view text);

  constexpr bool is_rational() const { return modulus_ == 0; }
  constexpr bool is_prime() const { return modulus_ != 0; }
  constexpr std::uint32_t modulus() const { return modulus_; }
  std::string name() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  friend class Scalar;
  explicit constexpr Field(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_ = 0;
};

class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  Scalar(Field field, long value);
  /// Rational value mapped into `field`; throws DivisionByZero when the
  /// denominator vanishes mod p.
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field field) { return Scalar(field, 0); }
  static Scalar one(Field field) { return Scalar(field, 1); }
  /// `n`, `-n` or `n/d`.
  static Scalar parse(std::string_view text, Field field);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const;
  std::uint32_t residue() const;

  Scalar inverse() const;
  Scalar to_field(Field target) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Deterministic total order (numeric for Q, residue order for F_p).
  friend bool operator<(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };
  explicit Scalar(Residue r) : value_(r) {}
  void require_same_field(const Scalar& other) const;

  std::variant<mpq_class, Residue> value_;
};

using Var = std::uint16_t;
using VarNames = std::vector<std::string>;

/// Total number of indeterminate slots; the first kParamSlots are reserved
/// for user parameters (alpha, beta, ...), the rest for generic coordinates.
inline constexpr std::size_t kMaxVars = 64;
inline constexpr Var kParamSlots = 8;

std::string var_name(const VarNames& names, Var v);

class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(Var v, unsigned exponent = 1);

  unsigned degree() const { return degree_; }
  unsigned exponent(Var v) const { return exponents_[v]; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;

  /// Graded lexicographic, variable 0 most significant.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.exponents_ <=> b.exponents_;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::string to_string(const VarNames& names = {}) const;

 private:
  std::array<std::uint8_t, kMaxVars> exponents_{};
  std::uint16_t degree_ = 0;
};

/// Polynomial with Scalar coefficients; canonical form is a term list in
/// strictly decreasing monomial order with no zero coefficients.
class Poly {
 public:
  struct Term {
    Monomial monomial;
    Scalar coeff;
  };

  explicit Poly(Field field = Field{}) : field_(field) {}
  Poly(const Scalar& constant);  // NOLINT(google-explicit-constructor)
  static Poly variable(Field field, Var v);
  static Poly term(const Scalar& coeff, const Monomial& monomial);

  Field field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value when constant, otherwise nullopt.
  std::optional<Scalar> constant() const;
  std::span<const Term> terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  bool uses_parameters() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Scalar& c);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const Scalar& c) { return lhs *= c; }
  friend Poly operator*(const Scalar& c, Poly rhs) { return rhs *= c; }

  /// Adds c * p into this polynomial.
  void add_scaled(const Poly& p, const Scalar& c);

  /// Throws std::out_of_range when a variable of the polynomial is unassigned.
  Scalar evaluate(const std::map<Var, Scalar>& assignment) const;
  Scalar evaluate(const std::map<std::string, Scalar>& assignment,
                  const VarNames& names) const;
  Poly to_field(Field target) const;

  friend bool operator==(const Poly& a, const Poly& b);

  std::string to_string(const VarNames& names = {}) const;

 private:
  void require_same_field(const Poly& other) const;
  static std::vector<Term> merge(const std::vector<Term>& a,
                                 const std::vector<Term>& b, bool subtract);

  Field field_;
  std::vector<Term> terms_;
};

inline bool poly_is_zero(const Poly& p) { return p.is_zero(); }

}  // namespace jalg
