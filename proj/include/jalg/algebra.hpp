#pragma once

// Commutative algebras given by structure constants, generic-element
// identity checks, actions, bimodules and subspace helpers.

#include <functional>
#include <string>
#include <vector>

#include "jalg/exactnum.hpp"
#include "jalg/linalg.hpp"

namespace jalg {

/// Coordinates relative to some basis; entries may be polynomials in
/// parameters and generic coordinates.
using Element = std::vector<Poly>;

Element zero_element(Field field, std::size_t dim);
Element basis_element(Field field, std::size_t dim, std::size_t i);
Element to_element(const Vector& v);
/// Throws std::invalid_argument when an entry is not constant.
Vector to_vector(const Element& e);
bool is_zero(const Element& e);
Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Scalar& c, const Element& a);
/// `1/2 u + alpha v`; parseable by the combination grammar of the file formats.
std::string format_element(const Element& e, const std::vector<std::string>& labels,
                           const VarNames& names = {});

/// Bilinear map L x R -> O given by coefficients t[i][j][k].
class Bilinear {
 public:
  Bilinear() = default;
  Bilinear(Field field, std::size_t left, std::size_t right, std::size_t out);

  Field field() const { return field_; }
  std::size_t left_dim() const { return left_; }
  std::size_t right_dim() const { return right_; }
  std::size_t out_dim() const { return out_; }

  Poly& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * right_ + j) * out_ + k]; }
  const Poly& at(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * right_ + j) * out_ + k];
  }
  Element product(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Element& value);

  Element apply(const Element& x, const Element& y) const;
  bool is_zero() const;
  bool uses_parameters() const;
  Bilinear to_field(Field target) const;

  friend bool operator==(const Bilinear& a, const Bilinear& b) = default;

 private:
  Field field_;
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::size_t out_ = 0;
  std::vector<Poly> data_;
};

enum class JordanState { unchecked, jordan, not_jordan };

class Algebra {
 public:
  Algebra() = default;
  Algebra(Field field, std::vector<std::string> basis, VarNames params = {});

  Field field() const { return mult_.field(); }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const VarNames& params() const { return params_; }
  const Bilinear& table() const { return mult_; }
  JordanState state() const { return state_; }

  /// Index of a basis label, or throws std::out_of_range.
  std::size_t index_of(const std::string& label) const;
  const Poly& sc(std::size_t i, std::size_t j, std::size_t k) const { return mult_.at(i, j, k); }
  /// Sets e_i e_j and e_j e_i.
  void set_product(std::size_t i, std::size_t j, const Element& value);

  Element multiply(const Element& x, const Element& y) const { return mult_.apply(x, y); }
  Element unit(std::size_t i) const { return basis_element(field(), dim(), i); }
  bool is_abelian() const { return mult_.is_zero(); }
  bool uses_parameters() const { return mult_.uses_parameters(); }

  Algebra over(Field target) const;
  void set_params(VarNames params) { params_ = std::move(params); }
  void relabel(std::vector<std::string> basis);

  /// Structure constants only; labels and state are ignored.
  friend bool operator==(const Algebra& a, const Algebra& b) { return a.mult_ == b.mult_; }

 private:
  friend bool verify_jordan(Algebra& a);
  std::vector<std::string> basis_;
  VarNames params_;
  Bilinear mult_;
  JordanState state_ = JordanState::unchecked;
};

/// Linear map k^source -> k^target; column j is the image of e_j.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(Field field, std::size_t source, std::size_t target);
  static LinearMap identity(Field field, std::size_t n);
  static LinearMap from_matrix(const Matrix& m);
  static LinearMap from_columns(Field field, std::size_t target, const std::vector<Element>& columns);

  Field field() const { return field_; }
  std::size_t source_dim() const { return source_; }
  std::size_t target_dim() const { return target_; }

  Poly& at(std::size_t row, std::size_t col) { return data_[row * source_ + col]; }
  const Poly& at(std::size_t row, std::size_t col) const { return data_[row * source_ + col]; }
  Element column(std::size_t j) const;
  void set_column(std::size_t j, const Element& image);

  Element apply(const Element& x) const;
  bool is_zero() const;
  bool uses_parameters() const;
  /// Throws std::invalid_argument when an entry is not constant.
  Matrix to_matrix() const;
  LinearMap evaluate(const std::map<Var, Scalar>& assignment) const;

  friend LinearMap compose(const LinearMap& outer, const LinearMap& inner);
  friend bool operator==(const LinearMap& a, const LinearMap& b) = default;

  std::string to_string(const std::vector<std::string>& source_labels,
                        const std::vector<std::string>& target_labels,
                        const VarNames& names = {}) const;

 private:
  Field field_;
  std::size_t source_ = 0;
  std::size_t target_ = 0;
  std::vector<Poly> data_;
};

// ------------------------------------------------------------ verdicts

struct Witness {
  std::string axiom;
  std::string coordinate;  // basis label of the failing coordinate
  std::string monomial;
  std::string coefficient;
};

struct Verdict {
  std::vector<std::string> checked;
  std::vector<Witness> failures;

  bool ok() const { return failures.empty(); }
  bool failed(const std::string& axiom) const;
  void merge(const Verdict& other);
  std::string summary() const;
};

/// Records `axiom` as checked and adds a witness when some coordinate of
/// `diff` is a nonzero polynomial.
void require_zero(Verdict& verdict, const std::string& axiom, const Element& diff,
                  const std::vector<std::string>& labels, const VarNames& names);

/// Allocates generic elements: fresh indeterminates for every coordinate,
/// placed after the parameter slots.
class GenericFrame {
 public:
  GenericFrame(Field field, const VarNames& params);
  Element element(const std::string& name, const std::vector<std::string>& labels);
  const VarNames& names() const { return names_; }

 private:
  Field field_;
  VarNames names_;
  Var next_ = kParamSlots;
};

/// Parameters of two objects must agree, or one side has none.
VarNames merge_params(const VarNames& a, const VarNames& b);

// -------------------------------------------------------------- checks

/// (a^2 b) a = a^2 (b a) for generic a, b.
Verdict jordan_check(const Algebra& a);
/// Runs jordan_check and records the result in the algebra's state.
bool verify_jordan(Algebra& a);

/// Symmetrization 1/2 (xy + yx) of an associative product.
Algebra jordanize(Field field, const std::vector<std::string>& basis, const Bilinear& assoc);

/// (a |> f)(b) = f(ab) on the dual basis: tensor acting(A) x A* -> A*.
Bilinear dual_action(const Algebra& a);
/// Left action X x M -> M: x |> (x^2 |> m) = x^2 |> (x |> m).
Verdict left_module_check(const Algebra& acting, const Bilinear& act,
                          const std::vector<std::string>& module_labels);
/// Right action M x X -> M: (m <| x^2) <| x = (m <| x) <| x^2.
Verdict right_module_check(const Algebra& acting, const Bilinear& act,
                           const std::vector<std::string>& module_labels);

bool complement_check(const Algebra& e, const Subspace& u, const Subspace& w);
bool subalgebra_check(const Algebra& e, const Subspace& u);
/// Algebra structure on U in its echelon basis; labels are kept for unit
/// basis vectors.
Algebra restrict(const Algebra& e, const Subspace& u);

/// Jordan bimodule given by one action tensor M x A -> M.
struct Bimodule {
  Algebra algebra;
  std::vector<std::string> labels;
  Bilinear action;
};

Verdict bimodule_check(const Bimodule& m);
Algebra null_split_extension(const Bimodule& m);

}  // namespace jalg
