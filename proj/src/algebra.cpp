#include "jalg/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jalg {

Element zero_element(Field field, std::size_t dim) { return Element(dim, Poly(field)); }

Element basis_element(Field field, std::size_t dim, std::size_t i) {
  Element e = zero_element(field, dim);
  e.at(i) = Poly(Scalar::one(field));
  return e;
}

Element to_element(const Vector& v) {
  Element e;
  e.reserve(v.size());
  for (const auto& s : v) e.emplace_back(s);
  return e;
}

Vector to_vector(const Element& e) {
  Vector v;
  v.reserve(e.size());
  for (const auto& p : e) {
    auto c = p.constant();
    if (!c) throw std::invalid_argument("element has non-constant coordinates");
    v.push_back(*c);
  }
  return v;
}

bool is_zero(const Element& e) {
  return std::all_of(e.begin(), e.end(), [](const Poly& p) { return p.is_zero(); });
}

Element operator+(const Element& a, const Element& b) {
  if (a.size() != b.size()) throw std::invalid_argument("element dimension mismatch");
  Element out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Element operator-(const Element& a, const Element& b) {
  if (a.size() != b.size()) throw std::invalid_argument("element dimension mismatch");
  Element out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Element operator*(const Scalar& c, const Element& a) {
  Element out = a;
  for (auto& p : out) p *= c;
  return out;
}

// ------------------------------------------------------------ Bilinear

Bilinear::Bilinear(Field field, std::size_t left, std::size_t right, std::size_t out)
    : field_(field), left_(left), right_(right), out_(out), data_(left * right * out, Poly(field)) {}

Element Bilinear::product(std::size_t i, std::size_t j) const {
  Element e;
  e.reserve(out_);
  for (std::size_t k = 0; k < out_; ++k) e.push_back(at(i, j, k));
  return e;
}

void Bilinear::set(std::size_t i, std::size_t j, const Element& value) {
  if (value.size() != out_) throw std::invalid_argument("product has wrong dimension");
  for (std::size_t k = 0; k < out_; ++k) at(i, j, k) = value[k];
}

Element Bilinear::apply(const Element& x, const Element& y) const {
  if (x.size() != left_ || y.size() != right_) {
    throw std::invalid_argument("bilinear map applied to elements of wrong dimension");
  }
  Element out = zero_element(field_, out_);
  for (std::size_t i = 0; i < left_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < right_; ++j) {
      if (y[j].is_zero()) continue;
      bool any = false;
      for (std::size_t k = 0; k < out_ && !any; ++k) any = !at(i, j, k).is_zero();
      if (!any) continue;
      const Poly xy = x[i] * y[j];
      for (std::size_t k = 0; k < out_; ++k) {
        const Poly& c = at(i, j, k);
        if (c.is_zero()) continue;
        if (auto s = c.constant()) {
          out[k].add_scaled(xy, *s);
        } else {
          out[k] += xy * c;
        }
      }
    }
  }
  return out;
}

bool Bilinear::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool Bilinear::uses_parameters() const {
  return std::any_of(data_.begin(), data_.end(), [](const Poly& p) { return !p.is_constant(); });
}

Bilinear Bilinear::to_field(Field target) const {
  Bilinear out(target, left_, right_, out_);
  for (std::size_t n = 0; n < data_.size(); ++n) out.data_[n] = data_[n].to_field(target);
  return out;
}

// ------------------------------------------------------------- Algebra

Algebra::Algebra(Field field, std::vector<std::string> basis, VarNames params)
    : basis_(std::move(basis)), params_(std::move(params)),
      mult_(field, basis_.size(), basis_.size(), basis_.size()) {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = i + 1; j < basis_.size(); ++j) {
      if (basis_[i] == basis_[j]) throw std::invalid_argument("duplicate basis label " + basis_[i]);
    }
  }
}

std::size_t Algebra::index_of(const std::string& label) const {
  auto it = std::find(basis_.begin(), basis_.end(), label);
  if (it == basis_.end()) throw std::out_of_range("unknown basis label '" + label + "'");
  return static_cast<std::size_t>(it - basis_.begin());
}

void Algebra::set_product(std::size_t i, std::size_t j, const Element& value) {
  mult_.set(i, j, value);
  mult_.set(j, i, value);
  state_ = JordanState::unchecked;
}

Algebra Algebra::over(Field target) const {
  Algebra out(target, basis_, params_);
  out.mult_ = mult_.to_field(target);
  return out;
}

void Algebra::relabel(std::vector<std::string> basis) {
  if (basis.size() != basis_.size()) throw std::invalid_argument("relabel: wrong number of labels");
  basis_ = std::move(basis);
}

// ----------------------------------------------------------- LinearMap

LinearMap::LinearMap(Field field, std::size_t source, std::size_t target)
    : field_(field), source_(source), target_(target), data_(source * target, Poly(field)) {}

LinearMap LinearMap::identity(Field field, std::size_t n) {
  LinearMap m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly(Scalar::one(field));
  return m;
}

LinearMap LinearMap::from_matrix(const Matrix& m) {
  LinearMap out(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = Poly(m(r, c));
  }
  return out;
}

LinearMap LinearMap::from_columns(Field field, std::size_t target,
                                  const std::vector<Element>& columns) {
  LinearMap out(field, columns.size(), target);
  for (std::size_t j = 0; j < columns.size(); ++j) out.set_column(j, columns[j]);
  return out;
}

Element LinearMap::column(std::size_t j) const {
  Element e;
  e.reserve(target_);
  for (std::size_t r = 0; r < target_; ++r) e.push_back(at(r, j));
  return e;
}

void LinearMap::set_column(std::size_t j, const Element& image) {
  if (image.size() != target_) throw std::invalid_argument("image has wrong dimension");
  for (std::size_t r = 0; r < target_; ++r) at(r, j) = image[r];
}

Element LinearMap::apply(const Element& x) const {
  if (x.size() != source_) throw std::invalid_argument("linear map applied to wrong dimension");
  Element out = zero_element(field_, target_);
  for (std::size_t c = 0; c < source_; ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < target_; ++r) {
      const Poly& m = at(r, c);
      if (m.is_zero()) continue;
      if (auto s = m.constant()) {
        out[r].add_scaled(x[c], *s);
      } else {
        out[r] += m * x[c];
      }
    }
  }
  return out;
}

bool LinearMap::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool LinearMap::uses_parameters() const {
  return std::any_of(data_.begin(), data_.end(), [](const Poly& p) { return !p.is_constant(); });
}

Matrix LinearMap::to_matrix() const {
  Matrix m(field_, target_, source_);
  for (std::size_t r = 0; r < target_; ++r) {
    for (std::size_t c = 0; c < source_; ++c) {
      auto s = at(r, c).constant();
      if (!s) throw std::invalid_argument("linear map has non-constant entries");
      m(r, c) = *s;
    }
  }
  return m;
}

LinearMap LinearMap::evaluate(const std::map<Var, Scalar>& assignment) const {
  LinearMap out(field_, source_, target_);
  for (std::size_t n = 0; n < data_.size(); ++n) out.data_[n] = Poly(data_[n].evaluate(assignment));
  return out;
}

LinearMap compose(const LinearMap& outer, const LinearMap& inner) {
  if (outer.source_ != inner.target_) throw std::invalid_argument("compose: dimension mismatch");
  LinearMap out(outer.field_, inner.source_, outer.target_);
  for (std::size_t j = 0; j < inner.source_; ++j) out.set_column(j, outer.apply(inner.column(j)));
  return out;
}

std::string format_element(const Element& e, const std::vector<std::string>& labels,
                           const VarNames& names) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    for (const auto& t : e[k].terms()) {
      std::string c = t.coeff.to_string();
      const bool negative = c.front() == '-';
      if (negative) c.erase(0, 1);
      if (out.empty()) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      std::string factor;
      if (c != "1") factor = c;
      if (!t.monomial.is_one()) {
        if (!factor.empty()) factor += '*';
        factor += t.monomial.to_string(names);
      }
      if (!factor.empty()) out += factor + ' ';
      out += labels.at(k);
    }
  }
  return out.empty() ? "0" : out;
}

std::string LinearMap::to_string(const std::vector<std::string>& source_labels,
                                 const std::vector<std::string>& target_labels,
                                 const VarNames& names) const {
  std::string out;
  for (std::size_t j = 0; j < source_; ++j) {
    if (j) out += "; ";
    out += source_labels.at(j) + " -> " + format_element(column(j), target_labels, names);
  }
  return out;
}

// ------------------------------------------------------------ Verdict

bool Verdict::failed(const std::string& axiom) const {
  return std::any_of(failures.begin(), failures.end(),
                     [&](const Witness& w) { return w.axiom == axiom; });
}

void Verdict::merge(const Verdict& other) {
  checked.insert(checked.end(), other.checked.begin(), other.checked.end());
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::string Verdict::summary() const {
  std::ostringstream os;
  for (const auto& axiom : checked) {
    auto it = std::find_if(failures.begin(), failures.end(),
                           [&](const Witness& w) { return w.axiom == axiom; });
    if (it == failures.end()) {
      os << axiom << ": PASS\n";
    } else {
      os << axiom << ": FAIL (coefficient " << it->coefficient << " of " << it->monomial
         << " in coordinate " << it->coordinate << ")\n";
    }
  }
  return os.str();
}

void require_zero(Verdict& verdict, const std::string& axiom, const Element& diff,
                  const std::vector<std::string>& labels, const VarNames& names) {
  verdict.checked.push_back(axiom);
  for (std::size_t k = 0; k < diff.size(); ++k) {
    if (diff[k].is_zero()) continue;
    const auto& lead = diff[k].leading();
    verdict.failures.push_back(
        {axiom, k < labels.size() ? labels[k] : std::to_string(k), lead.monomial.to_string(names),
         lead.coeff.to_string()});
    return;
  }
}

// -------------------------------------------------------- GenericFrame

GenericFrame::GenericFrame(Field field, const VarNames& params) : field_(field), names_(params) {
  if (params.size() > kParamSlots) throw std::invalid_argument("too many parameters");
  names_.resize(kParamSlots);
}

Element GenericFrame::element(const std::string& name, const std::vector<std::string>& labels) {
  Element e;
  e.reserve(labels.size());
  for (const auto& label : labels) {
    if (next_ >= kMaxVars) throw std::length_error("generic check needs too many indeterminates");
    names_.push_back(name + "_" + label);
    e.push_back(Poly::variable(field_, next_++));
  }
  return e;
}

VarNames merge_params(const VarNames& a, const VarNames& b) {
  if (a.empty()) return b;
  if (b.empty() || a == b) return a;
  const VarNames& longer = a.size() >= b.size() ? a : b;
  const VarNames& shorter = a.size() >= b.size() ? b : a;
  if (!std::equal(shorter.begin(), shorter.end(), longer.begin())) {
    throw std::invalid_argument("incompatible parameter lists");
  }
  return longer;
}

// -------------------------------------------------------------- checks

Verdict jordan_check(const Algebra& alg) {
  GenericFrame frame(alg.field(), alg.params());
  const Element a = frame.element("a", alg.basis());
  const Element b = frame.element("b", alg.basis());
  const Element a2 = alg.multiply(a, a);
  const Element lhs = alg.multiply(alg.multiply(a2, b), a);
  const Element rhs = alg.multiply(a2, alg.multiply(b, a));
  Verdict v;
  require_zero(v, "Jordan identity", lhs - rhs, alg.basis(), frame.names());
  return v;
}

bool verify_jordan(Algebra& alg) {
  const bool ok = jordan_check(alg).ok();
  alg.state_ = ok ? JordanState::jordan : JordanState::not_jordan;
  return ok;
}

Algebra jordanize(Field field, const std::vector<std::string>& basis, const Bilinear& assoc) {
  const std::size_t n = basis.size();
  if (assoc.left_dim() != n || assoc.right_dim() != n || assoc.out_dim() != n) {
    throw std::invalid_argument("jordanize: tensor does not match basis");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Element ei = basis_element(field, n, i);
        const Element ej = basis_element(field, n, j);
        const Element ek = basis_element(field, n, k);
        if (!is_zero(assoc.apply(assoc.apply(ei, ej), ek) - assoc.apply(ei, assoc.apply(ej, ek)))) {
          throw std::invalid_argument("jordanize: input product is not associative at (" +
                                      basis[i] + ", " + basis[j] + ", " + basis[k] + ")");
        }
      }
    }
  }
  const Scalar half = Scalar::one(field) / Scalar(field, 2);
  Algebra out(field, basis);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      out.set_product(i, j, half * (assoc.product(i, j) + assoc.product(j, i)));
    }
  }
  verify_jordan(out);
  return out;
}

Bilinear dual_action(const Algebra& a) {
  const std::size_t n = a.dim();
  Bilinear d(a.field(), n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) d.at(i, j, k) = a.sc(i, k, j);
    }
  }
  return d;
}

Verdict left_module_check(const Algebra& acting, const Bilinear& act,
                          const std::vector<std::string>& module_labels) {
  GenericFrame frame(acting.field(), acting.params());
  const Element x = frame.element("x", acting.basis());
  const Element m = frame.element("m", module_labels);
  const Element x2 = acting.multiply(x, x);
  Verdict v;
  require_zero(v, "left action", act.apply(x, act.apply(x2, m)) - act.apply(x2, act.apply(x, m)),
               module_labels, frame.names());
  return v;
}

Verdict right_module_check(const Algebra& acting, const Bilinear& act,
                           const std::vector<std::string>& module_labels) {
  GenericFrame frame(acting.field(), acting.params());
  const Element m = frame.element("m", module_labels);
  const Element x = frame.element("x", acting.basis());
  const Element x2 = acting.multiply(x, x);
  Verdict v;
  require_zero(v, "right action", act.apply(act.apply(m, x2), x) - act.apply(act.apply(m, x), x2),
               module_labels, frame.names());
  return v;
}

bool complement_check(const Algebra& e, const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != e.dim() || w.ambient_dim() != e.dim()) {
    throw std::invalid_argument("subspace is not in the ambient algebra");
  }
  if (u.dim() + w.dim() != e.dim()) return false;
  if (intersect(u, w).dim() != 0) return false;
  return subspace_sum(u, w).dim() == e.dim();
}

bool subalgebra_check(const Algebra& e, const Subspace& u) {
  if (u.ambient_dim() != e.dim()) throw std::invalid_argument("subspace is not in the ambient algebra");
  const auto& basis = u.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      if (!u.contains(to_vector(e.multiply(to_element(basis[i]), to_element(basis[j]))))) return false;
    }
  }
  return true;
}

Algebra restrict(const Algebra& e, const Subspace& u) {
  if (!subalgebra_check(e, u)) throw std::invalid_argument("restrict: subspace is not a subalgebra");
  const auto& basis = u.basis();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::size_t nonzero = 0;
    std::size_t where = 0;
    for (std::size_t k = 0; k < basis[i].size(); ++k) {
      if (!basis[i][k].is_zero()) {
        ++nonzero;
        where = k;
      }
    }
    if (nonzero == 1 && basis[i][where].is_one()) {
      labels.push_back(e.basis()[where]);
    } else {
      labels.push_back("w" + std::to_string(i + 1));
    }
  }
  Algebra out(e.field(), labels, e.params());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const Vector p = to_vector(e.multiply(to_element(basis[i]), to_element(basis[j])));
      out.set_product(i, j, to_element(u.coordinates(p)));
    }
  }
  return out;
}

Verdict bimodule_check(const Bimodule& m) {
  const Algebra& alg = m.algebra;
  GenericFrame frame(alg.field(), alg.params());
  const Element a = frame.element("a", alg.basis());
  const Element b = frame.element("b", alg.basis());
  const Element x = frame.element("x", m.labels);
  const Element a2 = alg.multiply(a, a);
  const auto act = [&](const Element& mod, const Element& el) { return m.action.apply(mod, el); };
  Verdict v;
  require_zero(v, "bim2", act(act(x, a2), a) - act(act(x, a), a2), m.labels, frame.names());
  const Element lhs = act(x, alg.multiply(a2, b)) - act(act(x, b), a2);
  const Element xa = act(x, a);
  const Element rhs = Scalar(alg.field(), 2) * (act(xa, alg.multiply(a, b)) - act(act(xa, b), a));
  require_zero(v, "bim3", lhs - rhs, m.labels, frame.names());
  return v;
}

Algebra null_split_extension(const Bimodule& m) {
  const Verdict v = bimodule_check(m);
  if (!v.ok()) throw std::invalid_argument("null split extension: bimodule axioms fail\n" + v.summary());
  const Algebra& a = m.algebra;
  const std::size_t n = a.dim();
  const std::size_t d = m.labels.size();
  std::vector<std::string> labels = a.basis();
  labels.insert(labels.end(), m.labels.begin(), m.labels.end());
  Algebra out(a.field(), labels, a.params());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Element p = a.table().product(i, j);
      p.resize(n + d, Poly(a.field()));
      out.set_product(i, j, p);
    }
  }
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t j = 0; j < n; ++j) {
      Element p = zero_element(a.field(), n);
      const Element xa = m.action.product(x, j);
      p.insert(p.end(), xa.begin(), xa.end());
      out.set_product(n + x, j, p);
    }
  }
  verify_jordan(out);
  return out;
}

}  // namespace jalg
