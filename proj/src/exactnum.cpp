#include "jalg/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace jalg {

namespace {

bool is_prime_number(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint32_t p) {
  if (p >= (1U << 31U)) throw std::invalid_argument("field modulus too large");
  if (!is_prime_number(p)) {
    throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  }
  if (p < 5) {
    throw std::invalid_argument("characteristic " + std::to_string(p) +
                                " is not supported (need p >= 5)");
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  text = trim(text);
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text.front() == 'F') {
    std::string_view digits = text.substr(1);
    if (!digits.empty() && digits.front() == '<' && digits.back() == '>') {
      digits = digits.substr(1, digits.size() - 2);
    }
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(p);
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "'");
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F" + std::to_string(modulus_);
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(Field field, long value) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    const auto p = static_cast<long>(field.modulus());
    long r = value % p;
    if (r < 0) r += p;
    value_ = Residue{static_cast<std::uint32_t>(r), field.modulus()};
  }
}

Scalar::Scalar(Field field, const mpq_class& value) {
  if (field.is_rational()) {
    mpq_class q = value;
    q.canonicalize();
    value_ = std::move(q);
    return;
  }
  const std::uint32_t p = field.modulus();
  const std::uint32_t den = reduce(value.get_den(), p);
  if (den == 0) {
    throw DivisionByZero("denominator " + value.get_den().get_str() + " vanishes in " +
                         field.name());
  }
  const std::uint32_t num = reduce(value.get_num(), p);
  const std::uint64_t v = static_cast<std::uint64_t>(num) * pow_mod(den, p - 2, p) % p;
  value_ = Residue{static_cast<std::uint32_t>(v), p};
}

Scalar Scalar::parse(std::string_view text, Field field) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty scalar");
  std::string s(text);
  const bool ok = std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+';
  });
  if (!ok) throw std::invalid_argument("malformed scalar '" + s + "'");
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  try {
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("");
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw DivisionByZero("zero denominator in '" + s + "'");
  q.canonicalize();
  return Scalar(field, q);
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field(r->modulus);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldMismatch("scalar is not rational");
}

std::uint32_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw FieldMismatch("scalar is not a residue");
}

void Scalar::require_same_field(const Scalar& other) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&other.value_);
  if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->modulus != b->modulus)) {
    throw FieldMismatch("arithmetic between " + field().name() + " and " +
                        other.field().name());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus});
  }
  mpq_class q = 1 / std::get<mpq_class>(value_);
  return Scalar(Field::rationals(), q);
}

Scalar Scalar::to_field(Field target) const {
  if (target == field()) return *this;
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(target, *q);
  throw FieldMismatch("cannot transport " + field().name() + " scalar to " + target.name());
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  }
  mpq_class q = -std::get<mpq_class>(value_);
  Scalar out;
  out.value_ = std::move(q);
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    const std::uint64_t s = std::uint64_t{r->value} + std::get<Residue>(rhs.value_).value;
    r->value = static_cast<std::uint32_t>(s % r->modulus);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    const std::uint64_t s =
        std::uint64_t{r->value} + r->modulus - std::get<Residue>(rhs.value_).value;
    r->value = static_cast<std::uint32_t>(s % r->modulus);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    const std::uint64_t s = std::uint64_t{r->value} * std::get<Residue>(rhs.value_).value;
    r->value = static_cast<std::uint32_t>(s % r->modulus);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (const auto* r = std::get_if<Scalar::Residue>(&a.value_)) {
    return r->value == std::get<Scalar::Residue>(b.value_).value;
  }
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

bool operator<(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (const auto* r = std::get_if<Scalar::Residue>(&a.value_)) {
    return r->value < std::get<Scalar::Residue>(b.value_).value;
  }
  return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

// ---------------------------------------------------------------- Monomial

std::string var_name(const VarNames& names, Var v) {
  if (v < names.size() && !names[v].empty()) return names[v];
  return "t" + std::to_string(v);
}

Monomial Monomial::variable(Var v, unsigned exponent) {
  if (v >= kMaxVars) throw std::out_of_range("too many indeterminates");
  if (exponent > std::numeric_limits<std::uint8_t>::max()) {
    throw std::overflow_error("exponent too large");
  }
  Monomial m;
  m.exponents_[v] = static_cast<std::uint8_t>(exponent);
  m.degree_ = static_cast<std::uint16_t>(exponent);
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = unsigned{exponents_[i]} + other.exponents_[i];
    if (e > std::numeric_limits<std::uint8_t>::max()) {
      throw std::overflow_error("exponent overflow");
    }
    m.exponents_[i] = static_cast<std::uint8_t>(e);
  }
  m.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return m;
}

std::string Monomial::to_string(const VarNames& names) const {
  if (is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(names, static_cast<Var>(i));
    if (exponents_[i] > 1) out += '^' + std::to_string(exponents_[i]);
  }
  return out;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const Scalar& constant) : field_(constant.field()) {
  if (!constant.is_zero()) terms_.push_back({Monomial{}, constant});
}

Poly Poly::variable(Field field, Var v) {
  return term(Scalar::one(field), Monomial::variable(v));
}

Poly Poly::term(const Scalar& coeff, const Monomial& monomial) {
  Poly p(coeff.field());
  if (!coeff.is_zero()) p.terms_.push_back({monomial, coeff});
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

std::optional<Scalar> Poly::constant() const {
  if (terms_.empty()) return Scalar::zero(field_);
  if (terms_.size() == 1 && terms_.front().monomial.is_one()) return terms_.front().coeff;
  return std::nullopt;
}

bool Poly::uses_parameters() const {
  for (const auto& t : terms_) {
    for (Var v = 0; v < kParamSlots; ++v) {
      if (t.monomial.exponent(v) != 0) return true;
    }
  }
  return false;
}

void Poly::require_same_field(const Poly& other) const {
  if (field_ != other.field_) {
    throw FieldMismatch("polynomial arithmetic between " + field_.name() + " and " +
                        other.field_.name());
  }
}

std::vector<Poly::Term> Poly::merge(const std::vector<Term>& a, const std::vector<Term>& b,
                                    bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].monomial > b[j].monomial)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].monomial > a[i].monomial) {
      out.push_back(subtract ? Term{b[j].monomial, -b[j].coeff} : b[j]);
      ++j;
    } else {
      Scalar c = a[i].coeff;
      if (subtract) {
        c -= b[j].coeff;
      } else {
        c += b[j].coeff;
      }
      if (!c.is_zero()) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_same_field(rhs);
  if (rhs.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = rhs.terms_;
    return *this;
  }
  terms_ = merge(terms_, rhs.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  require_same_field(rhs);
  if (rhs.terms_.empty()) return *this;
  terms_ = merge(terms_, rhs.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  if (c.field() != field_) throw FieldMismatch("scaling by scalar of another field");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

void Poly::add_scaled(const Poly& p, const Scalar& c) {
  if (p.is_zero() || c.is_zero()) return;
  require_same_field(p);
  if (c.is_one()) {
    *this += p;
    return;
  }
  *this += p * c;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  lhs.require_same_field(rhs);
  if (lhs.terms_.empty() || rhs.terms_.empty()) return Poly(lhs.field_);
  if (auto c = rhs.constant()) return lhs * *c;
  if (auto c = lhs.constant()) return rhs * *c;

  std::vector<Poly::Term> products;
  products.reserve(lhs.terms_.size() * rhs.terms_.size());
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) {
      products.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
    }
  }
  std::sort(products.begin(), products.end(),
            [](const Poly::Term& x, const Poly::Term& y) { return x.monomial > y.monomial; });

  Poly out(lhs.field_);
  out.terms_.reserve(products.size());
  for (auto& t : products) {
    if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial) {
      out.terms_.back().coeff += t.coeff;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
  return out;
}

Scalar Poly::evaluate(const std::map<Var, Scalar>& assignment) const {
  Scalar total = Scalar::zero(field_);
  for (const auto& t : terms_) {
    Scalar value = t.coeff;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      const unsigned e = t.monomial.exponent(static_cast<Var>(v));
      if (e == 0) continue;
      auto it = assignment.find(static_cast<Var>(v));
      if (it == assignment.end()) {
        throw std::out_of_range("no value assigned to indeterminate t" + std::to_string(v));
      }
      for (unsigned k = 0; k < e; ++k) value *= it->second;
    }
    total += value;
  }
  return total;
}

Scalar Poly::evaluate(const std::map<std::string, Scalar>& assignment,
                      const VarNames& names) const {
  std::map<Var, Scalar> by_index;
  for (const auto& [name, value] : assignment) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) continue;
    by_index.emplace(static_cast<Var>(it - names.begin()), value);
  }
  try {
    return evaluate(by_index);
  } catch (const std::out_of_range&) {
    for (const auto& t : terms_) {
      for (std::size_t v = 0; v < kMaxVars; ++v) {
        if (t.monomial.exponent(static_cast<Var>(v)) != 0 &&
            !by_index.contains(static_cast<Var>(v))) {
          throw std::out_of_range("no value assigned to '" +
                                  var_name(names, static_cast<Var>(v)) + "'");
        }
      }
    }
    throw;
  }
}

Poly Poly::to_field(Field target) const {
  if (target == field_) return *this;
  Poly out(target);
  for (const auto& t : terms_) {
    Scalar c = t.coeff.to_field(target);
    if (!c.is_zero()) out.terms_.push_back({t.monomial, std::move(c)});
  }
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.field_ != b.field_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].monomial != b.terms_[i].monomial) return false;
    if (!(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

std::string Poly::to_string(const VarNames& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string c = t.coeff.to_string();
    bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.monomial.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + '*';
      out += t.monomial.to_string(names);
    }
  }
  return out;
}

}  // namespace jalg
