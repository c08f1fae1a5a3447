#include "jalg/matched_pair.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

#include "jalg/morphism.hpp"

namespace jalg {

MatchedPair::MatchedPair(Algebra a, Algebra v)
    : A(std::move(a)), V(std::move(v)),
      right(A.field(), V.dim(), A.dim(), V.dim()),
      left(A.field(), V.dim(), A.dim(), A.dim()) {
  if (A.field() != V.field()) throw FieldMismatch("matched pair factors over different fields");
}

MatchedPair pair_over(const MatchedPair& mp, Field target) {
  MatchedPair out(mp.A.over(target), mp.V.over(target));
  out.right = mp.right.to_field(target);
  out.left = mp.left.to_field(target);
  return out;
}

namespace {

void require_shapes(const MatchedPair& mp) {
  const auto& r = mp.right;
  const auto& l = mp.left;
  if (r.left_dim() != mp.V.dim() || r.right_dim() != mp.A.dim() || r.out_dim() != mp.V.dim() ||
      l.left_dim() != mp.V.dim() || l.right_dim() != mp.A.dim() || l.out_dim() != mp.A.dim()) {
    throw std::invalid_argument("action tensors do not match the factor dimensions");
  }
  if (mp.A.field() != mp.V.field()) throw FieldMismatch("matched pair factors over different fields");
}

// Shared generic elements a, b in A and x, y in V with the usual shorthands.
struct PairFrame {
  const MatchedPair& mp;
  GenericFrame frame;
  Element a, b, x, y;
  Element a2, x2;
  Scalar two;

  explicit PairFrame(const MatchedPair& p)
      : mp(p), frame(p.field(), p.params()), two(p.field(), 2) {
    a = frame.element("a", mp.A.basis());
    b = frame.element("b", mp.A.basis());
    x = frame.element("x", mp.V.basis());
    y = frame.element("y", mp.V.basis());
    a2 = ma(a, a);
    x2 = mv(x, x);
  }

  Element ma(const Element& p, const Element& q) const { return mp.A.multiply(p, q); }
  Element mv(const Element& p, const Element& q) const { return mp.V.multiply(p, q); }
  Element R(const Element& v, const Element& w) const { return mp.right.apply(v, w); }
  Element L(const Element& v, const Element& w) const { return mp.left.apply(v, w); }

  void check(Verdict& verdict, const std::string& axiom, const Element& lhs, const Element& rhs,
             bool in_a) const {
    require_zero(verdict, axiom, lhs - rhs, in_a ? mp.A.basis() : mp.V.basis(), frame.names());
  }
};

void mp1(const PairFrame& f, Verdict& v) {
  const auto& [a, x, a2] = std::tie(f.a, f.x, f.a2);
  f.check(v, "MP1", f.ma(a, f.L(x, a2)) + f.L(f.R(x, a2), a),
          f.ma(a2, f.L(x, a)) + f.L(f.R(x, a), a2), true);
}

void mp2(const PairFrame& f, Verdict& v) {
  const auto& [a, x, x2] = std::tie(f.a, f.x, f.x2);
  f.check(v, "MP2", f.R(x, f.L(x2, a)) + f.mv(f.R(x2, a), x),
          f.R(x2, f.L(x, a)) + f.mv(x2, f.R(x, a)), false);
}

void mp3(const PairFrame& f, Verdict& v) {
  const auto& [a, b, x, a2, x2] = std::tie(f.a, f.b, f.x, f.a2, f.x2);
  const Element xa = f.R(x, a);
  const Element xb = f.R(x, b);
  const Element xab = f.R(xa, b);
  const Element ba = f.ma(b, a);
  const Element lhs = f.two * (f.R(xab, a) + f.R(x, f.ma(f.L(x, a), b)) + f.R(x, f.L(xa, b)) +
                               f.mv(xab, x)) +
                      f.R(f.R(x2, b), a) + f.R(x, f.ma(b, a2));
  const Element rhs = f.two * (f.R(xa, ba) + f.R(xa, f.L(x, b)) + f.R(xb, f.L(x, a)) +
                               f.mv(xa, xb)) +
                      f.R(x2, ba) + f.R(xb, a2);
  f.check(v, "MP3", lhs, rhs, false);
}

// The first term carries a trailing factor `a`: (y |> (x |> a)) a.  Without it
// the identity is not homogeneous and disagrees with the Jordan identity of
// the bicrossed product.
void mp4(const PairFrame& f, Verdict& v) {
  const auto& [a, x, y, a2, x2] = std::tie(f.a, f.x, f.y, f.a2, f.x2);
  const Element xla = f.L(x, a);
  const Element xra = f.R(x, a);
  const Element xy = f.mv(x, y);
  const Element lhs = f.two * (f.ma(f.L(y, xla), a) + f.L(x, f.L(y, xla)) + f.L(f.R(y, xla), a) +
                               f.L(f.mv(xra, y), a)) +
                      f.L(f.mv(x2, y), a) + f.L(x, f.L(y, a2));
  const Element rhs = f.two * (f.ma(f.L(y, a), xla) + f.L(xy, xla) + f.L(f.R(y, a), xla) +
                               f.L(xra, f.L(y, a))) +
                      f.L(x2, f.L(y, a)) + f.L(xy, a2);
  f.check(v, "MP4", lhs, rhs, true);
}

void mp5(const PairFrame& f, Verdict& v) {
  const auto& [a, x, y, a2, x2] = std::tie(f.a, f.x, f.y, f.a2, f.x2);
  const Element xla = f.L(x, a);
  const Element xra = f.R(x, a);
  const Element yra = f.R(y, a);
  const Element xy = f.mv(x, y);
  const Element yxla = f.R(y, xla);
  const Element xray = f.mv(xra, y);
  const Element lhs = f.two * (f.R(yxla, a) + f.R(xray, a) + f.R(x, f.L(y, xla)) + f.mv(yxla, x) +
                               f.mv(xray, x)) +
                      f.R(f.mv(x2, y), a) + f.R(x, f.L(y, a2)) + f.mv(f.R(y, a2), x);
  const Element rhs = f.two * (f.R(xra, f.L(y, a)) + f.R(yra, xla) + f.R(xy, xla) + f.mv(xra, xy) +
                               f.mv(xra, yra)) +
                      f.R(x2, f.L(y, a)) + f.R(xy, a2) + f.mv(x2, yra);
  f.check(v, "MP5", lhs, rhs, false);
}

void mp6(const PairFrame& f, Verdict& v) {
  const auto& [a, b, x, a2, x2] = std::tie(f.a, f.b, f.x, f.a2, f.x2);
  const Element xla = f.L(x, a);
  const Element xlb = f.L(x, b);
  const Element xra = f.R(x, a);
  const Element xrb = f.R(x, b);
  const Element ba = f.ma(b, a);
  const Element lhs = f.two * (f.ma(f.ma(xla, b), a) + f.ma(f.L(xra, b), a) + f.L(f.R(xra, b), a) +
                               f.L(x, f.ma(xla, b)) + f.L(x, f.L(xra, b))) +
                      f.ma(f.L(x2, b), a) + f.L(f.R(x2, b), a) + f.L(x, f.ma(a2, b));
  const Element rhs = f.two * (f.ma(xla, f.ma(a, b)) + f.L(xra, ba) + f.ma(xla, xlb) +
                               f.L(xrb, xla) + f.L(xra, xlb)) +
                      f.L(x2, ba) + f.L(xrb, a2) + f.ma(a2, xlb);
  f.check(v, "MP6", lhs, rhs, true);
}

void l1(const PairFrame& f, Verdict& v) {
  f.check(v, "L1", f.ma(f.a, f.L(f.x, f.a2)), f.ma(f.a2, f.L(f.x, f.a)), true);
}

// Same trailing factor as in MP4.
void l2(const PairFrame& f, Verdict& v) {
  const auto& [a, x, y, a2, x2] = std::tie(f.a, f.x, f.y, f.a2, f.x2);
  const Element xla = f.L(x, a);
  const Element xy = f.mv(x, y);
  const Element lhs = f.two * (f.ma(f.L(y, xla), a) - f.ma(f.L(y, a), xla) + f.L(x, f.L(y, xla)) -
                               f.L(xy, xla));
  const Element rhs = f.L(x2, f.L(y, a)) - f.L(f.mv(x2, y), a) + f.L(xy, a2) - f.L(x, f.L(y, a2));
  f.check(v, "L2", lhs, rhs, true);
}

void l3(const PairFrame& f, Verdict& v) {
  const auto& [a, b, x, a2, x2] = std::tie(f.a, f.b, f.x, f.a2, f.x2);
  const Element xla = f.L(x, a);
  const Element xlb = f.L(x, b);
  const Element lhs = f.two * (f.ma(f.ma(xla, b), a) - f.ma(xla, f.ma(a, b)) + f.L(x, f.ma(xla, b)) -
                               f.ma(xla, xlb));
  const Element rhs = f.L(x2, f.ma(b, a)) - f.ma(f.L(x2, b), a) + f.ma(a2, xlb) - f.L(x, f.ma(a2, b));
  f.check(v, "L3", lhs, rhs, true);
}

void r1(const PairFrame& f, Verdict& v) {
  f.check(v, "R1", f.mv(f.x, f.R(f.x2, f.a)), f.mv(f.x2, f.R(f.x, f.a)), false);
}

void r2(const PairFrame& f, Verdict& v) {
  const auto& [a, b, x, a2, x2] = std::tie(f.a, f.b, f.x, f.a2, f.x2);
  const Element xra = f.R(x, a);
  const Element xrab = f.R(xra, b);
  const Element ba = f.ma(b, a);
  const Element lhs = f.two * (f.R(xrab, a) - f.R(xra, ba) + f.mv(xrab, x) - f.mv(xra, f.R(x, b)));
  const Element rhs = f.R(x2, ba) - f.R(f.R(x2, b), a) + f.R(f.R(x, b), a2) - f.R(x, f.ma(b, a2));
  f.check(v, "R2", lhs, rhs, false);
}

void r3(const PairFrame& f, Verdict& v) {
  const auto& [a, x, y, a2, x2] = std::tie(f.a, f.x, f.y, f.a2, f.x2);
  const Element xra = f.R(x, a);
  const Element xray = f.mv(xra, y);
  const Element xy = f.mv(x, y);
  const Element lhs = f.two * (f.R(xray, a) - f.mv(xra, f.R(y, a)) + f.mv(xray, x) - f.mv(xra, xy));
  const Element rhs = f.R(xy, a2) - f.mv(f.R(y, a2), x) + f.mv(x2, f.R(y, a)) - f.R(f.mv(x2, y), a);
  f.check(v, "R3", lhs, rhs, false);
}

Verdict run(std::initializer_list<std::function<void(Verdict&)>> steps, CheckMode mode) {
  Verdict v;
  for (const auto& step : steps) {
    step(v);
    if (mode == CheckMode::first_failure && !v.ok()) break;
  }
  return v;
}

void rename(Verdict& v, const std::string& name) {
  for (auto& c : v.checked) c = name;
  for (auto& w : v.failures) w.axiom = name;
}

Verdict named_jordan(const Algebra& a, const std::string& name) {
  Verdict v = jordan_check(a);
  rename(v, name);
  return v;
}

std::vector<std::string> product_labels(const Algebra& a, const Algebra& v) {
  std::vector<std::string> labels = a.basis();
  for (auto label : v.basis()) {
    while (std::find(labels.begin(), labels.end(), label) != labels.end()) label += "'";
    labels.push_back(label);
  }
  return labels;
}

Element embed(Field k, const Element& e, std::size_t offset, std::size_t total) {
  Element out = zero_element(k, total);
  for (std::size_t i = 0; i < e.size(); ++i) out[offset + i] = e[i];
  return out;
}

}  // namespace

Verdict right_action_check(const MatchedPair& mp) {
  require_shapes(mp);
  return right_module_check(mp.A, mp.right, mp.V.basis());
}

Verdict left_action_check(const MatchedPair& mp) {
  require_shapes(mp);
  return left_module_check(mp.V, mp.left, mp.A.basis());
}

Verdict mp_check(const MatchedPair& mp, CheckMode mode) {
  require_shapes(mp);
  const PairFrame f(mp);
  return run({[&](Verdict& v) { v.merge(named_jordan(mp.A, "Jordan identity of A")); },
              [&](Verdict& v) { v.merge(named_jordan(mp.V, "Jordan identity of V")); },
              [&](Verdict& v) { v.merge(right_action_check(mp)); },
              [&](Verdict& v) { v.merge(left_action_check(mp)); },
              [&](Verdict& v) { mp1(f, v); }, [&](Verdict& v) { mp2(f, v); },
              [&](Verdict& v) { mp3(f, v); }, [&](Verdict& v) { mp4(f, v); },
              [&](Verdict& v) { mp5(f, v); }, [&](Verdict& v) { mp6(f, v); }},
             mode);
}

bool verify_pair(MatchedPair& mp) {
  const bool ok = mp_check(mp, CheckMode::first_failure).ok();
  mp.state = ok ? PairState::matched : PairState::not_matched;
  if (ok) {
    verify_jordan(mp.A);
    verify_jordan(mp.V);
  }
  return ok;
}

Algebra bicrossed_algebra(const MatchedPair& mp) {
  require_shapes(mp);
  const std::size_t n = mp.A.dim();
  const std::size_t m = mp.V.dim();
  const Field k = mp.field();
  Algebra out(k, product_labels(mp.A, mp.V), mp.params());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) out.set_product(i, j, embed(k, mp.A.table().product(i, j), 0, n + m));
  }
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = x; y < m; ++y) {
      out.set_product(n + x, n + y, embed(k, mp.V.table().product(x, y), n, n + m));
    }
    for (std::size_t j = 0; j < n; ++j) {
      // (0,x)(a,0) = (x |> a, x <| a)
      out.set_product(n + x, j,
                      embed(k, mp.left.product(x, j), 0, n + m) + embed(k, mp.right.product(x, j), n, n + m));
    }
  }
  return out;
}

BicrossedProduct bicross(const MatchedPair& mp) {
  MatchedPair pair = mp;
  if (pair.state != PairState::matched) {
    const Verdict v = mp_check(pair);
    if (!v.ok()) throw std::invalid_argument("bicross: not a matched pair\n" + v.summary());
    pair.state = PairState::matched;
  }
  Algebra product = bicrossed_algebra(pair);
  verify_jordan(product);
  const std::size_t n = pair.A.dim();
  const std::size_t m = pair.V.dim();
  std::vector<std::size_t> ia(n);
  std::vector<std::size_t> iv(m);
  for (std::size_t i = 0; i < n; ++i) ia[i] = i;
  for (std::size_t i = 0; i < m; ++i) iv[i] = n + i;
  BicrossedProduct bp{product, Subspace::coordinate(pair.field(), n + m, ia),
                      Subspace::coordinate(pair.field(), n + m, iv), pair};
  return bp;
}

Verdict semidirect_left_check(const Algebra& a, const Algebra& v, const Bilinear& left) {
  MatchedPair mp(a, v);
  mp.left = left;
  require_shapes(mp);
  const PairFrame f(mp);
  Verdict out;
  out.merge(named_jordan(a, "Jordan identity of A"));
  out.merge(named_jordan(v, "Jordan identity of V"));
  out.merge(left_action_check(mp));
  l1(f, out);
  l2(f, out);
  l3(f, out);
  return out;
}

Verdict semidirect_right_check(const Algebra& a, const Algebra& v, const Bilinear& right) {
  MatchedPair mp(a, v);
  mp.right = right;
  require_shapes(mp);
  const PairFrame f(mp);
  Verdict out;
  out.merge(named_jordan(a, "Jordan identity of A"));
  out.merge(named_jordan(v, "Jordan identity of V"));
  out.merge(right_action_check(mp));
  r1(f, out);
  r2(f, out);
  r3(f, out);
  return out;
}

Algebra semidirect_left(const Algebra& a, const Algebra& v, const Bilinear& left) {
  const Verdict verdict = semidirect_left_check(a, v, left);
  if (!verdict.ok()) throw std::invalid_argument("left semidirect product: axioms fail\n" + verdict.summary());
  MatchedPair mp(a, v);
  mp.left = left;
  Algebra out = bicrossed_algebra(mp);
  verify_jordan(out);
  return out;
}

Algebra semidirect_right(const Algebra& a, const Algebra& v, const Bilinear& right) {
  const Verdict verdict = semidirect_right_check(a, v, right);
  if (!verdict.ok()) throw std::invalid_argument("right semidirect product: axioms fail\n" + verdict.summary());
  MatchedPair mp(a, v);
  mp.right = right;
  Algebra out = bicrossed_algebra(mp);
  verify_jordan(out);
  return out;
}

// ------------------------------------------------------- factorizations

void validate(const Factorization& f) {
  if (f.E.uses_parameters()) throw std::invalid_argument("factorization of a parametric algebra");
  if (!complement_check(f.E, f.A, f.B)) throw std::invalid_argument("A and B are not complements in E");
  if (!subalgebra_check(f.E, f.A)) throw std::invalid_argument("A is not a subalgebra of E");
  if (!subalgebra_check(f.E, f.B)) throw std::invalid_argument("B is not a subalgebra of E");
}

Factorization factorization_of(const BicrossedProduct& bp) {
  return {bp.product, bp.a_embedding, bp.v_embedding};
}

namespace {

// Coordinates of v in the concatenated basis (A-basis, B-basis).
Vector split_coordinates(const Factorization& f, const Vector& v) {
  const std::size_t n = f.E.dim();
  std::vector<Vector> cols = f.A.basis();
  cols.insert(cols.end(), f.B.basis().begin(), f.B.basis().end());
  Matrix m(f.E.field(), n, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < n; ++r) m(r, c) = cols[c][r];
  }
  auto sol = solve(m, v);
  if (!sol) throw std::logic_error("vector outside A + B");
  return *sol;
}

}  // namespace

LinearMap projection(const Factorization& f) {
  validate(f);
  const std::size_t n = f.E.dim();
  std::vector<Element> columns;
  for (std::size_t j = 0; j < n; ++j) {
    const Vector c = split_coordinates(f, unit_vector(f.E.field(), n, j));
    Vector image = zero_vector(f.E.field(), n);
    for (std::size_t i = 0; i < f.A.dim(); ++i) {
      for (std::size_t r = 0; r < n; ++r) image[r] += c[i] * f.A.basis()[i][r];
    }
    columns.push_back(to_element(image));
  }
  return LinearMap::from_columns(f.E.field(), n, columns);
}

MatchedPair canonical_pair(const Factorization& f) {
  validate(f);
  MatchedPair mp(restrict(f.E, f.A), restrict(f.E, f.B));
  const std::size_t n = f.A.dim();
  for (std::size_t x = 0; x < f.B.dim(); ++x) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector xa = to_vector(f.E.multiply(to_element(f.B.basis()[x]), to_element(f.A.basis()[j])));
      const Vector c = split_coordinates(f, xa);
      mp.left.set(x, j, to_element(Vector(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n))));
      mp.right.set(x, j, to_element(Vector(c.begin() + static_cast<std::ptrdiff_t>(n), c.end())));
    }
  }
  verify_pair(mp);
  return mp;
}

SplitDecomposition split_mono_decompose(const Algebra& e, const LinearMap& p) {
  const std::size_t n = e.dim();
  if (p.source_dim() != n || p.target_dim() != n) throw std::invalid_argument("p must be an endomorphism of E");
  if (!(compose(p, p) == p)) throw std::invalid_argument("p is not idempotent");
  if (!hom_check(p, e, e)) throw std::invalid_argument("p is not an algebra map");
  const Matrix pm = p.to_matrix();
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(pm.column(j));
  SplitDecomposition out;
  out.image = Subspace::span(e.field(), n, cols);
  out.kernel = Subspace::span(e.field(), n, nullspace(pm));
  const Factorization f{e, out.image, out.kernel};
  validate(f);
  out.pair = MatchedPair(restrict(e, out.image), restrict(e, out.kernel));
  for (std::size_t x = 0; x < out.kernel.dim(); ++x) {
    for (std::size_t j = 0; j < out.image.dim(); ++j) {
      const Vector xa =
          to_vector(e.multiply(to_element(out.kernel.basis()[x]), to_element(out.image.basis()[j])));
      out.pair.right.set(x, j, to_element(out.kernel.coordinates(xa)));
    }
  }
  out.product = semidirect_right(out.pair.A, out.pair.V, out.pair.right);
  verify_pair(out.pair);
  std::vector<Element> psi_cols;
  for (const auto& v : out.image.basis()) psi_cols.push_back(to_element(v));
  for (const auto& v : out.kernel.basis()) psi_cols.push_back(to_element(v));
  out.psi = LinearMap::from_columns(e.field(), n, psi_cols);
  return out;
}

// --------------------------------------------------------- abelian pairs

MatchedPair pair_from_nilpotent(const Algebra& a0, const LinearMap& d) {
  if (!a0.is_abelian()) throw std::invalid_argument("pair_from_nilpotent: A0 must be abelian");
  if (d.source_dim() != a0.dim() || d.target_dim() != a0.dim()) {
    throw std::invalid_argument("pair_from_nilpotent: D must be an endomorphism of A0");
  }
  MatchedPair mp(a0, Algebra(a0.field(), {"t"}));
  for (std::size_t j = 0; j < a0.dim(); ++j) mp.left.set(0, j, d.column(j));
  verify_pair(mp);
  return mp;
}

namespace {

bool next_tuple(std::vector<std::uint32_t>& digits, std::uint32_t base) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

AbelianScan enumerate_abelian_pairs(std::size_t n, Field field, std::uint64_t budget) {
  if (!field.is_prime()) throw std::invalid_argument("abelian pair enumeration needs a prime field");
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  const std::uint32_t p = field.modulus();
  const std::size_t slots = n + n * n;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < slots; ++i) {
    total *= p;
    if (total > budget) {
      throw std::length_error("abelian pair enumeration exceeds the candidate budget");
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  const Algebra a0(field, labels);
  const Algebra k0(field, {"t"});

  AbelianScan scan;
  std::vector<std::uint32_t> digits(slots, 0);
  std::size_t valid_with_zero_lambda = 0;
  bool lambda_always_zero = true;
  do {
    ++scan.candidates;
    AbelianCandidate c{zero_vector(field, n), Matrix(field, n, n)};
    for (std::size_t j = 0; j < n; ++j) c.lambda[j] = Scalar(field, digits[j]);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t col = 0; col < n; ++col) c.d(r, col) = Scalar(field, digits[n + r * n + col]);
    }
    const Matrix d3 = c.d * c.d * c.d;
    bool nilpotent = true;
    for (std::size_t r = 0; r < n; ++r) nilpotent = nilpotent && is_zero(d3.row(r));
    const bool zero_lambda = is_zero(c.lambda);
    if (zero_lambda && nilpotent) ++scan.nilpotent;

    MatchedPair mp(a0, k0);
    for (std::size_t j = 0; j < n; ++j) {
      Element tl = zero_element(field, 1);
      tl[0] = Poly(c.lambda[j]);
      mp.right.set(0, j, tl);
      mp.left.set(0, j, to_element(c.d.column(j)));
    }
    if (mp_check(mp, CheckMode::first_failure).ok()) {
      if (!zero_lambda) lambda_always_zero = false;
      if (zero_lambda && nilpotent) ++valid_with_zero_lambda;
      scan.valid.push_back(std::move(c));
    }
  } while (next_tuple(digits, p));
  scan.bijection = lambda_always_zero && valid_with_zero_lambda == scan.valid.size() &&
                   scan.valid.size() == scan.nilpotent;
  return scan;
}

}  // namespace jalg
