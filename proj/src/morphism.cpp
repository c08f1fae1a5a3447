#include "jalg/morphism.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dense_fp.hpp"

namespace jalg {

bool hom_check(const LinearMap& f, const Algebra& a, const Algebra& b) {
  if (f.source_dim() != a.dim() || f.target_dim() != b.dim()) {
    throw std::invalid_argument("hom_check: map dimensions do not match the algebras");
  }
  std::vector<Element> images;
  for (std::size_t j = 0; j < a.dim(); ++j) images.push_back(f.column(j));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      if (!is_zero(f.apply(a.table().product(i, j)) - b.multiply(images[i], images[j]))) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------ quadruples

namespace {

void require_quadruple_shapes(const MorphismQuadruple& qd, const MatchedPair& src, const MatchedPair& dst) {
  const auto ok = [](const LinearMap& m, std::size_t s, std::size_t t) {
    return m.source_dim() == s && m.target_dim() == t;
  };
  if (!ok(qd.r, src.A.dim(), dst.A.dim()) || !ok(qd.s, src.A.dim(), dst.V.dim()) ||
      !ok(qd.t, src.V.dim(), dst.A.dim()) || !ok(qd.q, src.V.dim(), dst.V.dim())) {
    throw std::invalid_argument("quadruple maps do not match the matched pairs");
  }
}

}  // namespace

Verdict quadruple_check(const MorphismQuadruple& qd, const MatchedPair& src, const MatchedPair& dst) {
  require_quadruple_shapes(qd, src, dst);
  const VarNames names = merge_params(src.params(), dst.params());
  const auto& [r, s, t, q] = qd;
  const auto& dA = dst.A;
  const auto& dV = dst.V;
  const std::size_t n = src.A.dim();
  const std::size_t m = src.V.dim();

  Verdict v;
  auto record = [&](const std::string& axiom, const Element& diff, const std::vector<std::string>& labels) {
    if (!v.failed(axiom) && !is_zero(diff)) {
      Verdict one;
      require_zero(one, axiom, diff, labels, names);
      v.failures.insert(v.failures.end(), one.failures.begin(), one.failures.end());
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Element ab = src.A.table().product(i, j);
      const Element ra = r.column(i), rb = r.column(j), sa = s.column(i), sb = s.column(j);
      record("C1",
             r.apply(ab) - dA.multiply(ra, rb) - dst.act_left(sa, rb) - dst.act_left(sb, ra),
             dA.basis());
      record("C2",
             s.apply(ab) - dV.multiply(sa, sb) - dst.act_right(sa, rb) - dst.act_right(sb, ra),
             dV.basis());
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const Element xy = src.V.table().product(i, j);
      const Element tx = t.column(i), ty = t.column(j), qx = q.column(i), qy = q.column(j);
      record("C3",
             t.apply(xy) - dA.multiply(tx, ty) - dst.act_left(qx, ty) - dst.act_left(qy, tx),
             dA.basis());
      record("C4",
             q.apply(xy) - dV.multiply(qx, qy) - dst.act_right(qx, ty) - dst.act_right(qy, tx),
             dV.basis());
    }
  }
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element xla = src.left.product(x, j);
      const Element xra = src.right.product(x, j);
      const Element ra = r.column(j), sa = s.column(j), tx = t.column(x), qx = q.column(x);
      record("C5",
             r.apply(xla) + t.apply(xra) - dA.multiply(ra, tx) - dst.act_left(sa, tx) -
                 dst.act_left(qx, ra),
             dA.basis());
      record("C6",
             s.apply(xla) + q.apply(xra) - dV.multiply(sa, qx) - dst.act_right(sa, tx) -
                 dst.act_right(qx, ra),
             dV.basis());
    }
  }
  v.checked = {"C1", "C2", "C3", "C4", "C5", "C6"};
  return v;
}

LinearMap quadruple_to_map(const MorphismQuadruple& qd, const MatchedPair& src, const MatchedPair& dst) {
  require_quadruple_shapes(qd, src, dst);
  const std::size_t n = src.A.dim(), m = src.V.dim();
  const std::size_t n2 = dst.A.dim(), m2 = dst.V.dim();
  LinearMap psi(src.field(), n + m, n2 + m2);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n2; ++i) psi.at(i, j) = qd.r.at(i, j);
    for (std::size_t i = 0; i < m2; ++i) psi.at(n2 + i, j) = qd.s.at(i, j);
  }
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n2; ++i) psi.at(i, n + j) = qd.t.at(i, j);
    for (std::size_t i = 0; i < m2; ++i) psi.at(n2 + i, n + j) = qd.q.at(i, j);
  }
  return psi;
}

MorphismQuadruple map_to_quadruple(const LinearMap& psi, const MatchedPair& src, const MatchedPair& dst) {
  const std::size_t n = src.A.dim(), m = src.V.dim();
  const std::size_t n2 = dst.A.dim(), m2 = dst.V.dim();
  if (psi.source_dim() != n + m || psi.target_dim() != n2 + m2) {
    throw std::invalid_argument("map_to_quadruple: dimension mismatch");
  }
  const Field k = src.field();
  MorphismQuadruple qd{LinearMap(k, n, n2), LinearMap(k, n, m2), LinearMap(k, m, n2), LinearMap(k, m, m2)};
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n2; ++i) qd.r.at(i, j) = psi.at(i, j);
    for (std::size_t i = 0; i < m2; ++i) qd.s.at(i, j) = psi.at(n2 + i, j);
  }
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n2; ++i) qd.t.at(i, j) = psi.at(i, n + j);
    for (std::size_t i = 0; i < m2; ++i) qd.q.at(i, j) = psi.at(n2 + i, n + j);
  }
  return qd;
}

// ------------------------------------------------------------ invariants

std::string to_string(IsoOutcome outcome) {
  switch (outcome) {
    case IsoOutcome::isomorphic: return "isomorphic";
    case IsoOutcome::non_isomorphic: return "not isomorphic";
    case IsoOutcome::unknown: return "unknown";
  }
  return "unknown";
}

std::string Signature::to_string() const {
  std::ostringstream os;
  os << "dim A^2 = " << product_span << ", dim A^3 = " << cube_span << ", annihilator = " << annihilator
     << ", unit = " << (has_unit ? "yes" : "no") << ", trace form rank = " << trace_rank
     << ", idempotents = " << idempotents << (idempotents_exact ? "" : " (bounded search)");
  return os.str();
}

namespace {

Vector product_vector(const Algebra& a, const Vector& x, const Vector& y) {
  return to_vector(a.multiply(to_element(x), to_element(y)));
}

// Multiplication operator L_x as a matrix.
Matrix mult_operator(const Algebra& a, const Vector& x) {
  const std::size_t n = a.dim();
  Matrix m(a.field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector c = product_vector(a, x, unit_vector(a.field(), n, j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = c[i];
  }
  return m;
}

Scalar trace(const Matrix& m) {
  Scalar t = Scalar::zero(m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// Rationals n/d with |n| <= h, 1 <= d <= h, each value once, zero first.
std::vector<Scalar> bounded_rationals(Field field, std::uint32_t h) {
  std::vector<Scalar> out{Scalar::zero(field)};
  for (std::uint32_t d = 1; d <= h; ++d) {
    for (std::uint32_t num = 1; num <= h; ++num) {
      if (std::gcd(num, d) != 1) continue;
      const mpq_class q(num, d);
      out.emplace_back(field, q);
      out.emplace_back(field, mpq_class(-q));
    }
  }
  return out;
}

std::uint64_t power(std::uint64_t base, std::size_t e, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < e; ++i) {
    out *= base;
    if (out > cap) return cap + 1;
  }
  return out;
}

constexpr std::uint64_t kFullScanCap = 2'000'000;

// Every residue when the scan over k^n is affordable, else small heights.
std::vector<Scalar> coordinate_values(Field field, std::uint32_t height, std::size_t n) {
  if (field.is_prime() && power(field.modulus(), n, kFullScanCap) <= kFullScanCap) {
    std::vector<Scalar> all;
    for (std::uint32_t v = 0; v < field.modulus(); ++v) all.emplace_back(field, static_cast<long>(v));
    return all;
  }
  return bounded_rationals(field, height);
}

bool next_index(std::vector<std::size_t>& idx, std::size_t base) {
  for (std::size_t i = idx.size(); i-- > 0;) {
    if (++idx[i] < base) return true;
    idx[i] = 0;
  }
  return false;
}

}  // namespace

Signature invariants(const Algebra& a, std::uint32_t height) {
  if (a.uses_parameters()) throw std::invalid_argument("invariants need constant structure constants");
  const std::size_t n = a.dim();
  const Field k = a.field();
  Signature sig;

  std::vector<Vector> products;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) products.push_back(to_vector(a.table().product(i, j)));
  }
  const Subspace sq = Subspace::span(k, n, products);
  sig.product_span = sq.dim();
  std::vector<Vector> cubes;
  for (const auto& v : sq.basis()) {
    for (std::size_t j = 0; j < n; ++j) cubes.push_back(product_vector(a, v, unit_vector(k, n, j)));
  }
  sig.cube_span = Subspace::span(k, n, cubes).dim();

  // Annihilator: x with x e_j = 0 for all j; stacked system in x.
  Matrix ann(k, n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const Vector c = to_vector(a.table().product(i, j));
      for (std::size_t r = 0; r < n; ++r) ann(j * n + r, i) = c[r];
    }
  }
  sig.annihilator = n - rank(ann);

  // Unit: u with u e_j = e_j for all j.
  Vector rhs;
  for (std::size_t j = 0; j < n; ++j) {
    const Vector e = unit_vector(k, n, j);
    rhs.insert(rhs.end(), e.begin(), e.end());
  }
  sig.has_unit = n > 0 && solve(ann, rhs).has_value();

  Matrix tf(k, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      tf(i, j) = trace(mult_operator(a, to_vector(a.table().product(i, j))));
    }
  }
  sig.trace_rank = rank(tf);

  const std::vector<Scalar> values = coordinate_values(k, height, n);
  sig.idempotents_exact = k.is_prime() && values.size() == k.modulus();
  std::vector<std::size_t> idx(n, 0);
  while (next_index(idx, values.size())) {
    Vector e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = values[idx[i]];
    if (product_vector(a, e, e) == e) ++sig.idempotents;
  }
  return sig;
}

Signature classify_dim2(const Algebra& a, std::uint32_t height) {
  if (a.dim() != 2) throw std::invalid_argument("classify2 needs a 2-dimensional algebra");
  if (!jordan_check(a).ok()) throw std::invalid_argument("classify2 needs a Jordan algebra");
  return invariants(a, height);
}

// -------------------------------------------------------------- search

namespace {

IsoVerdict compare_invariants(const Signature& sa, const Signature& sb) {
  IsoVerdict v;
  auto differ = [&](const std::string& name, auto x, auto y) {
    if (v.outcome == IsoOutcome::non_isomorphic || x == y) return;
    v.outcome = IsoOutcome::non_isomorphic;
    v.invariant = name;
    v.source_value = std::to_string(x);
    v.target_value = std::to_string(y);
  };
  differ("dim A^2", sa.product_span, sb.product_span);
  differ("dim A^3", sa.cube_span, sb.cube_span);
  differ("annihilator dimension", sa.annihilator, sb.annihilator);
  differ("has unit", int{sa.has_unit}, int{sb.has_unit});
  differ("trace form rank", sa.trace_rank, sb.trace_rank);
  if (sa.idempotents_exact && sb.idempotents_exact) {
    differ("nonzero idempotents", sa.idempotents, sb.idempotents);
  }
  return v;
}

}  // namespace

IsoVerdict iso_search(const Algebra& a, const Algebra& b, IsoMode mode, std::uint32_t height,
                      std::uint64_t budget) {
  if (a.field() != b.field()) throw FieldMismatch("iso_search: algebras over different fields");
  IsoVerdict out;
  if (a.dim() != b.dim()) {
    out.outcome = IsoOutcome::non_isomorphic;
    out.invariant = "dimension";
    out.source_value = std::to_string(a.dim());
    out.target_value = std::to_string(b.dim());
    return out;
  }
  const std::size_t n = a.dim();
  if (mode == IsoMode::exhaustive) {
    if (!a.field().is_prime()) throw std::invalid_argument("exhaustive isomorphism search needs F_p");
    if (n > 3) throw std::invalid_argument("exhaustive isomorphism search is limited to dimension 3");
    const auto p = detail::prime_of(a);
    detail::prime_of(b);
    const auto da = detail::DenseBilinear::from(a.table());
    const auto db = detail::DenseBilinear::from(b.table());
    if (auto w = detail::least_isomorphism(da, db, p)) {
      out.outcome = IsoOutcome::isomorphic;
      out.witness = LinearMap::from_matrix(detail::from_dense(*w, n, n, a.field()));
    } else {
      out.outcome = IsoOutcome::non_isomorphic;
      out.invariant = "exhaustive search";
      out.note = "no invertible homomorphism among all " + std::to_string(n) + "x" + std::to_string(n) +
                 " matrices over " + a.field().name();
    }
    return out;
  }

  out = compare_invariants(invariants(a, height), invariants(b, height));
  if (out.outcome == IsoOutcome::non_isomorphic) return out;

  const std::vector<Scalar> values = coordinate_values(a.field(), height, n * n);
  const bool complete = a.field().is_prime() && values.size() == a.field().modulus();
  std::vector<std::size_t> idx(n * n, 0);
  std::uint64_t tried = 0;
  bool exhausted = true;
  do {
    if (++tried > budget) {
      exhausted = false;
      break;
    }
    Matrix m(a.field(), n, n);
    for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = values[idx[i]];
    if (determinant(m).is_zero()) continue;
    const LinearMap f = LinearMap::from_matrix(m);
    if (hom_check(f, a, b)) {
      out.outcome = IsoOutcome::isomorphic;
      out.witness = f;
      return out;
    }
  } while (next_index(idx, values.size()));
  if (complete && exhausted) {
    out.outcome = IsoOutcome::non_isomorphic;
    out.invariant = "exhaustive search";
    out.note = "no invertible homomorphism over " + a.field().name();
    return out;
  }
  out.outcome = IsoOutcome::unknown;
  out.note = "invariants agree and no witness with entries of height <= " + std::to_string(height) +
             " was found within " + std::to_string(budget) + " candidates";
  return out;
}

}  // namespace jalg
