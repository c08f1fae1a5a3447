#include "jalg/deformation.hpp"

#include <stdexcept>

#include "dense_fp.hpp"
#include "jalg/morphism.hpp"

namespace jalg {

namespace {

void require_map(const MatchedPair& mp, const LinearMap& r, const char* what) {
  if (r.source_dim() != mp.V.dim() || r.target_dim() != mp.A.dim()) {
    throw std::invalid_argument(std::string(what) + " must be a linear map V -> A");
  }
  if (r.field() != mp.field()) throw FieldMismatch(std::string(what) + " over a different field");
}

Element deformed_product(const MatchedPair& mp, const LinearMap& r, const Element& x, const Element& y) {
  return mp.V.multiply(x, y) + mp.act_right(x, r.apply(y)) + mp.act_right(y, r.apply(x));
}

}  // namespace

Verdict deformation_check(const MatchedPair& mp, const LinearMap& r) {
  require_map(mp, r, "r");
  const Field k = mp.field();
  const std::size_t m = mp.V.dim();
  GenericFrame frame(k, mp.params());
  Verdict verdict;
  for (std::size_t i = 0; i < m; ++i) {
    const Element x = mp.V.unit(i);
    const Element rx = r.apply(x);
    for (std::size_t j = i; j < m; ++j) {
      const Element y = mp.V.unit(j);
      const Element ry = r.apply(y);
      const Element lhs = r.apply(mp.V.multiply(x, y)) - mp.A.multiply(rx, ry);
      const Element rhs = mp.act_left(x, ry) + mp.act_left(y, rx) -
                          r.apply(mp.act_right(x, ry) + mp.act_right(y, rx));
      require_zero(verdict, "deformation (" + mp.V.basis()[i] + ", " + mp.V.basis()[j] + ")", lhs - rhs,
                   mp.A.basis(), frame.names());
    }
  }
  return verdict;
}

Algebra r_deform(const MatchedPair& mp, const LinearMap& r) {
  const Verdict v = deformation_check(mp, r);
  if (!v.ok()) throw std::invalid_argument("r is not a deformation map\n" + v.summary());
  const std::size_t m = mp.V.dim();
  Algebra out(mp.field(), mp.V.basis(), mp.params());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) out.set_product(i, j, deformed_product(mp, r, mp.V.unit(i), mp.V.unit(j)));
  }
  verify_jordan(out);
  return out;
}

GraphComplement graph_complement(const MatchedPair& mp, const LinearMap& r) {
  GraphComplement out;
  out.deformed = r_deform(mp, r);
  const Field k = mp.field();
  const std::size_t n = mp.A.dim();
  const std::size_t m = mp.V.dim();
  const Matrix rm = r.to_matrix();
  std::vector<Vector> graph;
  std::vector<Element> columns;
  for (std::size_t j = 0; j < m; ++j) {
    Vector v = zero_vector(k, n + m);
    for (std::size_t i = 0; i < n; ++i) v[i] = rm(i, j);
    v[n + j] = Scalar::one(k);
    columns.push_back(to_element(v));
    graph.push_back(std::move(v));
  }
  out.subspace = Subspace::span(k, n + m, graph);
  out.f_r = LinearMap::from_columns(k, n + m, columns);
  return out;
}

Verdict equiv_check(const MatchedPair& mp, const LinearMap& r, const LinearMap& s, const LinearMap& sigma) {
  require_map(mp, r, "r");
  require_map(mp, s, "s");
  const std::size_t m = mp.V.dim();
  if (sigma.source_dim() != m || sigma.target_dim() != m) {
    throw std::invalid_argument("sigma must be an endomorphism of V");
  }
  if (determinant(sigma.to_matrix()).is_zero()) throw std::invalid_argument("sigma is not invertible");
  GenericFrame frame(mp.field(), mp.params());
  Verdict verdict;
  for (std::size_t i = 0; i < m; ++i) {
    const Element x = mp.V.unit(i);
    const Element sx = sigma.apply(x);
    for (std::size_t j = i; j < m; ++j) {
      const Element y = mp.V.unit(j);
      const Element sy = sigma.apply(y);
      const Element lhs = sigma.apply(mp.V.multiply(x, y)) - mp.V.multiply(sx, sy);
      const Element rhs = mp.act_right(sx, s.apply(sy)) - sigma.apply(mp.act_right(x, r.apply(y))) +
                          mp.act_right(sy, s.apply(sx)) - sigma.apply(mp.act_right(y, r.apply(x)));
      require_zero(verdict, "equivalence (" + mp.V.basis()[i] + ", " + mp.V.basis()[j] + ")", lhs - rhs,
                   mp.V.basis(), frame.names());
    }
  }
  return verdict;
}

namespace {

LinearMap to_map(const detail::DenseMatrix& d, std::size_t rows, std::size_t cols, Field k) {
  return LinearMap::from_matrix(detail::from_dense(d, rows, cols, k));
}

Algebra to_algebra(const detail::DenseBilinear& t, const Algebra& shape) {
  const Field k = shape.field();
  Algebra out(k, shape.basis(), shape.params());
  for (std::size_t i = 0; i < t.l; ++i) {
    for (std::size_t j = i; j < t.r; ++j) {
      Element e = zero_element(k, t.o);
      for (std::size_t c = 0; c < t.o; ++c) e[c] = Scalar(k, static_cast<long>(t.at(i, j, c)));
      out.set_product(i, j, e);
    }
  }
  return out;
}

}  // namespace

std::vector<LinearMap> enumerate_deformations(const MatchedPair& mp, std::uint64_t budget) {
  const auto dp = detail::DensePair::from(mp);
  std::vector<LinearMap> out;
  for (const auto& r : detail::dense_enumerate_deformations(dp, budget)) {
    out.push_back(to_map(r, dp.n, dp.m, mp.field()));
  }
  return out;
}

ComplementReport factorization_index(const MatchedPair& mp, std::uint64_t budget) {
  const auto dp = detail::DensePair::from(mp);
  const Field k = mp.field();
  const auto dense_maps = detail::dense_enumerate_deformations(dp, budget);
  std::vector<detail::DenseBilinear> tables;
  ComplementReport report;
  for (const auto& r : dense_maps) {
    tables.push_back(detail::dense_deformed(dp, r));
    report.maps.push_back(to_map(r, dp.n, dp.m, k));
    report.deformed.push_back(to_algebra(tables.back(), mp.V));
  }

  for (std::size_t i = 0; i < tables.size(); ++i) {
    bool placed = false;
    for (auto& c : report.classes) {
      auto w = detail::least_isomorphism(tables[c.representative], tables[i], dp.p);
      if (!w) continue;
      c.members.push_back(i);
      c.witnesses.push_back(to_map(*w, dp.m, dp.m, k));
      placed = true;
      break;
    }
    if (!placed) {
      ComplementClass c;
      c.representative = i;
      c.members.push_back(i);
      c.witnesses.push_back(LinearMap::identity(k, dp.m));
      report.classes.push_back(std::move(c));
    }
  }

  const auto group = detail::invertible_matrices(dp.m, dp.p);
  for (std::size_t i = 0; i < dense_maps.size(); ++i) {
    bool placed = false;
    for (auto& c : report.equiv_classes) {
      for (const auto& sigma : group) {
        if (detail::dense_equiv(dp, dense_maps[c.front()], dense_maps[i], sigma)) {
          c.push_back(i);
          placed = true;
          break;
        }
      }
      if (placed) break;
    }
    if (!placed) report.equiv_classes.push_back({i});
  }

  report.partitions_agree = report.equiv_classes.size() == report.classes.size();
  for (std::size_t c = 0; report.partitions_agree && c < report.classes.size(); ++c) {
    report.partitions_agree = report.classes[c].members == report.equiv_classes[c];
  }
  report.index = report.classes.size();
  report.note = "index over " + k.name() +
                " by exhaustive search; the count may differ over other fields, e.g. the reals";
  return report;
}

ComplementRecovery complement_recover(const Algebra& e, const Subspace& a, const Subspace& b,
                                      const Subspace& b_bar) {
  validate(Factorization{e, a, b});
  validate(Factorization{e, a, b_bar});
  const Field k = e.field();
  const std::size_t dim = e.dim();
  const std::size_t n = a.dim();
  const std::size_t m = b.dim();
  Matrix split(k, dim, n + m);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < dim; ++r) split(r, c) = a.basis()[c][r];
  }
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t r = 0; r < dim; ++r) split(r, n + c) = b_bar.basis()[c][r];
  }
  ComplementRecovery out;
  out.r = LinearMap(k, m, n);
  out.v = LinearMap(k, m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto c = solve(split, b.basis()[j]);
    if (!c) throw std::logic_error("vector outside A + B-bar");
    for (std::size_t i = 0; i < n; ++i) out.r.at(i, j) = Poly(-(*c)[i]);
    for (std::size_t i = 0; i < m; ++i) out.v.at(i, j) = Poly((*c)[n + i]);
  }
  out.pair = canonical_pair(Factorization{e, a, b});
  out.deformed = r_deform(out.pair, out.r);
  out.b_bar = restrict(e, b_bar);
  return out;
}

}  // namespace jalg
