#include <doctest.h>

#include "helpers.hpp"
#include "jalg/morphism.hpp"
#include "oracle.hpp"

using namespace jalg;
using testing::el;
using testing::table;

namespace {
const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

// f(e_i e_j) = f(e_i) f(e_j) with plain residues.
bool hom_oracle(const Matrix& f, const oracle::ModTensor& a, const oracle::ModTensor& b) {
  const auto p = a.p;
  std::vector<std::vector<oracle::i64>> img(a.l, std::vector<oracle::i64>(b.l));
  for (std::size_t j = 0; j < a.l; ++j)
    for (std::size_t r = 0; r < b.l; ++r) img[j][r] = f(r, j).residue();
  for (std::size_t i = 0; i < a.l; ++i)
    for (std::size_t j = 0; j < a.l; ++j) {
      std::vector<oracle::i64> ei(a.l, 0), ej(a.l, 0);
      ei[i] = ej[j] = 1;
      if (oracle::apply(img, a(ei, ej), b.l, p) != b(img[i], img[j])) return false;
    }
  return true;
}

std::size_t count_isomorphisms(const Algebra& a, const Algebra& b) {
  const auto ma = oracle::mod_tensor(a.table(), 5), mb = oracle::mod_tensor(b.table(), 5);
  std::size_t count = 0;
  oracle::for_all_vectors(4, 5, [&](const std::vector<oracle::i64>& m) {
    if (!oracle::invertible2(m, 5)) return;
    Matrix f(F5, 2, 2);
    for (std::size_t k = 0; k < 4; ++k) f(k / 2, k % 2) = Scalar(F5, m[k]);
    count += hom_oracle(f, ma, mb);
  });
  return count;
}
}  // namespace

TEST_CASE("homomorphisms") {
  const Algebra j5 = catalog_algebra("J5");
  CHECK(hom_check(LinearMap::identity(Q, 4), j5, j5));
  const Algebra a2 = catalog_algebra("A2");
  CHECK(hom_check(testing::map("a -> b; b -> a", a2, a2), a2, a2));
  CHECK_FALSE(hom_check(testing::map("a -> a + b; b -> a", a2, a2), a2, a2));
  CHECK(hom_check(LinearMap(Q, 2, 2), catalog_algebra("V-abelian-2"), a2));
  CHECK_FALSE(hom_check(LinearMap::identity(Q, 2), catalog_algebra("V"), catalog_algebra("V3")));
}

TEST_CASE("hom_check agrees with the residue oracle on all maps V -> V1 over F5") {
  const Algebra v = catalog_algebra("V").over(F5);
  const Algebra v1 = catalog_algebra("V1").over(F5);
  const auto mv = oracle::mod_tensor(v.table(), 5), m1 = oracle::mod_tensor(v1.table(), 5);
  std::size_t homs = 0;
  oracle::for_all_vectors(4, 5, [&](const std::vector<oracle::i64>& m) {
    Matrix f(F5, 2, 2);
    for (std::size_t k = 0; k < 4; ++k) f(k / 2, k % 2) = Scalar(F5, m[k]);
    const bool expected = hom_oracle(f, mv, m1);
    CHECK(hom_check(LinearMap::from_matrix(f), v, v1) == expected);
    homs += expected;
  });
  // u goes to an idempotent of V1 (4 choices), v to 0
  CHECK(homs == 4);
}

TEST_CASE("morphism quadruples") {
  const MatchedPair j5 = catalog_pair("J5-pair");
  const MorphismQuadruple id{LinearMap::identity(Q, 2), LinearMap(Q, 2, 2), LinearMap(Q, 2, 2),
                             LinearMap::identity(Q, 2)};
  CHECK(quadruple_check(id, j5, j5).ok());
  CHECK(quadruple_check(id, j5, j5).checked.size() == 6);
  CHECK(quadruple_to_map(id, j5, j5) == LinearMap::identity(Q, 4));

  const MatchedPair flat(table("Q", "x y", ""), table("Q", "s", ""));
  const MorphismQuadruple zero{LinearMap(Q, 2, 2), LinearMap(Q, 2, 1), LinearMap(Q, 1, 2), LinearMap(Q, 1, 1)};
  CHECK(quadruple_check(zero, flat, flat).ok());

  const MorphismQuadruple scaled{LinearMap::identity(Q, 2), LinearMap(Q, 2, 2), LinearMap(Q, 2, 2),
                                 testing::map("u -> u; v -> 2 v", j5.V, j5.V)};
  CHECK(quadruple_check(scaled, j5, j5).ok());
  const Algebra e = bicross(j5).product;
  const LinearMap psi = quadruple_to_map(scaled, j5, j5);
  const Matrix psi7 = LinearMap::from_matrix(psi.to_matrix()).evaluate({}).to_matrix();
  Matrix reduced(Field::prime(7), 4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) reduced(r, c) = psi7(r, c).to_field(Field::prime(7));
  CHECK(hom_check(psi, e, e));
  CHECK(hom_oracle(reduced, oracle::mod_tensor(e.table(), 7), oracle::mod_tensor(e.table(), 7)));
  CHECK(map_to_quadruple(psi, j5, j5) == scaled);

  const MorphismQuadruple broken{LinearMap::identity(Q, 2), LinearMap(Q, 2, 2), LinearMap(Q, 2, 2),
                                 testing::map("u -> v; v -> u", j5.V, j5.V)};
  const Verdict v = quadruple_check(broken, j5, j5);
  CHECK_FALSE(v.ok());
  CHECK(v.failed("C6"));
  CHECK_FALSE(hom_check(quadruple_to_map(broken, j5, j5), e, e));
}

TEST_CASE("quadruple round trip") {
  const MatchedPair src = catalog_pair("J17-pair");
  const MatchedPair dst = catalog_pair("J7-pair");
  const MorphismQuadruple qd{testing::map("a -> a; b -> 2 c", src.A, dst.A), testing::map("c -> u", src.A, dst.V),
                             testing::map("v -> b", src.V, dst.A), testing::map("u -> u - v", src.V, dst.V)};
  CHECK(map_to_quadruple(quadruple_to_map(qd, src, dst), src, dst) == qd);
}

TEST_CASE("exhaustive isomorphism search") {
  const Algebra v = catalog_algebra("V").over(F5);
  const IsoVerdict self = iso_search(v, v, IsoMode::exhaustive);
  CHECK(self.outcome == IsoOutcome::isomorphic);
  REQUIRE(self.witness);
  CHECK(*self.witness == LinearMap::identity(F5, 2));

  const Algebra a2 = catalog_algebra("A2").over(F5);
  const IsoVerdict a2self = iso_search(a2, a2, IsoMode::exhaustive);
  REQUIRE(a2self.witness);
  // the swap precedes the identity in row-major order
  CHECK(*a2self.witness == testing::map("a -> b; b -> a", a2, a2));

  const Algebra v3 = catalog_algebra("V3").over(F5);
  const IsoVerdict nv = iso_search(v, v3, IsoMode::exhaustive);
  CHECK(nv.outcome == IsoOutcome::non_isomorphic);
  CHECK(count_isomorphisms(v, v3) == 0);

  const Algebra vr = table("F5", "u v", "u u = u; v v = 3 v");
  const Algebra v1 = catalog_algebra("V1").over(F5);
  const IsoVerdict rescale = iso_search(vr, v1, IsoMode::exhaustive);
  CHECK(rescale.outcome == IsoOutcome::isomorphic);
  REQUIRE(rescale.witness);
  CHECK(hom_check(*rescale.witness, vr, v1));
  CHECK(count_isomorphisms(vr, v1) > 0);

  CHECK_THROWS(iso_search(catalog_algebra("V"), catalog_algebra("V"), IsoMode::exhaustive));
  CHECK(iso_search(v, catalog_algebra("J5").over(F5), IsoMode::exhaustive).outcome == IsoOutcome::non_isomorphic);
}

TEST_CASE("exhaustive search agrees with the oracle count on all catalog planes over F5") {
  const std::vector<std::string> names{"A2", "V-abelian-2", "V", "V1", "V2", "V2-prime", "V3"};
  for (const auto& x : names)
    for (const auto& y : names) {
      const Algebra a = catalog_algebra(x).over(F5);
      const Algebra b = catalog_algebra(y).over(F5);
      CHECK((iso_search(a, b, IsoMode::exhaustive).outcome == IsoOutcome::isomorphic) == (count_isomorphisms(a, b) > 0));
    }
}

TEST_CASE("invariants mode over Q") {
  const Algebra v = catalog_algebra("V");
  const Algebra v3 = catalog_algebra("V3");
  const IsoVerdict nv = iso_search(v, v3, IsoMode::invariants);
  CHECK(nv.outcome == IsoOutcome::non_isomorphic);
  CHECK_FALSE(nv.invariant.empty());
  CHECK(nv.source_value != nv.target_value);

  const IsoVerdict yes = iso_search(catalog_algebra("V1"), catalog_algebra("V2-prime"), IsoMode::invariants);
  CHECK(yes.outcome == IsoOutcome::isomorphic);
  REQUIRE(yes.witness);
  CHECK(hom_check(*yes.witness, catalog_algebra("V1"), catalog_algebra("V2-prime")));

  CHECK(iso_search(catalog_algebra("J5"), catalog_algebra("J7"), IsoMode::invariants).outcome ==
        IsoOutcome::non_isomorphic);
}

TEST_CASE("two-dimensional signatures") {
  const Signature flat = classify_dim2(catalog_algebra("V-abelian-2"));
  CHECK(flat.product_span == 0);
  CHECK(flat.annihilator == 2);
  CHECK(classify_dim2(catalog_algebra("V")) != classify_dim2(catalog_algebra("V3")));
  const Signature v1 = invariants(catalog_algebra("V1").over(F5));
  const Signature v2p = invariants(catalog_algebra("V2-prime").over(F5));
  CHECK(v1 == v2p);
  CHECK(v1.has_unit);
  CHECK(v1.idempotents == 3);
  CHECK(v1.idempotents_exact);
  const Signature v3 = invariants(catalog_algebra("V3").over(F5));
  CHECK(v3.idempotents == 5);
  CHECK_FALSE(v3.has_unit);
  CHECK(v3.annihilator == 0);
  const Signature v2 = invariants(catalog_algebra("V2").over(F5));
  CHECK(v2.has_unit);
  CHECK(v2.idempotents == 1);
  CHECK(v2 != v1);
  CHECK_THROWS(classify_dim2(catalog_algebra("J5")));
  CHECK(classify_dim2(catalog_algebra("V")).to_string().find("annihilator = 1") != std::string::npos);
}
