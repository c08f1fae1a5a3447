#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "jalg/catalog.hpp"
#include "oracle.hpp"

using namespace jalg;

namespace {
const Field Q = Field::rationals();

// Full multiplication table, rows then columns, entries as combinations.
void check_table(const Algebra& alg, const std::vector<std::vector<std::string>>& rows) {
  VarNames none;
  REQUIRE(rows.size() == alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      CAPTURE(alg.basis()[i]);
      CAPTURE(alg.basis()[j]);
      CHECK(alg.table().product(i, j) == parse_combination(rows[i][j], alg.basis(), Q, none));
    }
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "jalg-test-catalog";
  std::filesystem::create_directories(dir / "sub");
  return dir;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }
}  // namespace

TEST_CASE("catalog contents") {
  for (const char* name : {"J5", "J7", "J17", "defmap-J", "A2", "V-abelian-2", "V", "V1", "V2", "V2-prime", "V3"}) {
    CAPTURE(name);
    CHECK(catalog_entry(name).kind == CatalogKind::algebra);
  }
  for (const char* name : {"J5-pair", "J7-pair", "J17-pair", "defmap-pair"})
    CHECK(catalog_entry(name).kind == CatalogKind::pair);
  for (const auto& e : catalog_entries()) CHECK_FALSE(e.description.empty());
  CHECK_THROWS_AS(catalog_entry("J9"), std::out_of_range);
  CHECK_THROWS_AS(catalog_algebra("J5-pair"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_pair("J5"), std::invalid_argument);
}

TEST_CASE("multiplication tables of the catalog") {
  check_table(catalog_algebra("J5"), {{"a", "0", "1/2 u", "v"},
                                      {"0", "b", "1/2 u", "0"},
                                      {"1/2 u", "1/2 u", "0", "0"},
                                      {"v", "0", "0", "0"}});
  check_table(catalog_algebra("J7"), {{"a", "0", "1/2 c", "1/2 u", "1/2 v"},
                                      {"0", "b", "1/2 c", "1/2 u", "1/2 v"},
                                      {"1/2 c", "1/2 c", "0", "1/2 a + 1/2 b", "0"},
                                      {"1/2 u", "1/2 u", "1/2 a + 1/2 b", "0", "0"},
                                      {"1/2 v", "1/2 v", "0", "0", "0"}});
  check_table(catalog_algebra("J17"), {{"a", "b", "1/2 c", "0", "1/2 v"},
                                       {"b", "0", "0", "0", "0"},
                                       {"1/2 c", "0", "0", "1/2 c", "0"},
                                       {"0", "0", "1/2 c", "u", "1/2 v"},
                                       {"1/2 v", "0", "0", "1/2 v", "0"}});
  check_table(catalog_algebra("defmap-J"), {{"a", "0", "0", "1/2 v"},
                                            {"0", "b", "0", "1/2 v"},
                                            {"0", "0", "u", "0"},
                                            {"1/2 v", "1/2 v", "0", "0"}});
  check_table(catalog_algebra("A2"), {{"a", "0"}, {"0", "b"}});
  check_table(catalog_algebra("V"), {{"u", "0"}, {"0", "0"}});
  check_table(catalog_algebra("V1"), {{"u", "0"}, {"0", "v"}});
  check_table(catalog_algebra("V2"), {{"u", "v"}, {"v", "0"}});
  check_table(catalog_algebra("V2-prime"), {{"u", "v"}, {"v", "v"}});
  check_table(catalog_algebra("V3"), {{"u", "1/2 v"}, {"1/2 v", "0"}});
  CHECK(catalog_algebra("V-abelian-2").is_abelian());
}

TEST_CASE("catalog algebras are Jordan by exhaustive evaluation mod 7") {
  for (const auto& e : catalog_entries()) {
    if (e.kind != CatalogKind::algebra) continue;
    CAPTURE(e.name);
    const Algebra a = catalog_algebra(e.name);
    CHECK(a.state() == JordanState::jordan);
    CHECK(oracle::jordan_exhaustive(oracle::mod_tensor(a.table(), 7)));
  }
}

TEST_CASE("catalog pairs are matched and rebuild their algebras") {
  const std::vector<std::pair<std::string, std::string>> built{
      {"J5-pair", "J5"}, {"J7-pair", "J7"}, {"J17-pair", "J17"}, {"defmap-pair", "defmap-J"}};
  for (const auto& [pair, alg] : built) {
    CAPTURE(pair);
    const MatchedPair mp = catalog_pair(pair);
    CHECK(mp.state == PairState::matched);
    CHECK(mp_check(mp).ok());
    const Algebra e = bicross(mp).product;
    CHECK(e == catalog_algebra(alg));
    CHECK(oracle::bicross_mod(oracle::mod_tensor(mp.A.table(), 7), oracle::mod_tensor(mp.V.table(), 7),
                              oracle::mod_tensor(mp.right, 7), oracle::mod_tensor(mp.left, 7))
              .t == oracle::mod_tensor(e.table(), 7).t);
  }
}

TEST_CASE("loading files and pseudo-paths") {
  CHECK(load_algebra("catalog:J5") == catalog_algebra("J5"));
  CHECK(load_pair("catalog:J17-pair") == catalog_pair("J17-pair"));
  CHECK_THROWS_AS(load_algebra("catalog:nothing"), std::out_of_range);

  const auto dir = scratch_dir();
  write(dir / "sub" / "line.jalg", "field Q\nbasis x\n");
  write(dir / "plane.jalg", "field Q\nbasis a b\nmult a a = a\nmult b b = b\n");
  write(dir / "pair.jpair",
        "algebra A\n@include plane.jalg\nend\nalgebra V\n@include sub/line.jalg\nend\nright x . a = 1/2 x\n");
  write(dir / "sub" / "mixed.jpair", "algebra A\n@include catalog:A2\nend\nalgebra V\n@include line.jalg\nend\n");

  const MatchedPair mp = load_pair((dir / "pair.jpair").string());
  CHECK(mp.A == catalog_algebra("A2"));
  CHECK(mp.V.dim() == 1);
  CHECK(mp_check(mp).ok());
  CHECK(load_pair((dir / "sub" / "mixed.jpair").string()).right.is_zero());
  CHECK_THROWS(load_algebra((dir / "missing.jalg").string()));
  write(dir / "broken.jpair", "algebra A\n@include nowhere.jalg\nend\n");
  CHECK_THROWS_AS(load_pair((dir / "broken.jpair").string()), ParseError);
  std::filesystem::remove_all(dir);
}
