#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "jalg/catalog.hpp"
#include "jalg/io.hpp"

using namespace jalg;

namespace {
const Field Q = Field::rationals();

std::size_t error_line(const std::string& text) {
  try {
    parse_algebra(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::size_t pair_error_line(const std::string& text) {
  try {
    parse_pair(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

const char* kPlaneA = "algebra A\nfield Q\nbasis a b\nmult a a = a\nmult b b = b\nend\n";
const char* kPlaneV = "algebra V\nfield Q\nbasis u v\nmult u u = u\nend\n";
}  // namespace

TEST_CASE("combinations") {
  VarNames params;
  const std::vector<std::string> labels{"a", "b", "c"};
  const Element e = parse_combination("3/2 a - b + 0 c", labels, Q, params);
  CHECK(e[0] == Poly(Scalar(Q, mpq_class(3, 2))));
  CHECK(e[1] == Poly(Scalar(Q, -1)));
  CHECK(e[2].is_zero());
  CHECK(is_zero(parse_combination("0", labels, Q, params)));
  CHECK(parse_combination("a + a", labels, Q, params)[0] == Poly(Scalar(Q, 2)));
  CHECK_THROWS(parse_combination("alpha b", labels, Q, params));
  const Element p = parse_combination("2 alpha^2 * c - alpha b", labels, Q, params, true);
  CHECK(params.size() == 1);
  CHECK(format_element(p, labels, params) == "-alpha b + 2*alpha^2 c");
  CHECK_THROWS(parse_combination("a b", labels, Q, params));
  CHECK_THROWS(parse_combination("d", labels, Q, params));
  CHECK_THROWS(parse_combination("1/0 a", labels, Q, params));
  CHECK_THROWS(parse_combination("1/5 a", labels, Field::prime(5), params));
  CHECK(parse_combination("7 a", labels, Field::prime(5), params)[0] == Poly(Scalar(Field::prime(5), 2)));
}

TEST_CASE("algebra files") {
  const Algebra one = parse_algebra("field Q\ndim 2\nbasis u v\nmult u u = u\n");
  CHECK(one == testing::table("Q", "u v", "u u = u"));
  CHECK(one.multiply(one.unit(1), one.unit(1))[0].is_zero());
  CHECK(one.multiply(one.unit(0), one.unit(1))[1].is_zero());

  const Algebra j5 = parse_algebra(
      "field Q\ndim 4\nbasis a b u v\nmult a a = a\nmult b b = b\nmult a u = 1/2 u\nmult b u = 1/2 u\nmult a v = v\n");
  // literal table: rows a b u v, entries by column
  const char* rows[4][4] = {{"a", "0", "1/2 u", "v"}, {"0", "b", "1/2 u", "0"},
                            {"1/2 u", "1/2 u", "0", "0"}, {"v", "0", "0", "0"}};
  VarNames none;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(j5.table().product(i, j) == parse_combination(rows[i][j], j5.basis(), Q, none));
  CHECK(j5 == catalog_algebra("J5"));

  const Algebra f7 = parse_algebra("# comment\nfield F7\nbasis x\nmult x x = 8 x  # trailing\n");
  CHECK(f7.field() == Field::prime(7));
  CHECK(f7.sc(0, 0, 0) == Poly(Scalar(Field::prime(7), 1)));

  const Algebra param = parse_algebra("field Q\nparam beta\nbasis u v\nmult v v = beta v\n");
  CHECK(param.params().size() == 1);
  CHECK(param.uses_parameters());
}

TEST_CASE("algebra file errors carry line numbers") {
  CHECK(error_line("field Q\nbasis a b\nmult a b = 0\nmult b a = 0\n") == 4);
  CHECK(error_line("field Q\nbasis a b\nmult a a = a\nmult a a = b\n") == 4);
  CHECK(error_line("field Q\nbasis a b\nmult a c = a\n") == 3);
  CHECK(error_line("field Q\nbasis a b\nmult a a = c\n") == 3);
  CHECK(error_line("field Q\ndim 3\nbasis a b\n") == 2);
  CHECK(error_line("basis a b\nmult a a = a\n") == 2);
  CHECK(error_line("field Q\nmult a a = a\n") == 2);
  CHECK(error_line("field Q\nbasis a a\n") == 2);
  CHECK(error_line("field F4\nbasis a\n") == 1);
  CHECK(error_line("field Q\nbasis a\nsquare a = a\n") == 3);
  CHECK(error_line("field Q\ndim 0\nbasis a\n") == 2);
  try {
    parse_algebra("field Q\nbasis a b\nmult a b = 0\nmult b a = 0\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("line 4: ", 0) == 0);
  }
}

TEST_CASE("writer produces the canonical form") {
  const Algebra a = parse_algebra("field Q\nbasis u v\nmult v u = 1/2 v\nmult u u = u\n");
  const std::string text = write_algebra(a);
  CHECK(text == "field Q\ndim 2\nbasis u v\nmult u u = u\nmult u v = 1/2 v\n");
  CHECK(write_algebra(parse_algebra(text)) == text);
}

TEST_CASE("every catalog entry round trips") {
  for (const auto& e : catalog_entries()) {
    CAPTURE(e.name);
    if (e.kind == CatalogKind::algebra) {
      const Algebra a = catalog_algebra(e.name);
      const Algebra b = parse_algebra(write_algebra(a));
      CHECK(a == b);
      CHECK(a.basis() == b.basis());
      CHECK(write_algebra(b) == write_algebra(a));
    } else {
      const MatchedPair p = catalog_pair(e.name);
      const MatchedPair q = parse_pair(write_pair(p));
      CHECK(p == q);
      CHECK(write_pair(q) == write_pair(p));
    }
  }
}

TEST_CASE("pair files") {
  const std::string j17 = std::string(
                              "algebra A\n  field Q\n  basis a b c\n  mult a a = a\n  mult a b = b\n"
                              "  mult a c = 1/2 c\nend\n") +
                          "algebra V\n  field Q\n  basis u v\n  mult u u = u\n  mult u v = 1/2 v\nend\n" +
                          "left u . c = 1/2 c\nright v . a = 1/2 v\n";
  const MatchedPair mp = parse_pair(j17);
  CHECK(mp.state == PairState::unchecked);
  CHECK(mp.act_left(mp.V.unit(0), mp.A.unit(2)) == Element{Poly(), Poly(), Poly(Scalar(Q, mpq_class(1, 2)))});
  CHECK(mp.act_right(mp.V.unit(1), mp.A.unit(0)) == Element{Poly(), Poly(Scalar(Q, mpq_class(1, 2)))});
  CHECK(mp.act_right(mp.V.unit(1), mp.A.unit(1)) == Element{Poly(), Poly()});
  CHECK(mp == catalog_pair("J17-pair"));

  const MatchedPair bare = parse_pair(std::string(kPlaneA) + kPlaneV);
  CHECK(bare.left.is_zero());
  CHECK(bare.right.is_zero());

  CHECK(pair_error_line(std::string(kPlaneA) + kPlaneV + "left w . a = a\n") == 12);
  CHECK(pair_error_line(std::string(kPlaneA) + kPlaneV + "left u . z = a\n") == 12);
  CHECK(pair_error_line(std::string(kPlaneA) + kPlaneV + "right u . a = a\n") == 12);
  CHECK(pair_error_line(std::string(kPlaneA) + kPlaneV + "right u . a = u\nright u . a = v\n") == 13);
  CHECK(pair_error_line(std::string(kPlaneA) + "algebra V\nfield F5\nbasis u\nend\n") > 0);
  CHECK(pair_error_line(kPlaneA) > 0);
  CHECK(pair_error_line(std::string(kPlaneA) + "algebra V\nfield Q\nbasis u\n") == 7);
  CHECK_THROWS_AS(parse_pair(std::string(kPlaneA) + "algebra V\n@include x\nend\n"), ParseError);
}

TEST_CASE("includes resolve through the callback") {
  const std::string text = "algebra A\n@include plane\nend\nalgebra V\n@include line\nend\nright x . a = 1/2 x\n";
  const MatchedPair mp = parse_pair(text, [](const std::string& ref) {
    if (ref == "plane") return testing::table("Q", "a b", "a a = a; b b = b");
    return testing::table("Q", "x", "");
  });
  CHECK(mp.A.dim() == 2);
  CHECK(mp.V.basis() == std::vector<std::string>{"x"});
  MatchedPair copy = mp;
  CHECK(verify_pair(copy) == mp_check(mp).ok());
}

TEST_CASE("maps and subspaces") {
  VarNames params;
  const std::vector<std::string> v{"u", "v"}, a{"a", "b"};
  const LinearMap r = parse_map("u -> a + b; v -> alpha b", v, a, Q, params);
  CHECK(params.size() == 1);
  CHECK(r.uses_parameters());
  CHECK(r.to_string(v, a, params) == "u -> a + b; v -> alpha b");
  const LinearMap partial = parse_map("v -> 2 a", v, a, Q, params);
  CHECK(is_zero(partial.column(0)));
  CHECK_THROWS(parse_map("w -> a", v, a, Q, params));
  CHECK_THROWS(parse_map("u -> a; u -> b", v, a, Q, params));

  const Subspace s = parse_subspace("a + b, 2 a + 2 b, c", {"a", "b", "c"}, Q);
  CHECK(s.dim() == 2);
  CHECK(s == Subspace::span(Q, 3, {to_vector(parse_combination("a + b", {"a", "b", "c"}, Q, params)),
                                   unit_vector(Q, 3, 2)}));
}
