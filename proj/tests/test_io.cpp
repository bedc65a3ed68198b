#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include <jumploci/io_json.hpp>
#include <jumploci/models.hpp>

using namespace jumploci;

TEST_CASE("fnv1a digests match the reference vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64_hex("") == "fnv1a:cbf29ce484222325");
  CHECK(fnv1a64_hex("a") == "fnv1a:af63dc4c8601ec8c");
  CHECK(fnv1a64_hex("jumploci").size() == 22);
  CHECK(fnv1a64("ab") != fnv1a64("ba"));
}

TEST_CASE("scalar literals") {
  CHECK(parse_scalar("3") == Scalar(Rational(3)));
  CHECK(parse_scalar("-3/7") == Scalar(rational(-3, 7)));
  CHECK(parse_scalar("-6/14") == Scalar(rational(-3, 7)));
  CHECK(parse_scalar("i") == Scalar(GaussianRational{Rational(0), Rational(1)}));
  CHECK(parse_scalar("1/2+2/3i") ==
        Scalar(GaussianRational{rational(1, 2), rational(2, 3)}));
  CHECK(parse_scalar("1/2-2/3i") ==
        Scalar(GaussianRational{rational(1, 2), rational(-2, 3)}));
  CHECK_THROWS_AS(parse_scalar(""), const ParseError&);
  CHECK_THROWS_AS(parse_scalar("1.5"), const ParseError&);
  CHECK_THROWS_AS(parse_scalar("1/0"), const ParseError&);
  CHECK_THROWS_AS(parse_scalar("x"), const ParseError&);
}

TEST_CASE("cdga json roundtrips") {
  for (const std::string fx : {"torus2", "pencil3", "solv2", "heis3"}) {
    const Cdga a = fixture_cdga(fx);
    const std::string text = cdga_json(a);
    const Cdga back = parse_cdga(text);
    CHECK(cdga_json(back) == text);
    CHECK(back.top_degree() == a.top_degree());
    for (int deg = 0; deg <= a.top_degree(); ++deg) {
      CHECK(back.dim(deg) == a.dim(deg));
      CHECK(back.diff(deg) == a.diff(deg));
    }
    CHECK(back.zero_above() == a.zero_above());
    CHECK(back.has_weights() == a.has_weights());
    CHECK(cohomology_dims(back, a.top_degree()) == cohomology_dims(a, a.top_degree()));
  }
}

TEST_CASE("lie arrangement and presentation json roundtrips") {
  for (const std::string name : {"solv2", "heis3", "abelian3"}) {
    const LieAlgebra e = preset_lie(name);
    const std::string text = lie_json(e);
    const LieAlgebra back = parse_lie(text);
    CHECK(lie_json(back) == text);
    CHECK(back.dim == e.dim);
    CHECK(back.labels == e.labels);
    CHECK(back.brackets.size() == e.brackets.size());
  }

  const Arrangement arr = braid_a3_arrangement();
  const Arrangement aback = parse_arrangement(arrangement_json(arr));
  CHECK(arrangement_json(aback) == arrangement_json(arr));
  CHECK(aback.normals == arr.normals);
  CHECK(aback.labels == arr.labels);

  for (const std::string name : {"z2", "pencil3", "free2"}) {
    const Presentation p = fixture_presentation(name);
    const Presentation pback = parse_presentation(presentation_json(p));
    CHECK(presentation_json(pback) == presentation_json(p));
    CHECK(pback.generators == p.generators);
    CHECK(pback.relators == p.relators);
  }
}

TEST_CASE("gaussian and weight data survive the roundtrip") {
  Cdga a(GradedBasis({1, 2, 1}), true);
  a.set_product(1, 0, 1, 1, {Scalar(GaussianRational{Rational(0), Rational(1)})});
  const Cdga back = parse_cdga(cdga_json(a));
  CHECK(back.product(1, 0, 1, 1)[0] == Scalar(GaussianRational{Rational(0), Rational(1)}));

  const Cdga t2 = fixture_cdga("torus2");
  const Cdga t2back = parse_cdga(cdga_json(t2));
  REQUIRE(t2back.has_weights());
  CHECK(t2back.weight(1, 0) == 1);
  CHECK(t2back.weight(2, 0) == 2);
}

TEST_CASE("parse failures carry a location") {
  CHECK_THROWS_AS(parse_cdga("not json"), const ParseError&);

  try {
    parse_cdga(R"({"schema": "cdga/9", "dims": [1]})");
    FAIL("schema mismatch accepted");
  } catch (const ParseError& e) {
    CHECK(e.location == "schema");
    CHECK(std::string(e.what()).find("cdga/1") != std::string::npos);
  }

  try {
    parse_cdga(R"({"schema": "cdga/1"})");
    FAIL("missing dims accepted");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("dims") != std::string::npos);
  }

  try {
    parse_cdga(R"({"schema": "cdga/1", "dims": [1, 2],
                   "diff": [[0, [[0, 0, "1/0"]]]]})");
    FAIL("bad scalar accepted");
  } catch (const ParseError& e) {
    CHECK(!e.location.empty());
  }

  CHECK_THROWS_AS(parse_lie(R"({"schema": "lie/1", "dim": -2})"), const ParseError&);
  CHECK_THROWS_AS(parse_presentation(R"({"schema": "presentation/1", "generators": 1,
                                         "relators": [[2]]})"),
                  const ParseError&);
  CHECK_THROWS_AS(parse_arrangement(R"({"schema": "arrangement/1", "ambient_dim": 2,
                                        "normals": [["1", "0", "0"]]})"),
                  const ParseError&);
}
