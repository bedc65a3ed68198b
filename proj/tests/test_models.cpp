#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include <jumploci/models.hpp>

using namespace jumploci;

TEST_CASE("arrangement construction and validation") {
  const Arrangement arr = make_arrangement(2, {{1, 0}, {0, 1}, {1, 1}});
  CHECK(arr.labels == std::vector<std::string>{"e1", "e2", "e3"});
  CHECK(arr.metadata.empty());

  CHECK_THROWS_AS(make_arrangement(0, {}), const PreconditionError&);
  CHECK_THROWS_AS(make_arrangement(2, {{1, 0, 0}}), const PreconditionError&);
  CHECK_THROWS_AS(make_arrangement(2, {{0, 0}}), const PreconditionError&);
  CHECK_THROWS_AS(make_arrangement(2, {{1, 0}}, {"a", "b"}), const PreconditionError&);
  std::vector<std::vector<Rational>> many(21, {Rational(1)});
  CHECK_THROWS_AS(make_arrangement(1, many), const PreconditionError&);
}

TEST_CASE("coning an affine line pair gives the pencil combinatorics") {
  // {x = 0} and {x = 1} in C^1, plus the hyperplane at infinity
  const Arrangement arr =
      cone_arrangement(1, {{Rational(1)}, {Rational(1)}}, {Rational(0), Rational(1)}, {"h0", "h1"});
  CHECK(arr.ambient_dim == 2);
  REQUIRE(arr.normals.size() == 3);
  CHECK(arr.normals[1] == std::vector<Rational>{Rational(1), Rational(-1)});
  CHECK(arr.labels == std::vector<std::string>{"h0", "h1", "h_inf"});
  CHECK(!arr.metadata.empty());
  CHECK(arrangement_rank(arr) == 2);
  CHECK(circuits(arr) == std::vector<std::vector<int>>{{0, 1, 2}});
  const Cdga a = os_algebra(arr);
  CHECK(a.dim(0) == 1);
  CHECK(a.dim(1) == 3);
  CHECK(a.dim(2) == 2);
  CHECK_THROWS_AS(cone_arrangement(1, {{Rational(1)}}, {}), const PreconditionError&);
}

TEST_CASE("ranks and circuits of the stock arrangements") {
  CHECK(arrangement_rank(pencil_arrangement()) == 2);
  CHECK(arrangement_rank(braid_a3_arrangement()) == 3);
  CHECK(arrangement_rank(boolean_arrangement(4)) == 4);

  CHECK(circuits(boolean_arrangement(3)).empty());
  CHECK(circuits(pencil_arrangement()) == std::vector<std::vector<int>>{{0, 1, 2}});

  // the braid arrangement carries the cycles of the complete graph on 4 vertices
  const auto cs = circuits(braid_a3_arrangement());
  REQUIRE(cs.size() == 7);
  for (int i = 0; i < 4; ++i) CHECK(cs[i].size() == 3);
  for (int i = 4; i < 7; ++i) CHECK(cs[i].size() == 4);
}

TEST_CASE("orlik-solomon algebras") {
  const Cdga braid = os_algebra(braid_a3_arrangement());
  CHECK(braid.top_degree() == 3);
  CHECK(braid.dim(0) == 1);
  CHECK(braid.dim(1) == 6);
  CHECK(braid.dim(2) == 11);
  CHECK(braid.dim(3) == 6);
  CHECK(validate_cdga(braid).empty());
  for (int deg = 0; deg <= 3; ++deg) CHECK(braid.diff(deg).nnz() == 0);
  CHECK(braid.weight(1, 0) == 1);
  CHECK(braid.weight(2, 0) == 2);

  // truncation keeps one degree beyond the bound and drops the tail claim
  const Cdga tr = os_algebra(braid_a3_arrangement(), 1);
  CHECK(tr.top_degree() == 2);
  CHECK(tr.dim(2) == 11);
  CHECK(!tr.zero_above());

  // boolean arrangements give exterior algebras
  const Cdga b2 = os_algebra(boolean_arrangement(2));
  CHECK(cohomology_dims(b2, 2) == std::vector<int>{1, 2, 1});

  // nbc rewriting in the pencil: e2 e3 = e1 e3 - e1 e2
  const Cdga p = os_algebra(pencil_arrangement());
  const auto prod = p.product(1, 1, 1, 2);
  REQUIRE(prod.size() == 2);
  CHECK(prod[0] == Scalar(Rational(-1)));
  CHECK(prod[1] == Scalar(Rational(1)));
}

TEST_CASE("preset lie algebras and representations") {
  CHECK(validate_lie(preset_lie("solv2")).empty());
  CHECK(validate_lie(preset_lie("heis3")).empty());
  const LieAlgebra ab = preset_lie("abelian4");
  CHECK(ab.dim == 4);
  CHECK(ab.brackets.empty());
  CHECK(validate_lie(ab).empty());
  CHECK_THROWS_AS(preset_lie("su9"), const PreconditionError&);

  const LieRep one = rank_one_rep();
  CHECK(one.dimV == 1);
  CHECK(one.lie.dim == 1);
  CHECK(one.theta[0] == SparseMatrix::identity(1));
  CHECK(validate_rep(one).empty());

  const LieRep h = heis3_standard_rep();
  CHECK(h.dimV == 3);
  CHECK(validate_rep(h).empty());
  CHECK(h.theta[0] * h.theta[1] - h.theta[1] * h.theta[0] == h.theta[2]);
  // strictly upper triangular images
  for (const auto& m : h.theta)
    for (const auto& e : m.entries()) CHECK(e.row < e.col);
}

TEST_CASE("ring tables build validated algebras") {
  RingTables t;
  t.dims = {1, 2, 1};
  t.labels = {{"1"}, {"a", "b"}, {"ab"}};
  t.products = {{1, 2, {Scalar(1)}}};
  const Cdga a = ring_cdga(t);
  CHECK(cohomology_dims(a, 2) == std::vector<int>{1, 2, 1});
  CHECK(a.weight(1, 0) == 1);
  CHECK(a.weight(2, 0) == 2);

  RingTables bad = t;
  bad.products.push_back({1, 1, {Scalar(1)}});  // a.a = ab contradicts a.a = -a.a
  try {
    ring_cdga(bad);
    FAIL("expected inconsistent tables to be rejected");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("graded-commutativity") != std::string::npos);
  }

  RingTables order = t;
  order.products = {{2, 1, {Scalar(1)}}};
  CHECK_THROWS_AS(ring_cdga(order), const PreconditionError&);

  RingTables range = t;
  range.products = {{1, 9, {Scalar(1)}}};
  CHECK_THROWS_AS(ring_cdga(range), const PreconditionError&);
}

TEST_CASE("bigraded weight check") {
  const Cdga t2 = fixture_cdga("torus2");
  using PL = std::pair<int, int>;

  const BigradedReport ok =
      bigraded_weight_check(t2, {{PL{0, 0}}, {PL{1, 0}, PL{1, 0}}, {PL{2, 0}}});
  CHECK(ok.violations.empty());
  CHECK(ok.induced_weights == std::vector<std::vector<int>>{{0}, {1, 1}, {2}});

  // induced weights p + 2l disagree with the stored ones
  const BigradedReport shifted =
      bigraded_weight_check(t2, {{PL{0, 0}}, {PL{0, 1}, PL{0, 1}}, {PL{0, 2}}});
  CHECK(shifted.induced_weights == std::vector<std::vector<int>>{{0}, {2, 2}, {4}});
  int mismatches = 0;
  for (const auto& v : shifted.violations) mismatches += v.check == "weight-mismatch";
  CHECK(mismatches == 3);

  // p + l must equal the degree, and degree-1 elements need p + 2l >= 1
  const BigradedReport broken =
      bigraded_weight_check(t2, {{PL{0, 0}}, {PL{0, 0}, PL{1, 0}}, {PL{2, 0}}});
  bool total = false, positivity = false, mult = false;
  for (const auto& v : broken.violations) {
    total = total || v.check == "bidegree-total";
    positivity = positivity || v.check == "weight-positivity";
    mult = mult || v.check == "bidegree-multiplicativity";
  }
  CHECK(total);
  CHECK(positivity);
  CHECK(mult);

  // no consistent bigrading moves d along (p, l) -> (p + 2, l - 1) on solv2
  const Cdga s = fixture_cdga("solv2");
  const BigradedReport dshift =
      bigraded_weight_check(s, {{PL{0, 0}}, {PL{1, 0}, PL{0, 1}}, {PL{1, 1}}});
  bool diff = false;
  for (const auto& v : dshift.violations) diff = diff || v.check == "bidegree-differential";
  CHECK(diff);

  CHECK_THROWS_AS(bigraded_weight_check(t2, {{PL{0, 0}}}), const PreconditionError&);
}

TEST_CASE("shared fixtures") {
  CHECK(cohomology_dims(fixture_cdga("torus2"), 2) == std::vector<int>{1, 2, 1});
  CHECK(cohomology_dims(fixture_cdga("pencil3"), 2) == std::vector<int>{1, 3, 2});
  CHECK_THROWS_AS(fixture_cdga("torus99"), const PreconditionError&);

  const Presentation z2 = fixture_presentation("z2");
  CHECK(z2.generators == 2);
  REQUIRE(z2.relators.size() == 1);
  CHECK(z2.relators[0] == std::vector<int>{1, 2, -1, -2});
  CHECK(fixture_presentation("free2").relators.empty());
  CHECK(fixture_presentation("pencil3").generators == 3);
  CHECK_THROWS_AS(fixture_presentation("zz"), const PreconditionError&);
}
