#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include <jumploci/models.hpp>
#include <jumploci/resonance.hpp>

#include "test_support.hpp"

using namespace jumploci;
using testsupport::column_matrix;

namespace {

LinearSubspaceQ plane_sum_zero() {
  return LinearSubspaceQ::from_equations(
      3, SparseMatrix::from_triplets(
             1, 3, {{0, 0, Scalar(1)}, {0, 1, Scalar(1)}, {0, 2, Scalar(1)}}));
}

LaurentPoly laurent(int nvars, std::vector<std::vector<long>> support,
                    std::vector<Rational> coeffs) {
  return LaurentPoly{nvars, std::move(support), std::move(coeffs)};
}

}  // namespace

TEST_CASE("subspaces are stored canonically") {
  const LinearSubspaceQ whole = LinearSubspaceQ::whole(3);
  CHECK(whole.codim() == 0);
  CHECK(whole.dim() == 3);
  CHECK(whole.contains({Rational(1), Rational(2), Rational(3)}));

  const auto xy1 = LinearSubspaceQ::from_span(3, {{1, 0, 0}, {0, 1, 0}});
  const auto xy2 = LinearSubspaceQ::from_span(3, {{1, 1, 0}, {1, -1, 0}, {2, 0, 0}});
  CHECK(xy1 == xy2);
  CHECK(xy1.dim() == 2);

  const auto pl1 = plane_sum_zero();
  const auto pl2 = LinearSubspaceQ::from_equations(
      3, SparseMatrix::from_triplets(
             1, 3, {{0, 0, Scalar(Rational(-2))}, {0, 1, Scalar(Rational(-2))},
                    {0, 2, Scalar(Rational(-2))}}));
  CHECK(pl1 == pl2);
  CHECK(pl1.contains({Rational(1), Rational(-1), Rational(0)}));
  CHECK(!pl1.contains({Rational(1), Rational(0), Rational(0)}));

  const auto line = LinearSubspaceQ::from_span(3, {{1, -1, 0}});
  CHECK(line.subspace_of(pl1));
  CHECK(!pl1.subspace_of(line));
  CHECK(LinearSubspaceQ::from_span(3, pl1.span()) == pl1);

  const auto origin = LinearSubspaceQ::from_span(3, {});
  CHECK(origin.dim() == 0);
  CHECK(origin.subspace_of(line));
  CHECK(origin.contains({Rational(0), Rational(0), Rational(0)}));

  CHECK_THROWS_AS(pl1.contains({Rational(0)}), const PreconditionError&);
  CHECK_THROWS_AS(LinearSubspaceQ::from_span(3, {{1, 0}}), const PreconditionError&);
}

TEST_CASE("resonance membership at pinned points") {
  const LieRep r = testsupport::rank_one();
  const Cdga t2 = fixture_cdga("torus2");
  CHECK(!resonance_membership(t2, r, FlatConnection{column_matrix({Rational(1), Rational(2)})}, 1,
                              1));
  CHECK(resonance_membership(t2, r, FlatConnection{SparseMatrix(2, 1)}, 1, 2));
  CHECK(!resonance_membership(t2, r, FlatConnection{SparseMatrix(2, 1)}, 1, 3));

  const Cdga p = fixture_cdga("pencil3");
  const FlatConnection res{column_matrix({Rational(1), Rational(-1), Rational(0)})};
  CHECK(resonance_membership(p, r, res, 1, 1));
  CHECK(!resonance_membership(p, r, res, 1, 2));
  CHECK(resonance_membership(p, r, res, 2, 1));
  CHECK(resonance_membership(p, r, FlatConnection{SparseMatrix(3, 1)}, 1, 3));

  const Cdga s = fixture_cdga("solv2");
  CHECK_THROWS_AS(
      resonance_membership(s, r, FlatConnection{column_matrix({Rational(1), Rational(0)})}, 1, 1),
      const PreconditionError&);
}

TEST_CASE("scanning along a line reports flatness and betti numbers") {
  const LieRep r = testsupport::rank_one();
  const Cdga s = fixture_cdga("solv2");
  const auto pts = line_scan(s, r, FlatConnection{column_matrix({Rational(0), Rational(1)})},
                             {Rational(0), Rational(1), Rational(2)}, 1, ScanMode::kPlainScaling);
  REQUIRE(pts.size() == 3);
  const std::vector<int> expect = {1, 1, 0};
  for (int k = 0; k < 3; ++k) {
    CHECK(pts[k].flat);
    CHECK(pts[k].beta == expect[k]);
  }

  const auto bad = line_scan(s, r, FlatConnection{column_matrix({Rational(1), Rational(0)})},
                             {Rational(0), Rational(1)}, 1, ScanMode::kPlainScaling);
  CHECK(bad[0].flat);
  CHECK(bad[0].beta == 1);
  CHECK(!bad[1].flat);
  CHECK(bad[1].beta == -1);

  // weight action on uniform weight one agrees with plain scaling
  const Cdga t2 = fixture_cdga("torus2");
  const FlatConnection om{column_matrix({Rational(1), Rational(2)})};
  const std::vector<Rational> ts = {Rational(0), Rational(1), jumploci::rational(1, 2)};
  const auto plain = line_scan(t2, r, om, ts, 1, ScanMode::kPlainScaling);
  const auto action = line_scan(t2, r, om, ts, 1, ScanMode::kWeightAction);
  for (size_t k = 0; k < ts.size(); ++k) {
    CHECK(plain[k].flat == action[k].flat);
    CHECK(plain[k].beta == action[k].beta);
  }

  // weight action without stored weights is refused
  CHECK_THROWS_AS(line_scan(s, r, FlatConnection{column_matrix({Rational(0), Rational(1)})},
                            {Rational(2)}, 1, ScanMode::kWeightAction),
                  const PreconditionError&);
}

TEST_CASE("generic betti numbers along a line") {
  const LieRep r = testsupport::rank_one();
  const Cdga s = fixture_cdga("solv2");
  CHECK(generic_betti(s, r, FlatConnection{column_matrix({Rational(0), Rational(1)})}, 1) == 0);
  CHECK_THROWS_AS(generic_betti(s, r, FlatConnection{column_matrix({Rational(1), Rational(0)})}, 1),
                  const PreconditionError&);

  const Cdga p = fixture_cdga("pencil3");
  CHECK(generic_betti(p, r, FlatConnection{column_matrix({Rational(1), Rational(-1), Rational(0)})},
                      1) == 1);
  CHECK(generic_betti(p, r, FlatConnection{column_matrix({Rational(1), Rational(1), Rational(1)})},
                      1) == 0);
  CHECK(generic_betti(p, r, FlatConnection{SparseMatrix(3, 1)}, 1) == 3);

  const Cdga t2 = fixture_cdga("torus2");
  CHECK(generic_betti(t2, r, FlatConnection{column_matrix({Rational(1), Rational(1)})}, 1) == 0);
}

TEST_CASE("certified components of the rank one loci") {
  const Cdga t2 = fixture_cdga("torus2");
  const ComponentReport rt = linear_components_rank_one(t2, 1, 1, 100000);
  CHECK(rt.complete);
  REQUIRE(rt.components.size() == 1);
  CHECK(rt.components[0].dim() == 0);
  CHECK(rt.weighted_homogeneous[0]);

  const Cdga p = fixture_cdga("pencil3");
  const ComponentReport rp = linear_components_rank_one(p, 1, 1, 100000);
  CHECK(rp.complete);
  REQUIRE(rp.components.size() == 1);
  CHECK(rp.components[0] == plane_sum_zero());
  CHECK(rp.weighted_homogeneous[0]);
  CHECK(rp.evaluations > 0);

  // only the origin jumps deeper
  const ComponentReport rp2 = linear_components_rank_one(p, 1, 2, 100000);
  REQUIRE(rp2.components.size() == 1);
  CHECK(rp2.components[0].dim() == 0);
  const ComponentReport rp3 = linear_components_rank_one(p, 1, 3, 100000);
  REQUIRE(rp3.components.size() == 1);
  CHECK(rp3.components[0].dim() == 0);
  CHECK(linear_components_rank_one(p, 1, 4, 100000).components.empty());

  // an exhausted budget is reported, not papered over
  const ComponentReport tiny = linear_components_rank_one(p, 1, 1, 2);
  CHECK(!tiny.complete);

  // nonzero degree-1 differentials are rejected
  CHECK_THROWS_AS(linear_components_rank_one(fixture_cdga("solv2"), 1, 1, 1000),
                  const PreconditionError&);
  CHECK_THROWS_AS(linear_components_rank_one(fixture_cdga("heis3"), 1, 1, 1000),
                  const PreconditionError&);
}

TEST_CASE("weighted exponential tangent cones") {
  // t1 t2 = 1: directions with z1 + z2 = 0
  {
    const auto cones = wetc(laurent(2, {{1, 1}, {0, 0}}, {Rational(1), Rational(-1)}),
                            identity_frame(2));
    REQUIRE(cones.size() == 1);
    CHECK(cones[0] == LinearSubspaceQ::from_span(2, {{1, -1}}));
  }
  // t1 + t2 = 2: only the origin
  {
    const auto cones = wetc(
        laurent(2, {{1, 0}, {0, 1}, {0, 0}}, {Rational(1), Rational(1), Rational(-2)}),
        identity_frame(2));
    REQUIRE(cones.size() == 1);
    CHECK(cones[0].dim() == 0);
  }
  // t1 = t2 depends on the weights
  {
    const LaurentPoly f = laurent(2, {{1, 0}, {0, 1}}, {Rational(1), Rational(-1)});
    const auto diag = wetc(f, identity_frame(2));
    REQUIRE(diag.size() == 1);
    CHECK(diag[0] == LinearSubspaceQ::from_span(2, {{1, 1}}));
    const auto skew = wetc(f, identity_frame(2, {1, 2}));
    REQUIRE(skew.size() == 1);
    CHECK(skew[0].dim() == 0);
  }
  // products give the union of the factor cones
  {
    const LaurentPoly f = laurent(2, {{2, 1}, {1, 2}, {1, 0}, {0, 1}},
                                  {Rational(1), Rational(-1), Rational(-1), Rational(1)});
    const auto cones = wetc(f, identity_frame(2));
    REQUIRE(cones.size() == 2);
    const LinearSubspaceQ sum = LinearSubspaceQ::from_span(2, {{1, -1}});
    const LinearSubspaceQ diag = LinearSubspaceQ::from_span(2, {{1, 1}});
    CHECK(((cones[0] == sum && cones[1] == diag) || (cones[0] == diag && cones[1] == sum)));
  }
  // a change of frame mixes the coordinates
  {
    const LaurentPoly f = laurent(2, {{1, 0}, {0, 0}}, {Rational(1), Rational(-1)});
    WeightFrame fr;
    fr.M = SparseMatrix::from_triplets(2, 2, {{0, 0, Scalar(1)}, {0, 1, Scalar(1)},
                                              {1, 1, Scalar(1)}});
    fr.weights = {1, 1};
    const auto mixed = wetc(f, fr);
    REQUIRE(mixed.size() == 1);
    CHECK(mixed[0] == LinearSubspaceQ::from_span(2, {{0, 1}}));
    fr.weights = {1, 2};
    const auto skew = wetc(f, fr);
    REQUIRE(skew.size() == 1);
    CHECK(skew[0].dim() == 0);
  }
  // the identity must lie on the hypersurface
  CHECK_THROWS_AS(wetc(laurent(1, {{1}}, {Rational(1)}), identity_frame(1)),
                  const PreconditionError&);
  // negative exponents are welcome; t1 t2^-1 = 1 needs z1 = z2
  {
    const auto cones = wetc(laurent(2, {{1, -1}, {0, 0}}, {Rational(1), Rational(-1)}),
                            identity_frame(2));
    REQUIRE(cones.size() == 1);
    CHECK(cones[0] == LinearSubspaceQ::from_span(2, {{1, 1}}));
  }
}

TEST_CASE("degeneration along degree one directions") {
  const Cdga t2 = fixture_cdga("torus2");
  const FnReport ra = fn_degeneration(t2, {Rational(1), Rational(0)}, 2);
  CHECK(ra.degenerate);
  CHECK(ra.e2 == std::vector<int>{0, 0, 0});
  CHECK(ra.generic == std::vector<int>{0, 0, 0});

  const Cdga p = fixture_cdga("pencil3");
  const FnReport rr = fn_degeneration(p, {Rational(1), Rational(-1), Rational(0)}, 2);
  CHECK(rr.degenerate);
  CHECK(rr.e2 == std::vector<int>{0, 1, 1});
  CHECK(rr.e2 == rr.generic);

  const FnReport rz = fn_degeneration(p, {Rational(0), Rational(0), Rational(0)}, 2);
  CHECK(rz.degenerate);
  CHECK(rz.e2 == std::vector<int>{1, 3, 2});

  CHECK_THROWS_AS(fn_degeneration(fixture_cdga("solv2"), {Rational(0), Rational(1)}, 1),
                  const PreconditionError&);
  CHECK_THROWS_AS(fn_degeneration(t2, {Rational(1)}, 1), const PreconditionError&);
}
