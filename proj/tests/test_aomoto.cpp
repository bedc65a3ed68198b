#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include <jumploci/aomoto.hpp>
#include <jumploci/models.hpp>

#include "test_support.hpp"

using namespace jumploci;
using testsupport::column_matrix;
using testsupport::rand_rational;

TEST_CASE("heis3 residual of e1 x + e2 y is e1e2 z") {
  const Cdga a = fixture_cdga("pencil3");
  const LieAlgebra e = preset_lie("heis3");
  const FlatConnection om{
      SparseMatrix::from_triplets(3, 3, {{0, 0, Scalar(1)}, {1, 1, Scalar(1)}})};
  const auto res = mc_residual(a, e, om);
  REQUIRE(res.size() == 3);
  CHECK(res[0].is_zero());
  CHECK(res[1].is_zero());
  const GradedElement e1 = a.basis_element(1, 0);
  const GradedElement e2 = a.basis_element(1, 1);
  CHECK((res[2] - a.multiply(e1, e2)).is_zero());
  CHECK(!is_flat(a, e, om));
}

TEST_CASE("flatness is the vanishing of the residual") {
  std::mt19937_64 rng(11);
  const LieAlgebra line = preset_lie("abelian1");
  for (const std::string fx : {"torus2", "pencil3", "solv2", "heis3"}) {
    const Cdga a = fixture_cdga(fx);
    for (int it = 0; it < 20; ++it) {
      std::vector<Rational> z;
      for (int m = 0; m < a.dim(1); ++m) z.push_back(rand_rational(rng));
      const FlatConnection om{column_matrix(z)};
      bool vanish = true;
      for (const auto& g : mc_residual(a, line, om)) vanish = vanish && g.is_zero();
      CHECK(is_flat(a, line, om) == vanish);
      // flat iff every mc equation evaluates to zero
      bool eqs = true;
      for (const auto& f : mc_equations(a, line)) eqs = eqs && f.eval(z) == 0;
      CHECK(eqs == vanish);
    }
  }
}

TEST_CASE("twisted differentials compose to zero exactly at flat points") {
  std::mt19937_64 rng(12);
  const LieRep r = rank_one_rep();
  for (const std::string fx : {"torus2", "pencil3", "heis3"}) {
    const Cdga a = fixture_cdga(fx);
    for (int it = 0; it < 5; ++it) {
      const FlatConnection om = testsupport::random_rank_one_flat(fx, rng);
      const AomotoComplex c = aomoto_matrices(a, r, om, a.top_degree());
      for (size_t i = 0; i + 1 < c.matrices.size(); ++i)
        CHECK((c.matrices[i + 1] * c.matrices[i]).nnz() == 0);
      for (size_t i = 0; i < c.matrices.size(); ++i) {
        CHECK(c.matrices[i].rows() == a.dim(static_cast<int>(i) + 1));
        CHECK(c.matrices[i].cols() == a.dim(static_cast<int>(i)));
      }
    }
  }
  const Cdga s = fixture_cdga("solv2");
  const FlatConnection bad{column_matrix({Rational(1), Rational(0)})};
  CHECK(!is_flat(s, r.lie, bad));
  const AomotoComplex c = aomoto_matrices(s, r, bad, 1);
  CHECK((c.matrices[1] * c.matrices[0]).nnz() > 0);
}

TEST_CASE("betti numbers at pinned connections") {
  const LieRep r = rank_one_rep();
  const Cdga p = fixture_cdga("pencil3");
  CHECK(aomoto_betti(p, r, FlatConnection{column_matrix({Rational(1), Rational(-1), Rational(0)})},
                     2) == std::vector<int>{0, 1, 1});
  CHECK(aomoto_betti(p, r, FlatConnection{SparseMatrix(3, 1)}, 2) == std::vector<int>{1, 3, 2});

  const Cdga t = fixture_cdga("torus2");
  CHECK(aomoto_betti(t, r, FlatConnection{column_matrix({Rational(1), Rational(2)})}, 2) ==
        std::vector<int>{0, 0, 0});

  const Cdga s = fixture_cdga("solv2");
  const std::vector<int> expect_b1 = {1, 1, 0};
  for (int k = 0; k < 3; ++k) {
    const FlatConnection om{column_matrix({Rational(0), Rational(k)})};
    const auto b = aomoto_betti(s, r, om, 1);
    CHECK(b[1] == expect_b1[k]);
  }
  CHECK_THROWS_AS(aomoto_betti(s, r, FlatConnection{column_matrix({Rational(1), Rational(0)})}, 1),
                  const PreconditionError&);

  // zero connection with heis3 coefficients: three copies of the untwisted complex
  CHECK(aomoto_betti(p, heis3_standard_rep(), FlatConnection{SparseMatrix(3, 3)}, 2) ==
        std::vector<int>{3, 9, 6});
}

TEST_CASE("universal matrices specialize to the direct construction") {
  std::mt19937_64 rng(13);
  for (const std::string fx : {"torus2", "pencil3", "solv2", "heis3"}) {
    const Cdga a = fixture_cdga(fx);
    const LieRep r = rank_one_rep();
    const UniversalAomoto u = universal_aomoto_matrices(a, r, a.top_degree());
    CHECK(u.nvars == a.dim(1));
    for (int it = 0; it < 5; ++it) {
      std::vector<Rational> z;
      for (int m = 0; m < a.dim(1); ++m) z.push_back(rand_rational(rng));
      const AomotoComplex lhs = specialize(u, z);
      const AomotoComplex rhs = aomoto_matrices(a, r, FlatConnection{column_matrix(z)},
                                                a.top_degree());
      REQUIRE(lhs.matrices.size() == rhs.matrices.size());
      for (size_t i = 0; i < lhs.matrices.size(); ++i) CHECK(lhs.matrices[i] == rhs.matrices[i]);
    }
  }

  const Cdga a = fixture_cdga("pencil3");
  const LieRep h = heis3_standard_rep();
  const UniversalAomoto u = universal_aomoto_matrices(a, h, 2);
  REQUIRE(u.nvars == 9);
  CHECK(u.var_names[0] == "z_e1_x");
  CHECK(u.var_names[5] == "z_e2_z");
  for (int it = 0; it < 5; ++it) {
    std::vector<Rational> z(9);
    std::vector<std::tuple<int, int, Scalar>> trip;
    for (int m = 0; m < 3; ++m)
      for (int al = 0; al < 3; ++al) {
        z[m * 3 + al] = rand_rational(rng);
        if (z[m * 3 + al] != 0) trip.emplace_back(m, al, Scalar(z[m * 3 + al]));
      }
    const AomotoComplex lhs = specialize(u, z);
    const AomotoComplex rhs =
        aomoto_matrices(a, h, FlatConnection{SparseMatrix::from_triplets(3, 3, std::move(trip))}, 2);
    REQUIRE(lhs.matrices.size() == rhs.matrices.size());
    for (size_t i = 0; i < lhs.matrices.size(); ++i) CHECK(lhs.matrices[i] == rhs.matrices[i]);
  }
}

TEST_CASE("flat locus equations of the fixtures") {
  const LieAlgebra line = preset_lie("abelian1");

  const Cdga s = fixture_cdga("solv2");
  const auto seqs = mc_equations(s, line);
  REQUIRE(seqs.size() == 1);
  CHECK(seqs[0].str(connection_variable_names(s, line)) == "z_x*");

  const Cdga h = fixture_cdga("heis3");
  const auto heqs = mc_equations(h, line);
  REQUIRE(heqs.size() == 3);
  int nonzero = 0;
  for (const auto& f : heqs)
    if (!(f == MultiPoly(3))) {
      ++nonzero;
      CHECK(f.normalized() == MultiPoly::variable(3, 2));
    }
  CHECK(nonzero == 1);

  // d = 0 algebras with abelian coefficients are flat everywhere
  for (const auto& f : mc_equations(fixture_cdga("pencil3"), line)) CHECK(f == MultiPoly(3));
}

TEST_CASE("jump locus description of solv2 in degree one") {
  const LieRep r = rank_one_rep();
  const Cdga s = fixture_cdga("solv2");

  const JumpLocusDescription d = jump_locus_generators(s, r, 1, 1);
  CHECK(!d.empty);
  REQUIRE(d.var_names == std::vector<std::string>{"z_x*", "z_y*"});
  REQUIRE(d.mc.size() == 1);
  CHECK(d.mc[0].str(d.var_names) == "z_x*");
  REQUIRE(d.pieces.size() == 2);
  REQUIRE(d.pieces[0].generators.size() == 2);
  CHECK(d.pieces[0].generators[0].str(d.var_names) == "z_y*");
  CHECK(d.pieces[0].generators[1].str(d.var_names) == "z_x*");
  REQUIRE(d.pieces[1].generators.size() == 2);
  CHECK(d.pieces[1].generators[0].str(d.var_names) == "z_y*-1");
  CHECK(d.pieces[1].generators[1].str(d.var_names) == "z_x*");

  // the description cuts out exactly the two jump points on the flat line
  for (long k = -3; k <= 3; ++k) {
    const bool member = jump_locus_satisfied(d, {Rational(0), Rational(k)});
    CHECK(member == (k == 0 || k == 1));
  }
  CHECK(!jump_locus_satisfied(d, {Rational(1), Rational(0)}));  // not flat

  // depth <= 0 keeps only the flatness equations
  const JumpLocusDescription d0 = jump_locus_generators(s, r, 1, 0);
  CHECK(d0.pieces.empty());
  CHECK(jump_locus_satisfied(d0, {Rational(0), Rational(5)}));
  CHECK(!jump_locus_satisfied(d0, {Rational(2), Rational(5)}));

  // depth beyond the fiber dimension is unsatisfiable
  const JumpLocusDescription dbig = jump_locus_generators(s, r, 1, 3);
  CHECK(dbig.empty);
  CHECK(!jump_locus_satisfied(dbig, {Rational(0), Rational(0)}));
}

TEST_CASE("jump locus membership matches recomputed betti numbers") {
  const LieRep r = rank_one_rep();
  const Cdga p = fixture_cdga("pencil3");
  const JumpLocusDescription d = jump_locus_generators(p, r, 1, 1);
  for (long x = -1; x <= 1; ++x)
    for (long y = -1; y <= 1; ++y)
      for (long z = -1; z <= 1; ++z) {
        const std::vector<Rational> pt = {Rational(x), Rational(y), Rational(z)};
        const bool expect = aomoto_betti(p, r, FlatConnection{column_matrix(pt)}, 1)[1] >= 1;
        CHECK(jump_locus_satisfied(d, pt) == expect);
      }
}
