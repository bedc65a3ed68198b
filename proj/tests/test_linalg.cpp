#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <jumploci/errors.hpp>
#include <jumploci/sparse_matrix.hpp>

using namespace jumploci;

namespace {

SparseMatrix dense(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Scalar>> d;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (long v : r) row.emplace_back(Rational(v));
    d.push_back(std::move(row));
  }
  return SparseMatrix::from_dense(d);
}

SparseMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int fill_percent) {
  std::vector<std::tuple<int, int, Scalar>> trip;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (static_cast<int>(rng() % 100) < fill_percent) {
        const long num = static_cast<long>(rng() % 19) - 9;
        const long den = 1 + static_cast<long>(rng() % 4);
        if (num != 0) trip.emplace_back(i, j, Scalar(rational(num, den)));
      }
  return SparseMatrix::from_triplets(rows, cols, std::move(trip));
}

}  // namespace

TEST_CASE("construction rules") {
  auto m = SparseMatrix::from_triplets(2, 2, {{0, 0, Scalar(1)}, {0, 0, Scalar(2)}});
  CHECK(m.at(0, 0) == Scalar(3));  // duplicates accumulate
  CHECK(m.nnz() == 1);
  auto z = SparseMatrix::from_triplets(2, 2, {{0, 1, Scalar(1)}, {0, 1, Scalar(-1)}});
  CHECK(z.nnz() == 0);  // cancellation drops the entry
  CHECK_THROWS_AS(SparseMatrix::from_triplets(1, 1, {{1, 0, Scalar(1)}}), PreconditionError);
}

TEST_CASE("rank, rref and kernel on pinned matrices") {
  const auto m = dense({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank_exact(m) == 2);
  const auto r = rref(m);
  CHECK(r.at(0, 0) == Scalar(1));
  CHECK(rank_exact(r) == 2);

  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  // kernel of {x+2y+3z, x+z} is spanned by (1, 1, -1); rref rows scale the top
  const auto& v = k[0];
  CHECK(v[0] * Rational(1) + v[1] * Rational(2) + v[2] * Rational(3) == Scalar(0));
  CHECK(v[0] * Rational(1) + v[2] * Rational(1) == Scalar(0));

  CHECK(rank_exact(dense({{0, 0}, {0, 0}})) == 0);
  CHECK(rank_exact(SparseMatrix::identity(5)) == 5);
}

TEST_CASE("rank over the gaussian rationals") {
  const Scalar i(GaussianRational(Rational(0), Rational(1)));
  // rows (1, i) and (i, -1) are proportional
  auto m = SparseMatrix::from_triplets(
      2, 2, {{0, 0, Scalar(1)}, {0, 1, i}, {1, 0, i}, {1, 1, Scalar(-1)}});
  CHECK(rank_exact(m) == 1);
  auto n = SparseMatrix::from_triplets(2, 2, {{0, 0, Scalar(1)}, {0, 1, i}, {1, 1, Scalar(1)}});
  CHECK(rank_exact(n) == 2);
}

TEST_CASE("generic rank over Q(t)") {
  const Scalar t(RationalFunction::t());
  auto m = SparseMatrix::from_triplets(
      2, 2, {{0, 0, Scalar(1)}, {0, 1, t}, {1, 0, t}, {1, 1, t * t}});
  CHECK(rank_generic(m) == 1);
  auto n = SparseMatrix::from_triplets(2, 2, {{0, 0, Scalar(1)}, {0, 1, t}, {1, 1, Scalar(1)}});
  CHECK(rank_generic(n) == 2);

  // the generic rank drops only at the zeros of a minor
  auto p = SparseMatrix::from_triplets(
      2, 2, {{0, 0, Scalar(1)}, {0, 1, t}, {1, 0, t}, {1, 1, Scalar(1)}});
  CHECK(rank_generic(p) == 2);
  CHECK(rank_exact(specialize_t(p, Rational(1))) == 1);
  CHECK(rank_exact(specialize_t(p, Rational(-1))) == 1);
  CHECK(rank_exact(specialize_t(p, Rational(2))) == 2);

  const Scalar i(GaussianRational(Rational(0), Rational(1)));
  auto g = SparseMatrix::from_triplets(1, 1, {{0, 0, i}});
  CHECK_THROWS_AS(rank_generic(g), VariantMismatchError);
}

TEST_CASE("inverse and solve") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    SparseMatrix m = random_matrix(rng, 4, 4, 70);
    auto inv = inverse(m);
    if (!inv) {
      CHECK(rank_exact(m) < 4);
      continue;
    }
    CHECK(*inv * m == SparseMatrix::identity(4));
    CHECK(m * *inv == SparseMatrix::identity(4));
  }
  CHECK_FALSE(inverse(dense({{1, 2}, {2, 4}})).has_value());

  const auto m = dense({{2, 1}, {1, 1}});
  const auto x = solve_linear(m, {Scalar(3), Scalar(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar(1));
  CHECK((*x)[1] == Scalar(1));
  CHECK_FALSE(solve_linear(dense({{1, 1}, {1, 1}}), {Scalar(0), Scalar(1)}).has_value());
}

TEST_CASE("rank-nullity and transpose symmetry on random matrices") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6);
    const int cols = 1 + static_cast<int>(rng() % 6);
    const SparseMatrix m = random_matrix(rng, rows, cols, 20 + (trial % 3) * 35);
    const int r = rank_exact(m);
    CHECK(r == rank_exact(m.transpose()));
    CHECK(r + static_cast<int>(kernel_basis(m).size()) == cols);
    for (const auto& v : kernel_basis(m)) {
      const auto image = matvec(m, v);
      for (const auto& c : image) CHECK(c.is_zero());
    }
  }
}

TEST_CASE("stacking") {
  const auto a = dense({{1, 2}});
  const auto b = dense({{3, 4}});
  const auto v = vstack(a, b);
  CHECK(v.rows() == 2);
  CHECK(v.at(1, 1) == Scalar(4));
  const auto h = hstack(a, b);
  CHECK(h.cols() == 4);
  CHECK(h.at(0, 2) == Scalar(3));
  CHECK_THROWS_AS(vstack(a, dense({{1, 2, 3}})), PreconditionError);
}

TEST_CASE("matrix arithmetic") {
  const auto a = dense({{1, 2}, {3, 4}});
  const auto b = dense({{0, 1}, {1, 0}});
  CHECK(a * b == dense({{2, 1}, {4, 3}}));
  CHECK(a + b - b == a);
  const auto v = matvec(a, {Scalar(1), Scalar(1)});
  CHECK(v[0] == Scalar(3));
  CHECK(v[1] == Scalar(7));
}
