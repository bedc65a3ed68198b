#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include <jumploci/aomoto.hpp>
#include <jumploci/group_side.hpp>
#include <jumploci/models.hpp>
#include <jumploci/resonance.hpp>

using namespace jumploci;

namespace {

Rational small_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 7) - 3;
  const long den = 1 + static_cast<long>(rng() % 3);
  return rational(num, den);
}

SparseMatrix random_square(int n, std::mt19937_64& rng) {
  std::vector<std::tuple<int, int, Scalar>> trip;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational c = small_rational(rng);
      if (c != 0) trip.emplace_back(i, j, Scalar(c));
    }
  return SparseMatrix::from_triplets(n, n, std::move(trip));
}

void bm_rank_exact(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const SparseMatrix m = random_square(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank_exact(m));
}

void bm_aomoto_matrices_heis3(benchmark::State& state) {
  const Cdga p = fixture_cdga("pencil3");
  const LieRep h3 = heis3_standard_rep();
  std::vector<std::tuple<int, int, Scalar>> trip;
  for (int m = 0; m < 3; ++m) trip.emplace_back(m, 2, Scalar(rational(m + 1, 2)));
  const FlatConnection om{SparseMatrix::from_triplets(3, 3, std::move(trip))};
  for (auto _ : state) benchmark::DoNotOptimize(aomoto_matrices(p, h3, om, 2));
}

void bm_universal_specialize(benchmark::State& state) {
  const Cdga p = fixture_cdga("pencil3");
  const LieRep r1 = rank_one_rep();
  const UniversalAomoto u = universal_aomoto_matrices(p, r1, 2);
  const std::vector<Rational> z = {Rational(1), Rational(-1), Rational(0)};
  for (auto _ : state) benchmark::DoNotOptimize(specialize(u, z));
}

void bm_os_braid(benchmark::State& state) {
  const Arrangement arr = braid_a3_arrangement();
  for (auto _ : state) benchmark::DoNotOptimize(os_algebra(arr));
}

void bm_resonance_membership(benchmark::State& state) {
  const Cdga p = fixture_cdga("pencil3");
  const LieRep r1 = rank_one_rep();
  const FlatConnection om{
      SparseMatrix::from_triplets(3, 1, {{0, 0, Scalar(1)}, {1, 0, Scalar(-1)}})};
  for (auto _ : state) benchmark::DoNotOptimize(resonance_membership(p, r1, om, 1, 1));
}

void bm_wetc_product(benchmark::State& state) {
  const LaurentPoly f{2,
                      {{1, 1}, {2, 0}, {1, -1}, {0, 0}},
                      {Rational(1), Rational(-1), Rational(1), Rational(-1)}};
  const WeightFrame frame = identity_frame(2, {1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(wetc(f, frame));
}

void bm_fox_betti(benchmark::State& state) {
  const Presentation p = fixture_presentation("pencil3");
  GroupRep rep;
  rep.dimV = 1;
  rep.images = {SparseMatrix::from_triplets(1, 1, {{0, 0, Scalar(Rational(2))}}),
                SparseMatrix::from_triplets(1, 1, {{0, 0, Scalar(Rational(3))}}),
                SparseMatrix::from_triplets(1, 1, {{0, 0, Scalar(rational(1, 6))}})};
  for (auto _ : state) benchmark::DoNotOptimize(twisted_betti_low(p, rep));
}

}  // namespace

BENCHMARK(bm_rank_exact)->Arg(16)->Arg(32);
BENCHMARK(bm_aomoto_matrices_heis3);
BENCHMARK(bm_universal_specialize);
BENCHMARK(bm_os_braid);
BENCHMARK(bm_resonance_membership);
BENCHMARK(bm_wetc_product);
BENCHMARK(bm_fox_betti);

BENCHMARK_MAIN();
