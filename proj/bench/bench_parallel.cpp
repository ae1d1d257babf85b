// OpenMP kernels against their serial references: minor enumeration and
// the verification grid.

#include <random>

#include <benchmark/benchmark.h>

#include "fitt/verify.hpp"

namespace {

using namespace fitt;

PolyMatrix random_matrix(std::size_t size) {
  RingPtr ring = make_ring(Field::prime(32003), {"a", "b", "c", "d"});
  std::mt19937_64 rng(7);
  PolyMatrix m(ring, size, size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      std::vector<Term> terms;
      for (int t = 0; t < 3; ++t) {
        std::vector<std::uint32_t> exps(4);
        for (auto& e : exps) e = static_cast<std::uint32_t>(rng() % 2);
        terms.push_back(Term{Monomial(exps), ring->field().from_int(static_cast<long long>(rng() % 32003))});
      }
      m.set(r, c, Polynomial::from_terms(ring, std::move(terms)));
    }
  }
  return m;
}

std::vector<ReesParams> grid() {
  std::vector<ReesParams> out;
  for (std::uint32_t p : {2u, 3u}) {
    out.push_back({p, 3, 1, 2, {p, p, 1}});
    out.push_back({p, 3, 1, 2, {p, p * p, 1}});
    out.push_back({p, 4, 1, 2, {p, p, 1, 1}});
    out.push_back({p, 4, 1, 3, {p, p, p, 1}});
    out.push_back({p, 4, 2, 3, {p, p, 1}});
  }
  return out;
}

void BM_MinorsSerial(benchmark::State& state) {
  PolyMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minors_serial(m, static_cast<std::size_t>(state.range(1))));
}

void BM_MinorsParallel(benchmark::State& state) {
  PolyMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minors(m, static_cast<std::size_t>(state.range(1))));
}

void BM_GridSerial(benchmark::State& state) {
  auto tuples = grid();
  for (auto _ : state) benchmark::DoNotOptimize(run_grid_serial(tuples, FittingIndexPolicy::corrected()));
}

void BM_GridParallel(benchmark::State& state) {
  auto tuples = grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_grid(tuples, FittingIndexPolicy::corrected(), static_cast<int>(state.range(0))));
  }
}

}  // namespace

BENCHMARK(BM_MinorsSerial)->Args({6, 3})->Args({7, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinorsParallel)->Args({6, 3})->Args({7, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
