#include <benchmark/benchmark.h>

#include <superspace/superspace.hpp>

using namespace superspace;

static void BM_GrassmannProduct(benchmark::State& state) {
  GrassmannElement<RationalComplex> a;
  GrassmannElement<RationalComplex> b;
  for (unsigned m = 0; m < kBladeCount; ++m) {
    a.c[m] = RationalComplex(Rational(int(m) + 1, 3), Rational(2 * int(m) - 7, 5));
    b.c[m] = RationalComplex(Rational(3 - int(m), 7), Rational(int(m) + 2, 11));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_GrassmannProduct);

static void BM_CovariantDerivative(benchmark::State& state) {
  ExactRng rng(42);
  const Superfunction<Complex> f = random_lattice_superfunction(rng, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(D(1, f));
  }
}
BENCHMARK(BM_CovariantDerivative);

static void BM_SuperFourier(benchmark::State& state) {
  ExactRng rng(42);
  const Superfunction<Complex> f = random_lattice_superfunction(rng, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(super_fourier(f));
  }
}
BENCHMARK(BM_SuperFourier);

static void BM_SymbolAssembly(benchmark::State& state) {
  const Covector<double> p{1.0, 0.25, -0.5, 0.75};
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeta_d2<Complex>(p));
  }
}
BENCHMARK(BM_SymbolAssembly);

static void BM_ExactRankUMap(benchmark::State& state) {
  const HalfInt five_halves = HalfInt::from_twice(5);
  const auto u = u_map<RationalComplex>(five_halves, five_halves);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_rank(u));
  }
}
BENCHMARK(BM_ExactRankUMap);

static void BM_GridTransform(benchmark::State& state) {
  ExactRng rng(42);
  const GridSuperfunction g = sample_on_grid(random_lattice_superfunction(rng), GridSpec{});
  for (auto _ : state) {
    benchmark::DoNotOptimize(grid_super_fourier(g));
  }
}
BENCHMARK(BM_GridTransform);

BENCHMARK_MAIN();
