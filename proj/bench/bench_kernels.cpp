#include <benchmark/benchmark.h>

#include "fofana/integrals.hpp"
#include "fofana/maximal.hpp"
#include "fofana/parallel.hpp"
#include "fofana/sampling.hpp"

namespace {

using namespace fofana;

GridFunction make_input(int dim, std::int64_t n) {
  const double h = 4.0 / static_cast<double>(n);
  const Lattice lat = Lattice::make(dim, h, 2.0);
  return sample(StepRandomSpec{7, 4, {}}, lat);
}

MaximalConfig config_for(const GridFunction& f, MaximalConfig::Method method) {
  return MaximalConfig::make(f.lattice(), RadiusGrid::default_for(f.lattice()), method);
}

void bm_maximal_naive_parallel(benchmark::State& state) {
  const GridFunction f = make_input(static_cast<int>(state.range(0)), state.range(1));
  const MaximalConfig cfg = config_for(f, MaximalConfig::Method::kNaive);
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximal_function(f, cfg));
  }
}

void bm_maximal_naive_serial(benchmark::State& state) {
  const GridFunction f = make_input(static_cast<int>(state.range(0)), state.range(1));
  const MaximalConfig cfg = config_for(f, MaximalConfig::Method::kNaive);
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximal_function_serial(f, cfg));
  }
}

void bm_maximal_prefix_cube(benchmark::State& state) {
  const GridFunction f = make_input(static_cast<int>(state.range(0)), state.range(1));
  const MaximalConfig cfg = config_for(f, MaximalConfig::Method::kPrefixCube);
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximal_function(f, cfg));
  }
}

void bm_ball_field_prefix(benchmark::State& state) {
  const GridFunction f = make_input(static_cast<int>(state.range(0)), state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ball_field(f, Exponent::of(2.0), 0.5));
  }
}

void bm_ball_field_direct(benchmark::State& state) {
  const GridFunction f = make_input(static_cast<int>(state.range(0)), state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ball_field_direct(f, Exponent::of(2.0), 0.5));
  }
}

BENCHMARK(bm_maximal_naive_parallel)->Args({1, 2048})->Args({2, 64});
BENCHMARK(bm_maximal_naive_serial)->Args({1, 2048})->Args({2, 64});
BENCHMARK(bm_maximal_prefix_cube)->Args({1, 2048})->Args({2, 64});
BENCHMARK(bm_ball_field_prefix)->Args({1, 4096})->Args({2, 128});
BENCHMARK(bm_ball_field_direct)->Args({1, 4096})->Args({2, 128});

}  // namespace

BENCHMARK_MAIN();
