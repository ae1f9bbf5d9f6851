// Serial reference kernels against the OpenMP ones.
//
//   bench_kernels --benchmark_filter=Oracle

#include <benchmark/benchmark.h>

#include "neurobetti/oracle.hpp"
#include "neurobetti/piercing.hpp"

using namespace neurobetti;

namespace {

/// First seeded pierced code on n neurons whose polarized ideal uses at least min_vars variables.
SquarefreeIdeal pierced_ideal(int n, int min_vars) {
  for (std::uint64_t seed = 1;; ++seed) {
    const GeneratedCode g = random_pierced_code(n, n, seed);
    SquarefreeIdeal ideal = polarized_ideal(canonical_form(g.code), n);
    NeuronSet x = 0;
    NeuronSet y = 0;
    for (const auto& m : ideal.gens()) {
      x |= m.x;
      y |= m.y;
    }
    if (set_size(x) + set_size(y) >= min_vars || seed > 1000) return ideal;
  }
}

NeuralCode pierced_code(int n, std::uint64_t seed) { return random_pierced_code(n, n, seed).code; }

void BM_OracleSerial(benchmark::State& state) {
  const SquarefreeIdeal ideal = pierced_ideal(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  OracleOptions options;
  options.max_restrictions = std::uint64_t{1} << 24;
  for (auto _ : state) benchmark::DoNotOptimize(betti_table_oracle_serial(ideal, options));
}

void BM_OracleParallel(benchmark::State& state) {
  const SquarefreeIdeal ideal = pierced_ideal(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  OracleOptions options;
  options.threads = static_cast<int>(state.range(2));
  options.max_restrictions = std::uint64_t{1} << 24;
  for (auto _ : state) benchmark::DoNotOptimize(betti_table_oracle(ideal, options));
}

void BM_CanonicalFormSerial(benchmark::State& state) {
  const NeuralCode code = pierced_code(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form_serial(code));
}

void BM_CanonicalFormParallel(benchmark::State& state) {
  const NeuralCode code = pierced_code(static_cast<int>(state.range(0)), 3);
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(code, threads));
}

}  // namespace

BENCHMARK(BM_OracleSerial)->Args({6, 10})->Args({10, 18})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)
    ->ArgsProduct({{6}, {10}, {1, 2, 4}})
    ->ArgsProduct({{10}, {18}, {1, 2, 4}})
    ->ArgsProduct({{12}, {22}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_CanonicalFormSerial)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CanonicalFormParallel)
    ->ArgsProduct({{6, 9, 12}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
