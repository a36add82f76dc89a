#include "piesp/esp.hpp"
#include "piesp/polyproduct.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>

namespace {

using piesp::BigFloat;

// The linear-time recurrence at a fixed order: O(M * n) and the workhorse of
// the whole library. Should show a clean oN fit.
void BM_esp_dp_f64(benchmark::State& state) {
  const std::int64_t count = state.range(0);
  for (auto _ : state) {
    auto esp = piesp::esp_dp<double>(count, 5);
    benchmark::DoNotOptimize(esp.e.data());
  }
  state.SetComplexityN(count);
}
BENCHMARK(BM_esp_dp_f64)->RangeMultiplier(10)->Range(1'000, 1'000'000)
    ->Complexity(benchmark::oN);

// The literal nested loops the recurrence replaces: C(M, n) tuple visits,
// here ~M^3/6 at order 3. The gap against BM_esp_dp_f64 is the point.
void BM_nested_naive_f64(benchmark::State& state) {
  const std::int64_t count = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(piesp::nested_sum_naive<double>(count, 3));
  }
  state.SetComplexityN(count);
}
BENCHMARK(BM_nested_naive_f64)->RangeMultiplier(2)->Range(16, 128)
    ->Complexity(benchmark::oNCubed);

// Newton's identities route: same O(M * n) shape, different constant.
void BM_esp_newton_f64(benchmark::State& state) {
  const std::int64_t count = state.range(0);
  for (auto _ : state) {
    auto esp = piesp::esp_newton<double>(count, 5);
    benchmark::DoNotOptimize(esp.e.data());
  }
  state.SetComplexityN(count);
}
BENCHMARK(BM_esp_newton_f64)->RangeMultiplier(10)->Range(1'000, 100'000)
    ->Complexity(benchmark::oN);

// High-precision decimal mode: what the 100-digit backend costs per term.
void BM_esp_dp_decimal(benchmark::State& state) {
  const std::int64_t count = state.range(0);
  for (auto _ : state) {
    auto esp = piesp::esp_dp<BigFloat>(count, 5);
    benchmark::DoNotOptimize(esp.e.data());
  }
  state.SetComplexityN(count);
}
BENCHMARK(BM_esp_dp_decimal)->RangeMultiplier(4)->Range(256, 16'384)
    ->Complexity(benchmark::oN);

// Split/merge evaluation, single-threaded vs four workers.
void BM_esp_dp_blocked_f64(benchmark::State& state) {
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto esp = piesp::esp_dp_blocked<double>(1'000'000, 5, threads);
    benchmark::DoNotOptimize(esp.e.data());
  }
}
BENCHMARK(BM_esp_dp_blocked_f64)->Arg(1)->Arg(4);

// Factored vs expanded evaluation of the same function at x = 0.3.
void BM_eval_product_f64(benchmark::State& state) {
  const std::int64_t count = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(piesp::eval_product<double>(count, 0.3));
  }
  state.SetComplexityN(count);
}
BENCHMARK(BM_eval_product_f64)->RangeMultiplier(10)->Range(100, 10'000)
    ->Complexity(benchmark::oN);

void BM_eval_poly_f64(benchmark::State& state) {
  const std::int64_t count = state.range(0);
  const auto poly = piesp::expand_product<double>(count, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(piesp::eval_poly(poly, 0.3));
  }
}
BENCHMARK(BM_eval_poly_f64)->RangeMultiplier(10)->Range(100, 10'000);

}  // namespace

BENCHMARK_MAIN();
