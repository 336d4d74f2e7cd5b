#include <benchmark/benchmark.h>

#include <vector>

#include "weyl/random.hpp"
#include "weyl/unipoly.hpp"
#include "weyl/weyl_core.hpp"

namespace {

using namespace weyl;

std::pair<WeylElement, WeylElement> operands(Index deg) {
  Rng rng(derive_seed(7, 0, static_cast<std::uint64_t>(deg)));
  return {random_element(rng, deg, static_cast<std::size_t>(deg * deg)),
          random_element(rng, deg, static_cast<std::size_t>(deg * deg))};
}

void BM_MulSerial(benchmark::State& state) {
  const auto [p, q] = operands(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(normal_mul_serial(p, q));
}

void BM_MulParallel(benchmark::State& state) {
  const auto [p, q] = operands(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(normal_mul_parallel(p, q));
}

std::vector<UniPoly> scan_inputs() {
  Rng rng(11);
  std::vector<UniPoly> fs;
  for (int n = 0; n < 2000; ++n) fs.push_back(random_unipoly(rng, 12, 3));
  return fs;
}

void BM_PowerScanSerial(benchmark::State& state) {
  const auto fs = scan_inputs();
  for (auto _ : state) benchmark::DoNotOptimize(power_support_scan_serial(fs, state.range(0)));
}

void BM_PowerScanParallel(benchmark::State& state) {
  const auto fs = scan_inputs();
  for (auto _ : state) benchmark::DoNotOptimize(power_support_scan(fs, state.range(0)));
}

}  // namespace

BENCHMARK(BM_MulSerial)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulParallel)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PowerScanSerial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PowerScanParallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
