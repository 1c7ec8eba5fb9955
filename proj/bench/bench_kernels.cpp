#include <benchmark/benchmark.h>

#include "hypdet/hermite.hpp"
#include "hypdet/kernels.hpp"
#include "hypdet/witness.hpp"

using namespace hypdet;

namespace {

BiPoly sample(int d) {
  BiPoly f = BiPoly::constant(1);
  for (int i = 0; i < d; ++i) f = f * (BiPoly::var_t() - BiPoly::in_x(UniPoly{i, i % 2 ? 1 : -1, i % 3}));
  return f;
}

const BiPoly kCubic = BiPoly::var_t() * BiPoly::var_t() * BiPoly::var_t() -
                      BiPoly::var_x() * BiPoly::var_x() * BiPoly::var_t() - BiPoly::constant(2) * BiPoly::var_t() +
                      BiPoly::var_x();

void BM_MinorsSerial(benchmark::State& s) {
  PolyMatrix h = hermite_matrix(sample(static_cast<int>(s.range(0))));
  for (auto _ : s) benchmark::DoNotOptimize(principal_minors_serial(h));
}

void BM_MinorsParallel(benchmark::State& s) {
  PolyMatrix h = hermite_matrix(sample(static_cast<int>(s.range(0))));
  for (auto _ : s) benchmark::DoNotOptimize(principal_minors(h));
}

void BM_WitnessSerial(benchmark::State& s) {
  WitnessSearchOptions opt;
  opt.seed = static_cast<std::uint64_t>(s.range(0));
  for (auto _ : s) benchmark::DoNotOptimize(find_witness_serial(kCubic, 1, opt));
}

void BM_WitnessParallel(benchmark::State& s) {
  WitnessSearchOptions opt;
  opt.seed = static_cast<std::uint64_t>(s.range(0));
  for (auto _ : s) benchmark::DoNotOptimize(find_witness(kCubic, 1, opt));
}

}  // namespace

BENCHMARK(BM_MinorsSerial)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinorsParallel)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WitnessSerial)->Arg(0)->Arg(17)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WitnessParallel)->Arg(0)->Arg(17)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
