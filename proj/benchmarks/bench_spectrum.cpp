#include <benchmark/benchmark.h>

#include "ispec/nullity.hpp"
#include "ispec/oracle.hpp"
#include "ispec/spectrum.hpp"

namespace {

ispec::IGraphParams params_for(benchmark::State& state) {
  const auto n = state.range(0);
  return ispec::validate_and_canonicalize(n, n / 8 + 1, 2 * (n / 8 + 1));
}

void BM_ClosedFormSpectrum(benchmark::State& state) {
  const auto p = params_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(ispec::full_spectrum(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClosedFormSpectrum)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_JacobiOracle(benchmark::State& state) {
  const auto p = params_for(state);
  const auto m = ispec::oracle::DenseSymmetricMatrix::from_adjacency(ispec::build_adjacency(p));
  for (auto _ : state) benchmark::DoNotOptimize(ispec::oracle::eigenvalues_bruteforce(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_JacobiOracle)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond)->Complexity();

void BM_NullityCertificate(benchmark::State& state) {
  const auto p = params_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(ispec::nullity_certificate(p));
}
BENCHMARK(BM_NullityCertificate)->RangeMultiplier(4)->Range(16, 4096);

void BM_Eigenvector(benchmark::State& state) {
  const auto p = params_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(ispec::eigenvector(p, 1, ispec::Branch::minus));
}
BENCHMARK(BM_Eigenvector)->RangeMultiplier(4)->Range(16, 4096);

}  // namespace
BENCHMARK_MAIN();
