#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "generators.hpp"
#include "lockcert/chain.hpp"
#include "lockcert/lemma.hpp"
#include "lockcert/oracle.hpp"
#include "lockcert/radial.hpp"
#include "lockcert/sweep.hpp"

namespace {

using namespace lockcert;

void BM_VerifyInterface(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<LemmaInput> inputs;
  for (int i = 0; i < 256; ++i) inputs.push_back(testing::random_lemma_input(rng, static_cast<int>(state.range(0))));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_interface(inputs[k++ % inputs.size()]));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_VerifyInterface)->Arg(1)->Arg(64)->Arg(1024);

void BM_Certify(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<CornerChain> chains;
  for (int i = 0; i < 256; ++i) chains.push_back(testing::random_pattern_chain(rng));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify(chains[k++ % chains.size()]));
  }
}
BENCHMARK(BM_Certify);

void BM_ThetaScan(benchmark::State& state) {
  const std::vector<SamplePair> samples{{3.0, 2.0}, {3.2, 1.5}, {4.0, 1.0}};
  const double a = 1.7320508075688772;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_theta(a, 0.0, samples, 10.0, static_cast<int>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ThetaScan)->Arg(20001)->Arg(200001)->Unit(benchmark::kMillisecond);

void BM_SchwarzschildIntegration(benchmark::State& state) {
  const double length = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(schwarzschild_f(3, 0.48, 0.0, 1.0, length));
  }
}
BENCHMARK(BM_SchwarzschildIntegration)->Arg(1)->Arg(10)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_Sweep(benchmark::State& state) {
  const TwoJumpGrid grid = parse_grid("low1=0.5:3:10,up1=0.5:3:10,low2=0.5:3:10,up2=0.5:3:10");
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(grid, static_cast<unsigned>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.cell_count()));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
