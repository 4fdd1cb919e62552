#include <benchmark/benchmark.h>

#include <random>

#include "ncspec/closed_form.hpp"
#include "ncspec/verifier.hpp"

using namespace ncspec;

namespace {

IntMatrix random_matrix(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<int> d(-9, 9);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

void BM_FaddeevLeVerrier(benchmark::State& state) {
  IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_FaddeevLeVerrier)->Arg(10)->Arg(20)->Arg(40);

void BM_BareissInterpolation(benchmark::State& state) {
  IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly_interpolated(m));
}
BENCHMARK(BM_BareissInterpolation)->Arg(10)->Arg(20)->Arg(40);

void BM_QuasidihedralSignless(benchmark::State& state) {
  IntMatrix m = build_oracle(GroupSpec::quasidihedral(state.range(0))).matrix(MatrixKind::DistanceSignlessLaplacian);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_QuasidihedralSignless)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_BuildOracle(benchmark::State& state) {
  const GroupSpec spec = GroupSpec::metacyclic(10, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_oracle(spec));
}
BENCHMARK(BM_BuildOracle)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_VerifyInstance(benchmark::State& state) {
  const GroupSpec spec = GroupSpec::quaternion(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_instance(spec, MatrixKind::Distance));
}
BENCHMARK(BM_VerifyInstance)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
