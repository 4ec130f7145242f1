#include <benchmark/benchmark.h>

#include "bispec/bispectral.hpp"
#include "bispec/golden.hpp"

using namespace bispec;

namespace {

const BesselIndex& third() {
  static const BesselIndex b = BesselIndex::make({Rational(2, 3), Rational(1, 3)});
  return b;
}

void BM_OperatorProduct(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  DiffOp L = bessel_op(third());
  for (auto _ : state) benchmark::DoNotOptimize(power(L, d));
}
BENCHMARK(BM_OperatorProduct)->DenseRange(1, 4);

void BM_LeftDivision(benchmark::State& state) {
  auto ex = golden::example4(Rational(1, 3), 1, 1);
  DiffOp P = golden::example4_P(1, 1, ex.mu2);
  DiffOp H = evaluate(Poly(std::vector<Rational>{1, -2, 1}), bessel_op(third()));
  for (auto _ : state) benchmark::DoNotOptimize(left_divide(H, P));
}
BENCHMARK(BM_LeftDivision);

void BM_WaveSeries(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  DiffOp L = bessel_op(third());
  for (auto _ : state) benchmark::DoNotOptimize(bessel_wave(third(), K).apply(L));
  state.SetComplexityN(K);
}
BENCHMARK(BM_WaveSeries)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_BuildRankOne(benchmark::State& state) {
  auto spec = golden::rank1_spec();
  for (auto _ : state) benchmark::DoNotOptimize(build(spec));
}
BENCHMARK(BM_BuildRankOne);

void BM_BuildExample4(benchmark::State& state) {
  auto spec = golden::example4_spec(golden::example4(Rational(1, 3), 1, 1));
  for (auto _ : state) benchmark::DoNotOptimize(build(spec));
}
BENCHMARK(BM_BuildExample4)->Unit(benchmark::kMillisecond);

void BM_PairAndVerify(benchmark::State& state) {
  auto cert = build(golden::example4_spec(golden::example4(Rational(1, 3), 1, 1))).certificate;
  for (auto _ : state) {
    auto pair = make_pair(cert);
    benchmark::DoNotOptimize(verify_pair(pair, 12));
  }
}
BENCHMARK(BM_PairAndVerify)->Unit(benchmark::kMillisecond);

void BM_SpectralAlgebra(benchmark::State& state) {
  auto cert = build(golden::example4_spec(golden::example4(Rational(1, 3), 1, 1))).certificate;
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_algebra(cert.P, cert.beta, bound));
}
BENCHMARK(BM_SpectralAlgebra)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
