#include <benchmark/benchmark.h>

#include "umbral/umbral.hpp"

using namespace umbral;

namespace {

Kind kind_arg(const benchmark::State& state) { return kAllKinds[static_cast<std::size_t>(state.range(0))]; }

void BM_BasicPolynomialExact(benchmark::State& state) {
  const ExactCorrespondence c{kind_arg(state), Rational(1, 3)};
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(basic_polynomial(c, n));
}
BENCHMARK(BM_BasicPolynomialExact)->ArgsProduct({{0, 1, 2}, {8, 32}});

void BM_BasicPolynomialValue(benchmark::State& state) {
  const Correspondence c{kind_arg(state), 0.2};
  const int n = static_cast<int>(state.range(1));
  Index m = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(basic_polynomial_value(c, n, 100 + (m++ & 63)));
  }
}
BENCHMARK(BM_BasicPolynomialValue)->ArgsProduct({{0, 1, 2}, {4, 64}});

void BM_LogValue(benchmark::State& state) {
  const Correspondence c{Kind::Symmetric, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(basic_polynomial_log_value(c, 1000, 5000));
}
BENCHMARK(BM_LogValue);

void BM_CommutatorResidual(benchmark::State& state) {
  const ExactCorrespondence c{kind_arg(state), Rational(1, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(commutator_residual(c, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_CommutatorResidual)->ArgsProduct({{0, 2}, {8, 32}})->Unit(benchmark::kMillisecond);

void BM_ExpSeries(benchmark::State& state) {
  const Correspondence c{kind_arg(state), 1.0};
  const double ks = static_cast<double>(state.range(1)) / 10;
  for (auto _ : state) benchmark::DoNotOptimize(umbral_exp_series(c, ks, -20, 1e-12));
}
BENCHMARK(BM_ExpSeries)->ArgsProduct({{0, 1, 2}, {2, 9}})->Unit(benchmark::kMicrosecond);

void BM_ExpClosedForm(benchmark::State& state) {
  const Correspondence c{kind_arg(state), 0.2};
  Index m = 0;
  for (auto _ : state) benchmark::DoNotOptimize(umbral_exp(c, 1.0, (m++ & 255) - 128));
}
BENCHMARK(BM_ExpClosedForm)->DenseRange(0, 2);

void BM_WellSpectrum(benchmark::State& state) {
  const Correspondence c{Kind::Symmetric, 1.0};
  const int points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(infinite_well_spectrum(c, points));
  state.SetComplexityN(points);
}
BENCHMARK(BM_WellSpectrum)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity(benchmark::oN);

void BM_Hamiltonian(benchmark::State& state) {
  const Correspondence c{kind_arg(state), 0.25};
  const PlaneWaveState wave{1.0, 0.0, 2.0, true, c};
  const auto psi = plane_wave_samples(wave, -512, 512);
  for (auto _ : state) benchmark::DoNotOptimize(apply_hamiltonian(c, 1.0, psi));
}
BENCHMARK(BM_Hamiltonian)->DenseRange(0, 2);

}  // namespace

BENCHMARK_MAIN();
