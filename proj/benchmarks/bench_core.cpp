#include <benchmark/benchmark.h>

#include <cmath>

#include "covosc/covariant_boost.hpp"
#include "covosc/entanglement_thermo.hpp"
#include "covosc/phase_space.hpp"
#include "covosc/scan.hpp"
#include "covosc/verification.hpp"

namespace {

void BM_GaussHermiteRule(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(covosc::gauss_hermite(order));
  }
}
BENCHMARK(BM_GaussHermiteRule)->Arg(16)->Arg(64)->Arg(128)->Arg(320);

void BM_BoostedWf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const covosc::Rapidity r(1.2);
  double x = 0.0;
  for (auto _ : state) {
    x += 1e-4;
    benchmark::DoNotOptimize(covosc::boosted_wf(n, r, {0.4 + x, -0.8}));
  }
}
BENCHMARK(BM_BoostedWf)->Arg(0)->Arg(8)->Arg(32);

void BM_Normalization2D(benchmark::State& state) {
  const covosc::Rapidity r(1.0);
  auto density = [&](double u, double v) {
    const double w = covosc::boosted_wf(0, r, covosc::from_light_cone({u, v}));
    return w * w;
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(covosc::integrate_2d(
        density, covosc::default_rule(), {std::exp(1.0), std::exp(-1.0)}));
  }
}
BENCHMARK(BM_Normalization2D);

void BM_ReducedDensity(benchmark::State& state) {
  const covosc::Rapidity r(0.25 * state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(covosc::reduced_density(1, r, 0.7, -0.4));
  }
}
BENCHMARK(BM_ReducedDensity)->Arg(2)->Arg(4)->Arg(8)->Arg(12);

void BM_EntropyAnalytic(benchmark::State& state) {
  const covosc::Rapidity r(0.25 * state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(covosc::entropy_analytic(2, r));
  }
}
BENCHMARK(BM_EntropyAnalytic)->Arg(2)->Arg(8)->Arg(12);

void BM_UncertaintyProducts(benchmark::State& state) {
  const covosc::Rapidity r(1.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(covosc::uncertainty_products(r));
  }
}
BENCHMARK(BM_UncertaintyProducts);

void BM_ScanObservables(benchmark::State& state) {
  covosc::ScanConfig cfg;
  cfg.eta_min = 0.0;
  cfg.eta_max = 3.0;
  cfg.steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(covosc::scan_observables(cfg));
  }
}
BENCHMARK(BM_ScanObservables)->Arg(16)->Arg(61);

void BM_FourierOracle(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(covosc::fourier_max_error(1.0, false));
  }
}
BENCHMARK(BM_FourierOracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
