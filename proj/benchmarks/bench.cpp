// Microbenchmarks for the hot paths: quadrature, Wigner evaluation, the
// pair correlator, mode-function integration, and discord.
#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "cvqt/dynamics.hpp"
#include "cvqt/fock.hpp"
#include "cvqt/infotheory.hpp"
#include "cvqt/numerics.hpp"
#include "cvqt/pseudospin.hpp"
#include "cvqt/weyl.hpp"

namespace {

void BM_gauss_legendre(benchmark::State& state) {
  const cvqt::Grid1D grid{-6.0, 6.0, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    const double v =
        cvqt::gauss_legendre(grid, [](double x) { return std::exp(-x * x); });
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_gauss_legendre)->Arg(64)->Arg(256);

void BM_wigner_numeric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  cvqt::FockVector fock;
  fock.amplitudes = Eigen::VectorXcd::Zero(n + 1);
  fock.amplitudes(n) = 1.0;
  fock.truncation = n;
  fock.modes = 1;
  for (auto _ : state) {
    const double w = cvqt::wigner_numeric(fock, 0.7, -0.4);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_wigner_numeric)->Arg(10)->Arg(30);

void BM_pair_correlator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cvqt::SpinTriple triple = cvqt::bw_triple(n);
  const cvqt::SqueezingParams p(1.5, 0.0);
  const cvqt::MeasurementSetting a{0.7, 0.2}, b{1.9, -0.4};
  for (auto _ : state) {
    const double e = cvqt::correlator_E(p, triple, a, b);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_pair_correlator)->Arg(61)->Arg(121);

void BM_evolve_bogoliubov(benchmark::State& state) {
  const cvqt::BackgroundModel bg(-2.0, -2000.0, -0.01);
  for (auto _ : state) {
    const cvqt::BogoliubovPair b = cvqt::evolve_bogoliubov(bg, 1.0, 1e-10).final();
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_evolve_bogoliubov);

void BM_discord(benchmark::State& state) {
  for (auto _ : state) {
    const double d = cvqt::discord_tmss(5.0);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_discord);

}  // namespace

BENCHMARK_MAIN();
