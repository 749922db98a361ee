#include <benchmark/benchmark.h>

#include <random>

#include "decoq/channels.hpp"
#include "decoq/entanglement.hpp"
#include "decoq/loopfns.hpp"
#include "decoq/radiation.hpp"
#include "decoq/states.hpp"

using namespace decoq;

namespace {

CMat4 random_density(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  CMat4 g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = Complex(n(rng), n(rng));
  CMat4 rho = g * g.adjoint();
  return rho / rho.trace().real();
}

KinematicPoint kp() { return KinematicPoint::from_beta(172.5, 0.9); }

UnresolvedRegion region(const KinematicPoint& k) {
  return UnresolvedRegion(0.05 * k.m_phi, 0.1, 0.9, 0.5, k);
}

void BM_Concurrence(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const DensityMatrix rho(random_density(rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(concurrence(rho).value);
  }
}
BENCHMARK(BM_Concurrence);

void BM_Negativity(benchmark::State& state) {
  std::mt19937_64 rng(12);
  const DensityMatrix rho(random_density(rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(negativity(rho));
  }
}
BENCHMARK(BM_Negativity);

void BM_B0Timelike(benchmark::State& state) {
  const double m2 = 172.5 * 172.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(b0(6.25 * m2, m2, m2, 172.5));
  }
}
BENCHMARK(BM_B0Timelike);

void BM_C0Threshold(benchmark::State& state) {
  const KinematicPoint k = kp();
  const double mf2 = 172.5 * 172.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(c0_ir(mf2, k.s(), k.m_phi));
  }
}
BENCHMARK(BM_C0Threshold);

void BM_MapCoefficients(benchmark::State& state) {
  const KinematicPoint k = kp();
  const UnresolvedRegion r = region(k);
  const Coupling g(CouplingKind::V, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        map_coefficients(g, k, r, k.m_phi, LegMode::Both));
  }
}
BENCHMARK(BM_MapCoefficients);

void BM_FullMap(benchmark::State& state) {
  const KinematicPoint k = kp();
  const UnresolvedRegion r = region(k);
  const Coupling g(CouplingKind::A, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_map(g, k, r, k.m_phi, LegMode::Both));
  }
}
BENCHMARK(BM_FullMap);

void BM_Choi(benchmark::State& state) {
  const KinematicPoint k = kp();
  const FullMapResult fm =
      full_map(Coupling(CouplingKind::A, 0.1), k, region(k), k.m_phi,
               LegMode::Both);
  for (auto _ : state) {
    benchmark::DoNotOptimize(choi(fm.channel));
  }
}
BENCHMARK(BM_Choi);

void BM_SweepRow(benchmark::State& state) {
  // one full CSV row: map + concurrence for a single (beta, coupling) pair
  const KinematicPoint k = kp();
  const UnresolvedRegion r = region(k);
  const Coupling g(CouplingKind::V, 0.1);
  for (auto _ : state) {
    const FullMapResult fm = full_map(g, k, r, k.m_phi, LegMode::Both);
    benchmark::DoNotOptimize(concurrence(fm.rho_out).value);
  }
}
BENCHMARK(BM_SweepRow);

}  // namespace

BENCHMARK_MAIN();
