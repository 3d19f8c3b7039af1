#include <benchmark/benchmark.h>

#include "projrep/cohomology.hpp"
#include "projrep/models.hpp"
#include "projrep/pathflow.hpp"
#include "projrep/unirep.hpp"

using namespace projrep;

static void BM_H2Loop(benchmark::State& state) {
  const LoopModel l = make_loop(LoopType::SU2, 1, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(h2(l.algebra).dimension);
  state.counters["dim"] = static_cast<double>(l.algebra->dim());
}
BENCHMARK(BM_H2Loop)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_ExactSequenceLoop(benchmark::State& state) {
  const LoopModel l = make_loop(LoopType::SU2, 1, static_cast<double>(state.range(0)));
  const Mat d = loop_derivation(l);
  for (auto _ : state) benchmark::DoNotOptimize(exact_sequence_report(l.algebra, d, 1.0).rank_beta);
}
BENCHMARK(BM_ExactSequenceLoop)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_RK4Fock(benchmark::State& state) {
  const HeisenbergModel m = make_heisenberg(1, {1.0}, 40);
  const Representation rep = fock_representation(m);
  const Vec vac = fock_vacuum(m);
  const AlgebraCurve xi = [](double t) -> Vec { return (Vec(3) << 0.0, std::sin(6.28 * t), 0.5).finished(); };
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(integrate_ode(rep, xi, vac, steps).max_drift);
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_RK4Fock)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_KacMoodyCochain(benchmark::State& state) {
  const LoopModel l = make_loop(LoopType::SU2, 1, 3, 1.0 / (8.0 * kPi), 1.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(km_cochain(l).max_abs());
}
BENCHMARK(BM_KacMoodyCochain)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);

static void BM_GelfandFuksCochain(benchmark::State& state) {
  const WittModel w = make_witt(6, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gelfand_fuks_cochain(w).max_abs());
}
BENCHMARK(BM_GelfandFuksCochain)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);

static void BM_ExtractFock(benchmark::State& state) {
  const HeisenbergModel m = make_heisenberg(static_cast<int>(state.range(0)), {}, state.range(0) == 1 ? 40 : 16);
  const Representation rep = fock_representation(m);
  const Vec vac = fock_vacuum(m);
  for (auto _ : state) benchmark::DoNotOptimize(omega_from_rep(rep, vac).polarisation_residual);
}
BENCHMARK(BM_ExtractFock)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
