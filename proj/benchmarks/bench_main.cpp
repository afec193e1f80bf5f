#include <benchmark/benchmark.h>

#include "zeno/dynamics.hpp"
#include "zeno/experiments.hpp"
#include "zeno/model.hpp"

namespace {

zeno::CompositeModel chain_model(std::size_t sites) {
  return zeno::build_total_hamiltonian(zeno::ChainParams{sites, 0.0, 1.0}, zeno::ApparatusParams{100.0, 0.0, 2});
}

void BM_HermitianEig(benchmark::State& state) {
  const auto model = chain_model(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeno::hermitian_eig(model.total_hamiltonian()));
  }
}
BENCHMARK(BM_HermitianEig)->Arg(2)->Arg(5)->Arg(15);

void BM_PremeasurementChannel(benchmark::State& state) {
  const auto sites = static_cast<std::size_t>(state.range(0));
  const auto model = chain_model(sites);
  const auto rho = zeno::DensityMatrix::maximally_mixed(sites);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeno::premeasurement_channel(rho, model));
  }
}
BENCHMARK(BM_PremeasurementChannel)->Arg(2)->Arg(15);

void BM_HeatmapCell(benchmark::State& state) {
  const zeno::ChainParams chain{15, 0.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeno::site0_population_at(chain, 1.5, 0.5, 0.5, 5.0));
  }
}
BENCHMARK(BM_HeatmapCell);

void BM_EvolveSeries(benchmark::State& state) {
  const auto model = chain_model(15);
  zeno::MeasurementSchedule s;
  s.t_m = model.measurement_time();
  s.t_f = 0.9;
  const auto rho = zeno::DensityMatrix::basis(15, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeno::run_schedule(rho, s, model));
  }
}
BENCHMARK(BM_EvolveSeries);

}  // namespace

BENCHMARK_MAIN();
