#include <benchmark/benchmark.h>

#include "qcorr/channels.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/experiments.hpp"
#include "qcorr/states.hpp"

using namespace qcorr;

static void BM_HermitianEigensystem(benchmark::State& state) {
    const CMat4 m = werner(0.37).mat();
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigensystem(m));
}
BENCHMARK(BM_HermitianEigensystem);

static void BM_ApplyTwoQubit(benchmark::State& state) {
    const DensityMatrix rho = werner(0.6);
    const KrausChannel ch = KrausChannel::gad(0.4, 2.0 / 3.0);
    for (auto _ : state) benchmark::DoNotOptimize(apply_two_qubit(rho, ch, ch));
}
BENCHMARK(BM_ApplyTwoQubit);

static void BM_ConcurrenceGeneral(benchmark::State& state) {
    const auto ch = KrausChannel::gad(0.3, 1.0);
    const DensityMatrix rho = apply_two_qubit(phi_state(0.7), ch, ch);
    for (auto _ : state) benchmark::DoNotOptimize(concurrence_general(rho));
}
BENCHMARK(BM_ConcurrenceGeneral);

static void BM_MeasurementObjective(benchmark::State& state) {
    const auto ch = KrausChannel::dephasing(0.3);
    const DensityMatrix rho = apply_two_qubit(werner(0.7), ch, ch);
    const MeasurementBasis basis{0.4, 1.3};
    for (auto _ : state) benchmark::DoNotOptimize(measurement_objective(rho, basis));
}
BENCHMARK(BM_MeasurementObjective);

static void BM_DiscordPoint(benchmark::State& state) {
    const auto ch = KrausChannel::gad(0.5, 2.0 / 3.0);
    const DensityMatrix rho = apply_two_qubit(phi_state(0.4), ch, ch);
    for (auto _ : state) benchmark::DoNotOptimize(discord(rho));
}
BENCHMARK(BM_DiscordPoint);

static void BM_EsdBisection(benchmark::State& state) {
    const ChannelConfig config{ConfigKind::GAD, StateFamily::Phi, 1.0};
    for (auto _ : state) benchmark::DoNotOptimize(esd_gamma(config, 0.8));
}
BENCHMARK(BM_EsdBisection);

BENCHMARK_MAIN();
