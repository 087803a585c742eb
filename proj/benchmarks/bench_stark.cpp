#include <benchmark/benchmark.h>

#include "stark/airy.hpp"
#include "stark/boundary.hpp"
#include "stark/eigenfunction.hpp"
#include "stark/solver.hpp"

using namespace stark;

namespace {

void AirySeries(benchmark::State& state) {
    double x = -7.2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(airy_eval(x));
        x = x >= 7.2 ? -7.2 : x + 0.37;
    }
}
BENCHMARK(AirySeries);

void AiryAsymptotic(benchmark::State& state) {
    double x = -600.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(airy_eval(x));
        x = x >= -8.0 ? -600.0 : x + 3.1;
    }
}
BENCHMARK(AiryAsymptotic);

void ReducedCharacteristic(benchmark::State& state) {
    const StarkProblem p(1.0, 1.0);
    double e = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduced_characteristic(e, p, Preset::dirichlet));
        e = e >= 40.0 ? 0.0 : e + 0.31;
    }
}
BENCHMARK(ReducedCharacteristic);

void SigmaMinCharacteristic(benchmark::State& state) {
    const StarkProblem p(1.0, 1.0);
    const UnitaryBC u = preset(Preset::periodic);
    double e = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(normalized_residual(e, p, u));
        e = e >= 40.0 ? 0.0 : e + 0.31;
    }
}
BENCHMARK(SigmaMinCharacteristic);

void SolveFirstFour(benchmark::State& state) {
    const StarkProblem p(1.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_spectrum(
            SpectrumRequest::for_preset(p, Preset::dirichlet, -2.0, 2.0, 4)));
    }
}
BENCHMARK(SolveFirstFour)->Unit(benchmark::kMillisecond);

void SplitPairScan(benchmark::State& state) {
    const StarkProblem p(1.0, 0.01);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_spectrum(
            SpectrumRequest::for_preset(p, Preset::periodic, -1.0, 3.0, 5)));
    }
}
BENCHMARK(SplitPairScan)->Unit(benchmark::kMillisecond);

void NormalizeEigenfunction(benchmark::State& state) {
    const StarkProblem p(1.0, 5.0);
    const auto evs = solve_spectrum(
        SpectrumRequest::for_preset(p, Preset::dirichlet, -6.0, -1.0, 1));
    const Eigenfunction raw =
        make_eigenfunction(evs.eigenvalues[0].energy, p, preset(Preset::dirichlet));
    for (auto _ : state) {
        benchmark::DoNotOptimize(normalize(raw));
    }
}
BENCHMARK(NormalizeEigenfunction)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
