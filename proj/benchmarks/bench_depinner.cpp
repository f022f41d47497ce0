// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cmath>

#include "depinner/curve_fit.hpp"
#include "depinner/depinning.hpp"
#include "depinner/junction_iv.hpp"
#include "depinner/transmon.hpp"
#include "depinner/tridiag.hpp"
#include "depinner/workbench.hpp"

namespace {

void BM_DepinningVoltageBisection(benchmark::State& state) {
    const depinner::DepinningParams p{450.0, 1.3, 2.0, 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(depinner::depinning_voltage(200.0, p));
    }
}
BENCHMARK(BM_DepinningVoltageBisection);

void BM_LogFit(benchmark::State& state) {
    const auto curve = depinner::synth_tuning_curve(0.05, 2.0, 150.0,
                                                    static_cast<int>(state.range(0)),
                                                    0.005, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(depinner::fit_log_model(curve));
    }
}
BENCHMARK(BM_LogFit)->Arg(64)->Arg(256)->Arg(1024);

void BM_PowerFit(benchmark::State& state) {
    depinner::TuningCurve curve;
    for (int i = 0; i < 200; ++i) {
        const double t = 0.5 * std::pow(300.0, i / 199.0);
        curve.samples.push_back({t, 0.02 * std::pow(t, 0.4) + 1.0});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(depinner::fit_power_model(curve));
    }
}
BENCHMARK(BM_PowerFit);

void BM_SimmonsCurrent(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            depinner::simmons_current(0.5, 1.5e-9, 2.0, 8.86e4 * 1e-18));
    }
}
BENCHMARK(BM_SimmonsCurrent);

void BM_SimmonsFit(benchmark::State& state) {
    const double area = 8.86e4 * 1e-18;
    depinner::IVTrace trace;
    for (int k = 0; k <= 120; ++k) {
        const double v = 0.01 * k;
        trace.points.push_back(
            {v, v > 0.0 ? depinner::simmons_current(v, 1.8e-9, 1.6, area) : 0.0});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(depinner::fit_simmons(trace, area));
    }
}
BENCHMARK(BM_SimmonsFit);

void BM_TridiagEigenvalues(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<double> diag(n), sub(n - 1, -0.5 * 23.2e9);
    const auto half = static_cast<long>(n / 2);
    for (long k = -half; k <= half; ++k) {
        diag[static_cast<std::size_t>(k + half)] = 4.0 * 166e6 * static_cast<double>(k * k);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(depinner::tridiag_eigenvalues(diag, sub));
    }
}
BENCHMARK(BM_TridiagEigenvalues)->Arg(61)->Arg(121)->Arg(401);

void BM_TransmonSpectrum(benchmark::State& state) {
    const depinner::TransmonParams p{166e6, 23.2e9, static_cast<int>(state.range(0)), 6};
    for (auto _ : state) {
        benchmark::DoNotOptimize(depinner::spectrum(p));
    }
}
BENCHMARK(BM_TransmonSpectrum)->Arg(30)->Arg(60);

void BM_InferEjEc(benchmark::State& state) {
    const auto spec = depinner::spectrum({166e6, 23.2e9, 30, 6});
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            depinner::infer_ej_ec(spec.transitions[0], spec.transitions[1]));
    }
}
BENCHMARK(BM_InferEjEc);

void BM_SimulateCampaign(benchmark::State& state) {
    depinner::CampaignSpec spec;
    spec.depinning = {3000.0, 1.3, 1.0, 1e-6};
    spec.f_drive = 103.0;
    for (int i = 0; i < 8; ++i) spec.v_values.push_back(0.5 + 0.1 * i);
    for (int i = 0; i < 9; ++i) spec.t_values.push_back(280.0 + 30.0 * i);
    spec.noise = 0.002;
    for (auto _ : state) {
        benchmark::DoNotOptimize(depinner::simulate_campaign(spec));
    }
}
BENCHMARK(BM_SimulateCampaign);

}  // namespace

BENCHMARK_MAIN();
