// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <stdexcept>
#include <thread>

#include "depinner/constants.hpp"
#include "depinner/io.hpp"
#include "depinner/rng.hpp"
#include "depinner/transmon.hpp"
#include "depinner/workbench.hpp"

using namespace depinner;

namespace {

/// Campaign around the creep band of a synthetic parameter set. tau = 1e-6 s
/// gives Lambda ~ 7.3 at 103 Hz and ~5.1 at 1 kHz, so the creep boundary
/// lands a few hundred kelvin below the running boundary.
CampaignSpec reference_campaign(double f_drive) {
    CampaignSpec spec;
    spec.depinning = {3000.0, 1.3, 1.0, 1e-6};
    spec.f_drive = f_drive;
    for (int i = 0; i < 8; ++i) spec.v_values.push_back(0.5 + 0.1 * i);  // 0.5..1.2 V
    for (int i = 0; i < 9; ++i) spec.t_values.push_back(280.0 + 30.0 * i);  // 280..520 K
    spec.junctions_per_cell = 3;
    spec.speed_scale = 5e-4;
    spec.noise = 0.002;
    spec.seed = 1234;
    return spec;
}

PhaseGrid grid_from_runs(const std::vector<RunResult>& runs, double f_drive) {
    std::vector<TuningRecord> records;
    records.reserve(runs.size());
    for (const auto& run : runs) records.push_back(record_from_curve(run.curve));
    return build_grid(records, f_drive);
}

}  // namespace

TEST_CASE("synthetic curves are deterministic per seed") {
    const auto a = synth_tuning_curve(0.05, 2.0, 150.0, 64, 0.01, 99);
    const auto b = synth_tuning_curve(0.05, 2.0, 150.0, 64, 0.01, 99);
    const auto c = synth_tuning_curve(0.05, 2.0, 150.0, 64, 0.01, 100);
    REQUIRE(a.samples.size() == b.samples.size());
    bool identical = true;
    bool differs_from_c = false;
    for (std::size_t k = 0; k < a.samples.size(); ++k) {
        identical = identical && a.samples[k].t == b.samples[k].t &&
                    a.samples[k].r == b.samples[k].r;
        differs_from_c = differs_from_c || a.samples[k].r != c.samples[k].r;
    }
    CHECK(identical);
    CHECK(differs_from_c);
}

TEST_CASE("noiseless synthetic curve round-trips through the log fit") {
    const auto curve = synth_tuning_curve(0.04, 3.0, 150.0, 200, 0.0, 5);
    const auto fit = fit_log_model(curve);
    CHECK(fit.a == doctest::Approx(0.04).epsilon(1e-6));
    CHECK(fit.c == doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("zero-speed synthetic curve is flat zero") {
    const auto curve = synth_tuning_curve(0.0, 1.0, 150.0, 32, 0.0, 5);
    for (const auto& s : curve.samples) CHECK(s.r == 0.0);
}

TEST_CASE("synth validation") {
    CHECK_THROWS_AS(synth_tuning_curve(0.1, 1.0, 0.0, 32, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(synth_tuning_curve(0.1, 1.0, 100.0, 7, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(synth_tuning_curve(0.1, 1.0, 100.0, 32, -0.1, 1), std::invalid_argument);
}

TEST_CASE("pinned-only campaign: no failures, all zero speeds") {
    CampaignSpec spec = reference_campaign(103.0);
    spec.t_values = {100.0, 120.0};  // far below the creep boundary
    spec.v_values = {0.3, 0.4};
    spec.noise = 0.0;
    const auto runs = simulate_campaign(spec);
    REQUIRE(runs.size() == 2 * 2 * 3);
    for (const auto& run : runs) {
        CHECK_FALSE(run.failed);
        const auto fit = fit_log_model(run.curve);
        CHECK(std::abs(fit.a) < 1e-9);
    }
}

TEST_CASE("super-threshold campaign: everything fails before the cutoff") {
    CampaignSpec spec = reference_campaign(103.0);
    spec.v_values = {1.4, 1.5};  // above V_th = 1.3
    spec.t_values = {300.0, 350.0};
    const auto runs = simulate_campaign(spec);
    for (const auto& run : runs) {
        CHECK(run.failed);
        REQUIRE(run.t_fail.has_value());
        CHECK(*run.t_fail < kFailureCutoffSeconds);
        const auto rec = record_from_curve(run.curve);
        CHECK(rec.t_fail.has_value());
    }
}

TEST_CASE("lower frequency tunes at least as many cells") {
    const auto runs_low = simulate_campaign(reference_campaign(103.0));
    const auto runs_high = simulate_campaign(reference_campaign(1000.0));
    const auto grid_low = grid_from_runs(runs_low, 103.0);
    const auto grid_high = grid_from_runs(runs_high, 1000.0);

    int nonzero_low = 0, nonzero_high = 0;
    for (std::size_t it = 0; it < grid_low.t_axis.size(); ++it) {
        for (std::size_t iv = 0; iv < grid_low.v_axis.size(); ++iv) {
            const auto lo = cell_speed(grid_low, iv, it);
            const auto hi = cell_speed(grid_high, iv, it);
            if (lo && *lo > 1e-6) ++nonzero_low;
            if (hi && *hi > 1e-6) {
                ++nonzero_high;
                REQUIRE(lo.has_value());
                CHECK(*lo > 1e-6);  // creep region containment, cell by cell
            }
        }
    }
    CHECK(nonzero_low >= nonzero_high);
    CHECK(nonzero_low > 0);
}

TEST_CASE("campaign grid medians track the generating speed surface") {
    CampaignSpec spec = reference_campaign(103.0);
    spec.noise = 0.002;
    const auto runs = simulate_campaign(spec);
    const auto grid = grid_from_runs(runs, 103.0);
    const double omega = 2.0 * kPi * spec.f_drive;
    int checked = 0;
    for (std::size_t it = 0; it < grid.t_axis.size(); ++it) {
        for (std::size_t iv = 0; iv < grid.v_axis.size(); ++iv) {
            const double v = grid.v_axis[iv];
            const double t = grid.t_axis[it];
            if (classify_point(v, t, omega, spec.depinning) != Regime::Creep) continue;
            const double want =
                spec.speed_scale * (t - creep_temperature(v, spec.depinning, omega));
            if (want < 5e-3) continue;  // shallow cells drown in relative noise
            const auto got = cell_speed(grid, iv, it);
            REQUIRE(got.has_value());
            CHECK(std::abs(*got - want) / want < 0.10);
            ++checked;
        }
    }
    CHECK(checked > 10);
}

TEST_CASE("failure fractions split along the running boundary") {
    CampaignSpec spec = reference_campaign(103.0);
    spec.v_values = {0.6, 0.9, 1.2, 1.4, 1.6};
    spec.t_values = {300.0, 400.0};
    const auto runs = simulate_campaign(spec);
    const auto grid = grid_from_runs(runs, spec.f_drive);
    const auto fractions = failure_fraction_map(grid);
    const double omega = 2.0 * kPi * spec.f_drive;
    for (std::size_t it = 0; it < grid.t_axis.size(); ++it) {
        for (std::size_t iv = 0; iv < grid.v_axis.size(); ++iv) {
            const double f = fractions[grid.index(iv, it)];
            const bool running = classify_point(grid.v_axis[iv], grid.t_axis[it], omega,
                                                spec.depinning) == Regime::Running;
            CHECK(f == (running ? 1.0 : 0.0));
        }
    }
}

TEST_CASE("campaign runs are labeled with their conditions") {
    CampaignSpec spec = reference_campaign(103.0);
    spec.v_values = {0.5, 0.6};
    spec.t_values = {300.0, 310.0};
    const auto runs = simulate_campaign(spec);
    CHECK(runs.front().curve.conditions.f_drive == 103.0);
    CHECK(runs.front().curve.junction_id == "sim-v0-t0-j0");
    CHECK(runs.back().curve.junction_id == "sim-v1-t1-j2");
}

TEST_CASE("targeted run overshoot") {
    SUBCASE("zero drift lands exactly on target") {
        const auto run = simulate_targeted_run(5000.0, 0.3, kOvershootPresetA,
                                               std::exp(kOvershootPresetLnC), 0.0);
        CHECK(run.final_fraction == 0.3);
        CHECK(run.final_r == doctest::Approx(6500.0).epsilon(1e-12));
    }
    SUBCASE("any positive drift overshoots") {
        const auto run = simulate_targeted_run(5000.0, 0.3, kOvershootPresetA,
                                               std::exp(kOvershootPresetLnC), 0.01);
        CHECK(run.final_fraction > 0.3);
    }
    SUBCASE("the preset lands in the 34.6 percent window") {
        const auto run =
            simulate_targeted_run(5000.0, 0.3, kOvershootPresetA,
                                  std::exp(kOvershootPresetLnC), kOvershootPresetRate);
        CHECK(run.final_fraction > 0.338);
        CHECK(run.final_fraction < 0.354);
    }
    SUBCASE("unreachable targets are signaled") {
        CHECK_THROWS_AS(simulate_targeted_run(5000.0, 0.3, 0.01, 1.0, 0.0),
                        std::runtime_error);
        CHECK_THROWS_AS(simulate_targeted_run(5000.0, -0.1, 0.08, 1.0, 0.0),
                        std::invalid_argument);
    }
}

TEST_CASE("tuning-curve CSV round trip is value-exact") {
    SeededRng rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        auto curve = synth_tuning_curve(rng.uniform(-0.05, 0.1), rng.uniform(0.1, 10.0),
                                        150.0, 48, 0.01, 4000 + trial);
        curve.conditions = {rng.uniform(0.1, 2.0), rng.uniform(280.0, 600.0),
                            rng.uniform(1.0, 1000.0)};
        curve.junction_id = "rt-" + std::to_string(trial);
        const auto back = tuning_curve_from_csv(tuning_curve_to_csv(curve));
        REQUIRE(back.samples.size() == curve.samples.size());
        for (std::size_t k = 0; k < curve.samples.size(); ++k) {
            CHECK(back.samples[k].t == curve.samples[k].t);
            CHECK(back.samples[k].r == curve.samples[k].r);
        }
        CHECK(back.junction_id == curve.junction_id);
        CHECK(back.conditions.v_amp == curve.conditions.v_amp);
        CHECK(back.conditions.f_drive == curve.conditions.f_drive);
        CHECK(std::abs(back.conditions.t_set - curve.conditions.t_set) < 1e-12);
    }
}

TEST_CASE("IV CSV round trip is value-exact") {
    IVTrace trace;
    for (int k = 0; k <= 50; ++k) {
        trace.points.push_back({0.01 * k, 1e-11 * std::exp(0.21 * k)});
    }
    const auto back = iv_trace_from_csv(iv_trace_to_csv(trace));
    REQUIRE(back.points.size() == trace.points.size());
    for (std::size_t k = 0; k < trace.points.size(); ++k) {
        CHECK(back.points[k].v == trace.points[k].v);
        CHECK(back.points[k].i == trace.points[k].i);
    }
}

TEST_CASE("phase grid and barrier maps survive their documents") {
    const auto runs = simulate_campaign(reference_campaign(103.0));
    const auto grid = grid_from_runs(runs, 103.0);
    const auto back = phase_grid_from_text(phase_grid_to_text(grid));
    REQUIRE(back.v_axis == grid.v_axis);
    REQUIRE(back.t_axis.size() == grid.t_axis.size());
    for (std::size_t k = 0; k < grid.t_axis.size(); ++k) {
        CHECK(std::abs(back.t_axis[k] - grid.t_axis[k]) < 1e-12);
    }
    REQUIRE(back.cells.size() == grid.cells.size());
    for (std::size_t k = 0; k < grid.cells.size(); ++k) {
        CHECK(back.cells[k].speeds == grid.cells[k].speeds);
        CHECK(back.cells[k].n_failed == grid.cells[k].n_failed);
        CHECK(back.cells[k].n_total == grid.cells[k].n_total);
    }

    BarrierMaps maps{2, 2, {1.5e-9, 2e-9, 2.5e-9, 1.8e-9}, {0.5e9, 0.6e9, 0.55e9, 0.62e9}};
    const auto maps_back = barrier_maps_from_text(barrier_maps_to_text(maps));
    CHECK(breakdown_from_maps(maps_back) ==
          doctest::Approx(breakdown_from_maps(maps)).epsilon(1e-12));
}

TEST_CASE("contour document round trip") {
    const std::vector<std::pair<double, double>> points{{0.7, 400.0}, {0.8, 380.5}};
    const auto back = contour_from_text(contour_to_text(points, 0.01, 103.0));
    REQUIRE(back.size() == 2);
    CHECK(back[0].first == 0.7);
    CHECK(std::abs(back[0].second - 400.0) < 1e-12);
    CHECK(std::abs(back[1].second - 380.5) < 1e-12);
}

TEST_CASE("operations are pure: concurrent calls equal serial results") {
    const auto curve = synth_tuning_curve(0.04, 3.0, 150.0, 200, 0.005, 21);
    const auto serial_fit = fit_log_model(curve);
    const auto serial_spec = spectrum(TransmonParams{166e6, 23.2e9, 30, 6});

    std::vector<std::thread> workers;
    std::vector<LogFit> fits(8);
    std::vector<QuditSpectrum> specs(8);
    for (int w = 0; w < 8; ++w) {
        workers.emplace_back([&, w] {
            fits[static_cast<std::size_t>(w)] = fit_log_model(curve);
            specs[static_cast<std::size_t>(w)] =
                spectrum(TransmonParams{166e6, 23.2e9, 30, 6});
        });
    }
    for (auto& worker : workers) worker.join();
    for (int w = 0; w < 8; ++w) {
        CHECK(fits[static_cast<std::size_t>(w)].a == serial_fit.a);
        CHECK(fits[static_cast<std::size_t>(w)].c == serial_fit.c);
        CHECK(specs[static_cast<std::size_t>(w)].transitions == serial_spec.transitions);
    }
}

TEST_CASE("end-to-end pipeline orders boundary intercepts by frequency") {
    // Full chain: simulate -> fit curves -> grid -> contour -> line, at the
    // two drive frequencies, same depinning parameters and seeds.
    auto intercept_at = [](double f) {
        const auto runs = simulate_campaign(reference_campaign(f));
        const auto grid = grid_from_runs(runs, f);
        const auto contour = extract_contour(grid, 0.01);
        REQUIRE(contour.size() >= 3);
        return fit_boundary_line(contour, f).intercept_t;
    };
    const double i103 = intercept_at(103.0);
    const double i1000 = intercept_at(1000.0);
    CHECK(i103 < i1000);
}
