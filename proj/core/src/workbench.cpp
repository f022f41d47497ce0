// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#include "depinner/workbench.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "depinner/constants.hpp"
#include "depinner/rng.hpp"

namespace depinner {

namespace {

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    const double ratio = std::log(hi / lo);
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] =
            lo * std::exp(ratio * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    out.back() = hi;
    return out;
}

/// Campaign curve for a surviving junction: the log law carrying the run's
/// own normalization, r = (1 + a*ln t)*(1 + eps). This is Eq.-1 form with
/// c = e^(1/a) evaluated stably (plain c = 1 would start curves below the
/// collapse threshold and read as failures); the fitted speed a is the
/// same either way, and a = 0 gives the flat unit curve of a pinned run.
TuningCurve campaign_curve(double a, double duration, int n_samples, double noise,
                           std::uint64_t seed) {
    SeededRng rng(seed);
    TuningCurve curve;
    curve.samples.reserve(static_cast<std::size_t>(n_samples));
    for (const double t : log_spaced(duration / n_samples, duration, n_samples)) {
        const double eps = noise > 0.0 ? rng.gaussian(0.0, noise) : 0.0;
        curve.samples.push_back({t, (1.0 + a * std::log(t)) * (1.0 + eps)});
    }
    return curve;
}

}  // namespace

TuningCurve synth_tuning_curve(double a, double c, double duration, int n_samples,
                               double noise, std::uint64_t seed) {
    if (!(duration > 0.0)) throw std::invalid_argument("synth_tuning_curve: duration must be positive");
    if (n_samples < 8) throw std::invalid_argument("synth_tuning_curve: need at least 8 samples");
    if (!(noise >= 0.0)) throw std::invalid_argument("synth_tuning_curve: noise must be >= 0");
    if (!(c > 0.0)) throw std::invalid_argument("synth_tuning_curve: c must be positive");

    SeededRng rng(seed);
    TuningCurve curve;
    curve.samples.reserve(static_cast<std::size_t>(n_samples));
    for (const double t : log_spaced(duration / n_samples, duration, n_samples)) {
        const double eps = noise > 0.0 ? rng.gaussian(0.0, noise) : 0.0;
        curve.samples.push_back({t, a * std::log(c * t) * (1.0 + eps)});
    }
    return curve;
}

std::vector<RunResult> simulate_campaign(const CampaignSpec& spec) {
    if (spec.v_values.empty() || spec.t_values.empty()) {
        throw std::invalid_argument("simulate_campaign: empty condition axes");
    }
    if (spec.junctions_per_cell < 1) {
        throw std::invalid_argument("simulate_campaign: junctions_per_cell must be >= 1");
    }
    if (!(spec.noise >= 0.0)) {
        throw std::invalid_argument("simulate_campaign: noise must be >= 0");
    }
    const double omega0 = 2.0 * kPi * spec.f_drive;

    std::vector<RunResult> results;
    results.reserve(spec.v_values.size() * spec.t_values.size() *
                    static_cast<std::size_t>(spec.junctions_per_cell));

    std::uint64_t run_index = 0;
    for (std::size_t it = 0; it < spec.t_values.size(); ++it) {
        for (std::size_t iv = 0; iv < spec.v_values.size(); ++iv) {
            const double v = spec.v_values[iv];
            const double t = spec.t_values[it];
            const Regime regime = classify_point(v, t, omega0, spec.depinning);
            for (int j = 0; j < spec.junctions_per_cell; ++j, ++run_index) {
                const std::uint64_t run_seed = mix_seed(spec.seed, run_index);
                RunResult run;
                if (regime == Regime::Running) {
                    SeededRng rng(run_seed);
                    const double t_fail = rng.uniform(0.0, kFailureCutoffSeconds);
                    run.failed = true;
                    run.t_fail = t_fail;
                    // Collapsed trace: nominal until failure, short after.
                    TuningCurve curve;
                    for (const double ts : log_spaced(spec.duration / spec.samples_per_curve,
                                                      spec.duration, spec.samples_per_curve)) {
                        curve.samples.push_back({ts, ts < t_fail ? 1.0 : 1e-3});
                    }
                    run.curve = std::move(curve);
                } else {
                    double a = 0.0;
                    if (regime == Regime::Creep) {
                        const double boundary =
                            creep_temperature(v, spec.depinning, omega0);
                        a = std::max(0.0, spec.speed_scale * (t - boundary));
                    }
                    run.curve = campaign_curve(a, spec.duration, spec.samples_per_curve,
                                               spec.noise, run_seed);
                }
                run.curve.conditions = {v, t, spec.f_drive};
                run.curve.junction_id = "sim-v" + std::to_string(iv) + "-t" +
                                        std::to_string(it) + "-j" + std::to_string(j);
                results.push_back(std::move(run));
            }
        }
    }
    return results;
}

TuningRecord record_from_curve(const TuningCurve& curve, double failure_cutoff,
                               double collapse_fraction) {
    TuningRecord rec;
    rec.junction_id = curve.junction_id;
    rec.conditions = curve.conditions;
    const auto t_fail = detect_failure(curve, collapse_fraction);
    if (t_fail && *t_fail <= failure_cutoff) {
        rec.t_fail = t_fail;
    } else {
        rec.fit = fit_log_model(curve);
    }
    return rec;
}

TargetedRunResult simulate_targeted_run(double start_r, double target_fraction,
                                        double a, double c, double overshoot_rate) {
    if (!(start_r > 0.0)) throw std::invalid_argument("simulate_targeted_run: start_R must be positive");
    if (!(target_fraction > 0.0)) {
        throw std::invalid_argument("simulate_targeted_run: target_fraction must be positive");
    }
    if (!(c > 0.0)) throw std::invalid_argument("simulate_targeted_run: c must be positive");
    if (!(overshoot_rate >= 0.0)) {
        throw std::invalid_argument("simulate_targeted_run: overshoot_rate must be >= 0");
    }
    constexpr double kTimeCap = 1e5;     // s
    constexpr double kSettleWindow = 100.0;  // s

    const double r_target = 1.0 + target_fraction;
    if (!(a > 0.0)) {
        throw std::runtime_error("simulate_targeted_run: target unreachable (a <= 0)");
    }
    const double t_hit = std::exp(r_target / a) / c;
    if (!(t_hit <= kTimeCap)) {
        throw std::runtime_error(
            "simulate_targeted_run: target not reached within the 1e5 s cap");
    }

    TargetedRunResult out;
    out.t_hit = t_hit;
    out.final_fraction =
        target_fraction +
        overshoot_rate * std::log((t_hit + kSettleWindow) / t_hit);
    out.final_r = start_r * (1.0 + out.final_fraction);

    TuningCurve curve;
    constexpr int kCurveSamples = 200;
    for (const double ts : log_spaced(t_hit / 100.0, t_hit + kSettleWindow, kCurveSamples)) {
        const double r = ts <= t_hit
                             ? a * std::log(c * ts)
                             : r_target + overshoot_rate * std::log(ts / t_hit);
        curve.samples.push_back({ts, r});
    }
    out.curve = std::move(curve);
    return out;
}

}  // namespace depinner
