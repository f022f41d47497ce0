// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace depinner {

/// Conditions a tuning run was performed under.
struct RunConditions {
    double v_amp = 0.0;    // drive amplitude [V]
    double t_set = 0.0;    // set temperature [K]
    double f_drive = 0.0;  // drive frequency [Hz]
};

struct TuningSample {
    double t = 0.0;  // elapsed process time [s]
    double r = 0.0;  // fractional resistance R(t)/R0
};

/// Time series of fractional junction resistance during one tuning run.
struct TuningCurve {
    std::vector<TuningSample> samples;
    RunConditions conditions;
    std::string junction_id;

    /// Structural invariants: non-empty, strictly increasing timestamps.
    /// Throws std::invalid_argument on violation.
    void validate() const;

    /// Whether the first sample looks like a real normalized start,
    /// r in (0, 10]. Synthetic curves generated straight from the log law
    /// can start at or below zero, so this is a plausibility signal for
    /// ingested data, not a hard invariant.
    bool plausible_start() const;
};

/// Fit of r = a * ln(c t). `a` is the tuning-speed parameter; negative
/// values are reported as-is (runs with apparent negative speed exist).
struct LogFit {
    double a = 0.0;
    double c = 0.0;  // 1/s
    double rss = 0.0;
    bool converged = false;
    /// Set when the optimum has a ~ 0, where c is unconstrained; c is then
    /// reported at the exp-overflow clamp and only `a` is meaningful.
    bool degenerate_c = false;
};

/// Fit of r = a * t^n + 1.
struct PowerFit {
    double a = 0.0;
    double n = 0.0;
    double rss = 0.0;
    bool converged = false;
};

/// Least-squares fit of the logarithmic tuning law. Samples at t <= 0 are
/// dropped with a warning on stderr; at least 8 must remain. Solved exactly
/// through the linear reparameterization r = a*ln(t) + b, b = a*ln(c).
LogFit fit_log_model(const TuningCurve& curve);

/// Least-squares fit of the power law via the shared descent engine,
/// initialized at n = 0.3 and a from the first/last samples.
PowerFit fit_power_model(const TuningCurve& curve);

struct ModelComparison {
    LogFit log_fit;
    PowerFit power_fit;
    enum class Preferred { Log, Power };
    Preferred preferred = Preferred::Log;
};

/// Run both fits; prefer the lower rss, ties to the logarithmic model.
ModelComparison compare_models(const TuningCurve& curve);

/// First timestamp where the fractional resistance collapses below
/// `collapse_fraction` (junction became a short), or nullopt.
std::optional<double> detect_failure(const TuningCurve& curve,
                                     double collapse_fraction = 0.1);

}  // namespace depinner
