// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#include "depinner/curve_fit.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "depinner/least_squares.hpp"

namespace depinner {

namespace {

constexpr int kMinSamples = 8;
constexpr double kExpClamp = 700.0;  // |ln c| past this overflows a double

/// Samples usable for fitting: t > 0. Emits one warning when any are dropped.
std::vector<TuningSample> fit_samples(const TuningCurve& curve) {
    curve.validate();
    std::vector<TuningSample> kept;
    kept.reserve(curve.samples.size());
    for (const auto& s : curve.samples) {
        if (s.t > 0.0) kept.push_back(s);
    }
    if (kept.size() != curve.samples.size()) {
        std::cerr << "depinner: dropped " << curve.samples.size() - kept.size()
                  << " sample(s) at t <= 0 before fitting"
                  << (curve.junction_id.empty() ? "" : " (" + curve.junction_id + ")")
                  << "\n";
    }
    if (kept.size() < kMinSamples) {
        throw std::invalid_argument("curve fit: need at least 8 samples at t > 0");
    }
    return kept;
}

}  // namespace

void TuningCurve::validate() const {
    if (samples.empty()) {
        throw std::invalid_argument("TuningCurve: no samples");
    }
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (!(samples[i].t > samples[i - 1].t)) {
            throw std::invalid_argument("TuningCurve: timestamps must be strictly increasing");
        }
    }
}

bool TuningCurve::plausible_start() const {
    return !samples.empty() && samples.front().r > 0.0 && samples.front().r <= 10.0;
}

LogFit fit_log_model(const TuningCurve& curve) {
    const auto pts = fit_samples(curve);
    const auto n = static_cast<double>(pts.size());

    // r = a*ln(t) + b with b = a*ln(c) is an exact reparameterization of
    // r = a*ln(c t), so ordinary linear regression in ln(t) IS the
    // least-squares optimum of the log law.
    double sx = 0.0, sy = 0.0;
    for (const auto& s : pts) {
        sx += std::log(s.t);
        sy += s.r;
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& s : pts) {
        const double dx = std::log(s.t) - mx;
        sxx += dx * dx;
        sxy += dx * (s.r - my);
    }
    // Timestamps are strictly increasing and positive, so sxx > 0.
    const double a = sxy / sxx;
    const double b = my - a * mx;

    LogFit out;
    out.a = a;
    out.converged = true;
    double rss = 0.0;
    for (const auto& s : pts) {
        const double resid = s.r - (a * std::log(s.t) + b);
        rss += resid * resid;
    }
    out.rss = rss;

    const double exponent = a != 0.0 ? b / a : std::numeric_limits<double>::infinity();
    if (!std::isfinite(exponent) || std::abs(exponent) > kExpClamp) {
        out.degenerate_c = true;
        out.c = std::exp(exponent > 0.0 ? kExpClamp : -kExpClamp);
    } else {
        out.c = std::exp(exponent);
    }
    return out;
}

PowerFit fit_power_model(const TuningCurve& curve) {
    const auto pts = fit_samples(curve);

    const double n0 = 0.3;
    const auto& first = pts.front();
    const auto& last = pts.back();
    const double denom = std::pow(last.t, n0) - std::pow(first.t, n0);
    double a0 = denom != 0.0 ? (last.r - first.r) / denom : 0.01;
    if (!std::isfinite(a0)) a0 = 0.01;

    auto residual = [&](const Eigen::VectorXd& q) {
        const double a = q[0];
        const double n = q[1];
        Eigen::VectorXd r(static_cast<Eigen::Index>(pts.size()));
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double model = a * std::pow(pts[i].t, n) + 1.0;
            // Extreme exponents overflow pow; hand the engine a finite
            // penalty instead of a NaN so it backs off.
            r[static_cast<Eigen::Index>(i)] =
                std::isfinite(model) ? pts[i].r - model : 1e6;
        }
        return r;
    };

    Eigen::VectorXd init(2);
    init << a0, n0;
    const LeastSquaresResult fit = least_squares_fit(residual, init);

    PowerFit out;
    out.a = fit.params[0];
    out.n = fit.params[1];
    out.rss = fit.rss;
    out.converged = fit.converged;
    return out;
}

ModelComparison compare_models(const TuningCurve& curve) {
    ModelComparison out;
    out.log_fit = fit_log_model(curve);
    out.power_fit = fit_power_model(curve);
    out.preferred = out.power_fit.rss < out.log_fit.rss
                        ? ModelComparison::Preferred::Power
                        : ModelComparison::Preferred::Log;
    return out;
}

std::optional<double> detect_failure(const TuningCurve& curve,
                                     double collapse_fraction) {
    curve.validate();
    if (!(collapse_fraction > 0.0) || !(collapse_fraction < 1.0)) {
        throw std::invalid_argument("detect_failure: collapse_fraction must be in (0, 1)");
    }
    for (const auto& s : curve.samples) {
        if (s.r < collapse_fraction) return s.t;
    }
    return std::nullopt;
}

}  // namespace depinner
