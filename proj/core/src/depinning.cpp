// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#include "depinner/depinning.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "depinner/constants.hpp"
#include "depinner/least_squares.hpp"

namespace depinner {

namespace {

void validate_boundary_params(const DepinningParams& p) {
    if (!(p.t_p > 0.0) || !(p.v_th > 0.0) || !(p.mu > 0.0)) {
        throw std::invalid_argument(
            "depinning: T_P, V_th and mu must all be positive");
    }
}

// Boundary law with the (1 - V/V_th) factor oddly extended past V_th.
// The extension is only used by the boundary fit, where intermediate
// parameter steps can place v_th below a data point; it keeps the
// residual finite and monotone there.
double boundary_temperature_extended(double v, double t_p, double v_th, double mu) {
    const double x = 1.0 - v / v_th;
    const double mag = std::pow(std::abs(x), 1.0 / mu);
    return t_p * (v_th / v) * (x < 0.0 ? -mag : mag);
}

}  // namespace

const char* to_string(Regime r) {
    switch (r) {
        case Regime::Pinned: return "Pinned";
        case Regime::Creep: return "Creep";
        case Regime::Running: return "Running";
    }
    return "?";
}

double depinning_temperature(double v, const DepinningParams& p) {
    validate_boundary_params(p);
    if (!(v > 0.0) || v > p.v_th) {
        throw std::domain_error("depinning_temperature: V must be in (0, V_th]");
    }
    return p.t_p * (p.v_th / v) * std::pow(1.0 - v / p.v_th, 1.0 / p.mu);
}

double depinning_voltage(double t, const DepinningParams& p) {
    validate_boundary_params(p);
    if (!(t >= 0.0)) {
        throw std::domain_error("depinning_voltage: T must be >= 0");
    }
    if (t == 0.0) return p.v_th;
    if (p.mu == 1.0) return p.v_th / (1.0 + t / p.t_p);

    // T(V) is strictly decreasing on (0, V_th]: T(lo) > t > T(hi) = 0.
    double lo = 1e-12 * p.v_th;
    double hi = p.v_th;
    if (depinning_temperature(lo, p) < t) return lo;
    constexpr int kMaxIter = 200;
    for (int i = 0; i < kMaxIter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (depinning_temperature(mid, p) > t) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-12 * hi) return 0.5 * (lo + hi);
    }
    throw std::runtime_error("depinning_voltage: bisection did not converge");
}

double lambda_factor(double omega0, double tau) {
    if (!(omega0 > 0.0) || !(tau > 0.0)) {
        throw std::invalid_argument("lambda_factor: omega0 and tau must be positive");
    }
    const double x = omega0 * tau;
    if (x >= 1.0) {
        throw std::domain_error(
            "lambda_factor: omega0*tau >= 1 is outside the adiabatic model");
    }
    return std::log(1.0 / x);
}

double creep_temperature(double v, const DepinningParams& p, double omega0) {
    const double lambda = lambda_factor(omega0, p.tau);
    DepinningParams scaled = p;
    scaled.t_p = p.t_p / lambda;
    return depinning_temperature(v, scaled);
}

Regime classify_point(double v, double t, double omega0, const DepinningParams& p) {
    validate_boundary_params(p);
    if (!(v > 0.0) || !(t >= 0.0)) {
        throw std::domain_error("classify_point: need V > 0 and T >= 0");
    }
    if (v > p.v_th) return Regime::Running;
    if (t >= depinning_temperature(v, p)) return Regime::Running;
    if (omega0 > 0.0 && t >= creep_temperature(v, p, omega0)) return Regime::Creep;
    return Regime::Pinned;
}

BoundaryFitResult fit_depinning_boundary(
    const std::vector<std::pair<double, double>>& points, double mu) {
    if (points.size() < 3) {
        throw std::invalid_argument(
            "fit_depinning_boundary: need at least 3 (T, V_BD) points");
    }
    if (!(mu > 0.0)) {
        throw std::invalid_argument("fit_depinning_boundary: mu must be positive");
    }
    double v_max = 0.0;
    double t_max = 0.0;
    for (const auto& [t, v] : points) {
        if (!(v > 0.0) || !(t >= 0.0)) {
            throw std::invalid_argument(
                "fit_depinning_boundary: points need V_BD > 0 and T >= 0");
        }
        v_max = std::max(v_max, v);
        t_max = std::max(t_max, t);
    }

    // Fit in log-parameter space so T_P and V_th stay positive on every step.
    const double t_p0 = t_max > 0.0 ? t_max : 1.0;
    const double v_th0 = 1.05 * v_max;
    Eigen::VectorXd init(2);
    init << std::log(t_p0), std::log(v_th0);

    auto residual = [&](const Eigen::VectorXd& q) {
        const double t_p = std::exp(q[0]);
        const double v_th = std::exp(q[1]);
        Eigen::VectorXd r(static_cast<Eigen::Index>(points.size()));
        for (std::size_t i = 0; i < points.size(); ++i) {
            r[static_cast<Eigen::Index>(i)] =
                points[i].first -
                boundary_temperature_extended(points[i].second, t_p, v_th, mu);
        }
        return r;
    };

    const LeastSquaresResult fit = least_squares_fit(residual, init);

    BoundaryFitResult out;
    out.params.t_p = std::exp(fit.params[0]);
    out.params.v_th = std::exp(fit.params[1]);
    out.params.mu = mu;
    out.rss = fit.rss;
    out.converged = fit.converged;
    out.degenerate = out.params.v_th <= v_max;
    return out;
}

TauEstimate estimate_tau(double f_low, double f_high,
                         double intercept_low, double intercept_high) {
    if (!(f_low > 0.0) || !(f_high > f_low)) {
        throw std::invalid_argument("estimate_tau: need 0 < f_low < f_high");
    }
    if (!(intercept_low > 0.0) || !(intercept_high > 0.0)) {
        throw std::invalid_argument("estimate_tau: intercepts must be positive");
    }
    const double r = intercept_low / intercept_high;
    if (r == 1.0) {
        throw std::domain_error(
            "estimate_tau: equal intercepts leave tau unconstrained");
    }
    const double ln_tau =
        (r * std::log(2.0 * kPi * f_low) - std::log(2.0 * kPi * f_high)) / (1.0 - r);
    TauEstimate out;
    out.tau = std::exp(ln_tau);
    out.adiabatic = 2.0 * kPi * f_high * out.tau < 1.0;
    return out;
}

}  // namespace depinner
