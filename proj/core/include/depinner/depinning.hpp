// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

namespace depinner {

/// Parameters of the depinning boundary and its frequency correction.
/// `tau` may be left at 0 (unset) when no oscillatory drive is involved;
/// operations that need it validate it on entry.
struct DepinningParams {
    double t_p = 0.0;   // depinning temperature [K]
    double v_th = 0.0;  // zero-temperature threshold voltage [V]
    double mu = 1.0;    // dimensionless exponent of the boundary law
    double tau = 0.0;   // characteristic hop timescale [s]; 0 = unset
};

/// Operating regime of a (V, T) point under a drive.
enum class Regime { Pinned, Creep, Running };

const char* to_string(Regime r);

/// Straight line T = slope*V + intercept fitted to a regime boundary.
/// Intercept is kept in kelvin; that is the convention the tau estimate
/// expects.
struct BoundaryLine {
    double slope = 0.0;        // K per V
    double intercept_t = 0.0;  // K
    double frequency = 0.0;    // Hz; 0 when not tied to a drive
};

/// Boundary temperature T(V) = T_P * (V_th/V) * (1 - V/V_th)^(1/mu).
/// Valid for 0 < V <= V_th; returns 0 at V = V_th.
double depinning_temperature(double v, const DepinningParams& p);

/// Inverse of depinning_temperature: the V in (0, V_th] whose boundary
/// temperature equals `t`. Closed form for mu = 1, bracketed bisection
/// otherwise (the boundary is strictly decreasing in V, so the bracket
/// is guaranteed).
double depinning_voltage(double t, const DepinningParams& p);

/// Adiabatic creep factor Lambda = ln(1/(omega0*tau)). Requires
/// omega0*tau < 1; the model has nothing to say past that point.
double lambda_factor(double omega0, double tau);

/// Creep boundary: depinning_temperature with T_P replaced by T_P/Lambda.
double creep_temperature(double v, const DepinningParams& p, double omega0);

/// Regime of a (V, T) point. omega0 <= 0 means DC drive, which has no
/// creep band. Boundaries classify to the higher-mobility regime.
Regime classify_point(double v, double t, double omega0, const DepinningParams& p);

struct BoundaryFitResult {
    DepinningParams params;  // tau left unset
    double rss = 0.0;        // squared temperature residuals [K^2]
    bool converged = false;
    bool degenerate = false;  // fitted v_th did not clear the largest data voltage
};

/// Fit (T_P, V_th) of the boundary law to breakdown data, with mu fixed.
/// `points` are (T [K], V_BD [V]) pairs; at least 3 required.
BoundaryFitResult fit_depinning_boundary(
    const std::vector<std::pair<double, double>>& points, double mu = 1.0);

struct TauEstimate {
    double tau = 0.0;        // s
    bool adiabatic = false;  // 2*pi*f_high*tau < 1
};

/// Solve ln(2*pi*f_high*tau) / ln(2*pi*f_low*tau) = intercept_low/intercept_high
/// for tau. The intercepts are the kelvin y-intercepts of the stable/creep
/// boundary lines fitted at the two frequencies. Exponentially sensitive to
/// the intercept ratio; the adiabatic flag reports whether the result is
/// inside the model's validity window.
TauEstimate estimate_tau(double f_low, double f_high,
                         double intercept_low, double intercept_high);

}  // namespace depinner
