// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace depinner {

struct IVPoint {
    double v = 0.0;  // V
    double i = 0.0;  // A
};

/// Swept-voltage IV record, ramped up from 0.
struct IVTrace {
    std::vector<IVPoint> points;

    /// Invariants: non-empty, starts at 0 V (+-1 mV), strictly increasing.
    void validate() const;
};

struct SimmonsFit {
    double d = 0.0;     // barrier thickness [m]
    double phi = 0.0;   // barrier height [eV]
    double area = 0.0;  // [m^2], fixed during the fit
    double rss = 0.0;   // on log-current residuals
    bool converged = false;
    bool suspect = false;          // fitted values outside [0.5,5] nm x [0.5,5] eV
    bool ill_conditioned = false;  // Jacobian condition number past threshold
    double condition = 0.0;
};

/// Local barrier thickness [m] and dielectric strength [V/m] maps of equal
/// shape, row-major.
struct BarrierMaps {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> thickness;
    std::vector<double> strength;

    void validate() const;
};

/// Junction resistance from the junction-side voltage of a potential
/// divider: R_J = r_load * v_junction / (v_source - v_junction).
double divider_resistance(double v_source, double v_junction, double r_load);

/// Companion form from the load-side voltage:
/// R_J = r_load * (v_source - v_load) / v_load.
double divider_resistance_from_load(double v_source, double v_load, double r_load);

/// RC low-pass cutoff 1/(2 pi R C) of the readout chain [Hz].
double rc_cutoff(double r_series, double c);

/// Zero-intercept Ohm's-law fit over points with v <= v_window; returns the
/// junction resistance 1/slope. A window beyond the sweep maximum simply
/// uses every point.
double ohmic_fit(const IVTrace& trace, double v_window);

/// Simmons tunneling current through a symmetric rectangular barrier in the
/// intermediate-voltage range (beta = 1):
///   J = e/(2 pi h d^2) * [ pb*exp(-A*sqrt(pb)) - (pb+e|v|)*exp(-A*sqrt(pb+e|v|)) ]
/// with pb = (phi - |v|/2) in joules and A = (4 pi d / h) * sqrt(2 m_e).
/// Returns sign(v) * J * area [A]. Valid for |v| < 2*phi.
double simmons_current(double v, double d, double phi_ev, double area);

/// Fit (d, phi) of the Simmons model to a trace (truncated below breakdown
/// by the caller) with the area fixed. Residuals are taken on log|i| so the
/// decades of tunneling current weigh equally. A descent that hits its
/// iteration cap reports converged = false with the best parameters seen;
/// near-degenerate traces additionally raise ill_conditioned.
SimmonsFit fit_simmons(const IVTrace& trace, double area);

/// First voltage at which the current jumps by more than `jump_factor`
/// between consecutive samples (with the previous sample above 0.2 V, and a
/// 1 pA floor on the denominator), or nullopt for a smooth trace.
std::optional<double> detect_breakdown(const IVTrace& trace, double jump_factor = 5.0);

/// Breakdown voltage of a mapped barrier: min over sites of t(x,y)*E_BD(x,y).
double breakdown_from_maps(const BarrierMaps& maps);

}  // namespace depinner
