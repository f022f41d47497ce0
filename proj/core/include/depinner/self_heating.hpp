// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace depinner {

/// Point-source-in-solid heating model. Defaults are sapphire at room
/// temperature, a 100 nm averaging ball (half the device scale) and the
/// factor-2 semi-infinite correction for a device sitting on top of the
/// substrate.
struct HeatParams {
    double k = 30.0;        // thermal conductivity [W/(m K)]
    double r_max = 100e-9;  // averaging radius [m]
    double semi_infinite_factor = 2.0;
};

/// Time-averaged Joule power of an oscillatory bias across a junction,
/// V_amp^2 / (2 R).
double heating_power(double v_amp, double r);

/// Mean temperature rise of the ball r <= r_max around a point source of
/// power P in an infinite solid, delta T(r) = P/(4 pi k r) volume-averaged
/// to 3P/(8 pi k r_max), then multiplied by the semi-infinite factor.
double mean_temperature_rise(double p, const HeatParams& h);

/// Ambient temperature plus the self-heating rise for the given bias.
double effective_temperature(double t_ambient, double v_amp, double r,
                             const HeatParams& h);

}  // namespace depinner
