// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#include "depinner/self_heating.hpp"

#include <stdexcept>

#include "depinner/constants.hpp"

namespace depinner {

namespace {

void validate(const HeatParams& h) {
    if (!(h.k > 0.0) || !(h.r_max > 0.0) || !(h.semi_infinite_factor >= 1.0)) {
        throw std::invalid_argument(
            "HeatParams: need k > 0, r_max > 0, semi_infinite_factor >= 1");
    }
}

}  // namespace

double heating_power(double v_amp, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("heating_power: R must be positive");
    if (!(v_amp >= 0.0)) throw std::invalid_argument("heating_power: V_amp must be >= 0");
    return v_amp * v_amp / (2.0 * r);
}

double mean_temperature_rise(double p, const HeatParams& h) {
    validate(h);
    if (!(p >= 0.0)) throw std::invalid_argument("mean_temperature_rise: P must be >= 0");
    // The 1/r divergence of the point source is integrable in the volume
    // average; the closed form needs no regularization.
    return h.semi_infinite_factor * 3.0 * p / (8.0 * kPi * h.k * h.r_max);
}

double effective_temperature(double t_ambient, double v_amp, double r,
                             const HeatParams& h) {
    if (!(t_ambient > 0.0)) {
        throw std::invalid_argument("effective_temperature: T_ambient must be positive");
    }
    return t_ambient + mean_temperature_rise(heating_power(v_amp, r), h);
}

}  // namespace depinner
