// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numbers>

namespace depinner {

// Physical constants, SI units (exact SI values where defined, else CODATA 2018).
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C
inline constexpr double kPlanck = 6.62607015e-34;             // J s
inline constexpr double kElectronMass = 9.1093837015e-31;     // kg
inline constexpr double kPi = std::numbers::pi;

// All temperatures are kelvin inside the library; files and CLI flags use
// celsius for set points. Conversions live here so nothing else hardcodes
// the offset.
inline constexpr double kCelsiusOffset = 273.15;

constexpr double celsius_to_kelvin(double c) { return c + kCelsiusOffset; }
constexpr double kelvin_to_celsius(double k) { return k - kCelsiusOffset; }

// eV <-> joule, centralized so every barrier-energy conversion agrees.
constexpr double ev_to_joule(double ev) { return ev * kElementaryCharge; }
constexpr double joule_to_ev(double j) { return j / kElementaryCharge; }

}  // namespace depinner
