// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

namespace depinner {

/// Transmon Hamiltonian parameters in frequency units (energy/h). Offset
/// charge is fixed at zero; for the E_J/E_C ratios handled here the charge
/// dispersion of the first levels is negligible.
struct TransmonParams {
    double e_c = 0.0;   // charging energy [Hz]
    double e_j = 0.0;   // Josephson energy [Hz]
    int n_charge = 30;  // charge-basis half-width
    int n_levels = 6;   // levels to report
};

/// Transition frequencies f(k -> k+1) in Hz, length n_levels - 1.
struct QuditSpectrum {
    std::vector<double> transitions;
};

/// Diagonalize H = 4 E_C n^2 - E_J cos(phi) in the charge basis
/// (dimension 2*n_charge + 1, tridiagonal: diagonal 4*E_C*k^2, off-diagonal
/// -E_J/2) and return the first n_levels - 1 transition frequencies. The
/// basis is grown (doubled) until doubling moves no transition by more than
/// 1e-9 relative, up to n_charge = 200.
QuditSpectrum spectrum(const TransmonParams& p);

/// Invert the first two transitions to (E_C, E_J) by damped Newton descent,
/// starting from the transmon asymptotics E_C ~ f01 - f12,
/// E_J ~ (f01 + E_C)^2 / (8 E_C). Requires f01 > f12 > 0 (negative
/// anharmonicity); converged when both residuals are below 1 Hz.
TransmonParams infer_ej_ec(double f01, double f12, int n_charge = 30);

/// Measured-minus-predicted transition frequencies, one (k, delta_f) pair
/// per measured transition f(k -> k+1).
std::vector<std::pair<int, double>> harmonic_deviation_report(
    const std::vector<double>& measured, const TransmonParams& p);

}  // namespace depinner
