// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#include "depinner/transmon.hpp"

#include <cmath>
#include <stdexcept>

#include "depinner/tridiag.hpp"

namespace depinner {

namespace {

constexpr int kBasisCap = 200;
constexpr double kBasisRelTol = 1e-9;
constexpr double kResidualTolHz = 1.0;

void validate(const TransmonParams& p) {
    if (!(p.e_c > 0.0) || !(p.e_j > 0.0)) {
        throw std::invalid_argument("transmon: E_C and E_J must be positive");
    }
    if (p.n_charge < 10) throw std::invalid_argument("transmon: n_charge must be >= 10");
    if (p.n_levels < 2 || p.n_levels > p.n_charge) {
        throw std::invalid_argument("transmon: need 2 <= n_levels <= n_charge");
    }
}

/// Transitions from one tridiagonal diagonalization at half-width n.
std::vector<double> transitions_at(double e_c, double e_j, int n, int n_levels) {
    const auto dim = static_cast<std::size_t>(2 * n + 1);
    std::vector<double> diag(dim);
    for (int k = -n; k <= n; ++k) {
        diag[static_cast<std::size_t>(k + n)] =
            4.0 * e_c * static_cast<double>(k) * static_cast<double>(k);
    }
    std::vector<double> sub(dim - 1, -0.5 * e_j);
    const std::vector<double> ev = tridiag_eigenvalues(std::move(diag), std::move(sub));

    std::vector<double> out(static_cast<std::size_t>(n_levels - 1));
    for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(n_levels); ++k) {
        out[k] = ev[k + 1] - ev[k];
    }
    return out;
}

bool agrees(const std::vector<double>& a, const std::vector<double>& b) {
    // Near-degenerate transitions (e.g. the +-n splittings of the small-E_J
    // ladder) are judged against the spectrum scale, not their own noise.
    double scale = 0.0;
    for (const double t : b) scale = std::max(scale, std::abs(t));
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (std::abs(a[k] - b[k]) > kBasisRelTol * std::max(std::abs(b[k]), scale)) {
            return false;
        }
    }
    return true;
}

}  // namespace

QuditSpectrum spectrum(const TransmonParams& p) {
    validate(p);
    int n = p.n_charge;
    while (n <= kBasisCap) {
        const auto base = transitions_at(p.e_c, p.e_j, n, p.n_levels);
        const auto doubled = transitions_at(p.e_c, p.e_j, 2 * n, p.n_levels);
        if (agrees(base, doubled)) return QuditSpectrum{base};
        n *= 2;
    }
    throw std::runtime_error("transmon: spectrum not converged at the n_charge = 200 cap");
}

TransmonParams infer_ej_ec(double f01, double f12, int n_charge) {
    if (!(f12 > 0.0) || !(f01 > f12)) {
        throw std::invalid_argument(
            "infer_ej_ec: need f01 > f12 > 0 (transmon-regime anharmonicity)");
    }

    TransmonParams p;
    p.n_charge = n_charge;
    p.n_levels = 3;
    p.e_c = f01 - f12;
    p.e_j = (f01 + p.e_c) * (f01 + p.e_c) / (8.0 * p.e_c);

    struct Residual {
        double r0, r1;
        double norm() const { return std::hypot(r0, r1); }
    };
    auto eval = [&](double e_c, double e_j) {
        TransmonParams q = p;
        q.e_c = e_c;
        q.e_j = e_j;
        const auto t = spectrum(q).transitions;
        return Residual{t[0] - f01, t[1] - f12};
    };

    Residual res = eval(p.e_c, p.e_j);
    constexpr int kMaxIter = 50;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        if (std::abs(res.r0) < kResidualTolHz && std::abs(res.r1) < kResidualTolHz) {
            TransmonParams out = p;
            out.n_levels = 6;
            return out;
        }
        const double hc = 1e-6 * p.e_c;
        const double hj = 1e-6 * p.e_j;
        const Residual rc = eval(p.e_c + hc, p.e_j);
        const Residual rj = eval(p.e_c, p.e_j + hj);
        const double j00 = (rc.r0 - res.r0) / hc, j01 = (rj.r0 - res.r0) / hj;
        const double j10 = (rc.r1 - res.r1) / hc, j11 = (rj.r1 - res.r1) / hj;
        const double det = j00 * j11 - j01 * j10;
        if (det == 0.0) break;
        const double step_c = (-res.r0 * j11 + res.r1 * j01) / det;
        const double step_j = (-j00 * res.r1 + j10 * res.r0) / det;

        double alpha = 1.0;
        bool stepped = false;
        for (int k = 0; k < 30; ++k, alpha *= 0.5) {
            const double e_c = p.e_c + alpha * step_c;
            const double e_j = p.e_j + alpha * step_j;
            if (!(e_c > 0.0) || !(e_j > 0.0)) continue;
            Residual trial{};
            try {
                trial = eval(e_c, e_j);
            } catch (const std::runtime_error&) {
                continue;  // trial left the solvable region; shorten the step
            }
            if (trial.norm() < res.norm()) {
                p.e_c = e_c;
                p.e_j = e_j;
                res = trial;
                stepped = true;
                break;
            }
        }
        if (!stepped) break;
    }
    if (std::abs(res.r0) < kResidualTolHz && std::abs(res.r1) < kResidualTolHz) {
        TransmonParams out = p;
        out.n_levels = 6;
        return out;
    }
    throw std::runtime_error("infer_ej_ec: Newton descent did not reach 1 Hz residuals");
}

std::vector<std::pair<int, double>> harmonic_deviation_report(
    const std::vector<double>& measured, const TransmonParams& p) {
    validate(p);
    if (measured.size() > static_cast<std::size_t>(p.n_levels - 1)) {
        throw std::invalid_argument(
            "harmonic_deviation_report: more measured transitions than reported levels");
    }
    const auto predicted = spectrum(p).transitions;
    std::vector<std::pair<int, double>> out;
    out.reserve(measured.size());
    for (std::size_t k = 0; k < measured.size(); ++k) {
        out.emplace_back(static_cast<int>(k), measured[k] - predicted[k]);
    }
    return out;
}

}  // namespace depinner
