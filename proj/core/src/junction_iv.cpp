// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#include "depinner/junction_iv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "depinner/constants.hpp"
#include "depinner/least_squares.hpp"

namespace depinner {

namespace {

constexpr double kCurrentFloor = 1e-12;           // A, breakdown ratio denominator
constexpr double kBreakdownGuard = 0.2;           // V, ignore small-signal ratios below
// Full sweeps condition near O(10); ohmic-window-only traces land at 1e4+
// because d and phi act through one combination at small bias.
constexpr double kConditionThreshold = 1e3;       // Jacobian condition flag
constexpr double kSuspectLo = 0.5, kSuspectHi = 5.0;  // nm and eV sanity box

}  // namespace

void IVTrace::validate() const {
    if (points.empty()) throw std::invalid_argument("IVTrace: no points");
    if (std::abs(points.front().v) > 1e-3) {
        throw std::invalid_argument("IVTrace: sweep must start at 0 V (+-1 mV)");
    }
    for (std::size_t k = 1; k < points.size(); ++k) {
        if (!(points[k].v > points[k - 1].v)) {
            throw std::invalid_argument("IVTrace: voltages must be strictly increasing");
        }
    }
}

void BarrierMaps::validate() const {
    if (rows == 0 || cols == 0) throw std::invalid_argument("BarrierMaps: empty maps");
    if (thickness.size() != rows * cols || strength.size() != rows * cols) {
        throw std::invalid_argument("BarrierMaps: map sizes must match rows*cols");
    }
    for (std::size_t k = 0; k < thickness.size(); ++k) {
        if (!(thickness[k] > 0.0) || !(strength[k] > 0.0)) {
            throw std::invalid_argument("BarrierMaps: all entries must be positive");
        }
    }
}

double divider_resistance(double v_source, double v_junction, double r_load) {
    if (!(r_load > 0.0)) throw std::invalid_argument("divider_resistance: r_load must be positive");
    if (!(v_junction > 0.0) || !(v_junction < v_source)) {
        throw std::domain_error("divider_resistance: need 0 < v_junction < v_source");
    }
    return r_load * v_junction / (v_source - v_junction);
}

double divider_resistance_from_load(double v_source, double v_load, double r_load) {
    if (!(r_load > 0.0)) throw std::invalid_argument("divider_resistance: r_load must be positive");
    if (!(v_load > 0.0) || !(v_load < v_source)) {
        throw std::domain_error("divider_resistance: need 0 < v_load < v_source");
    }
    return r_load * (v_source - v_load) / v_load;
}

double rc_cutoff(double r_series, double c) {
    if (!(r_series > 0.0) || !(c > 0.0)) {
        throw std::invalid_argument("rc_cutoff: R and C must be positive");
    }
    return 1.0 / (2.0 * kPi * r_series * c);
}

double ohmic_fit(const IVTrace& trace, double v_window) {
    trace.validate();
    if (!(v_window > 0.0)) throw std::invalid_argument("ohmic_fit: window must be positive");
    double svv = 0.0, svi = 0.0;
    std::size_t used = 0;
    for (const auto& p : trace.points) {
        if (p.v > v_window) break;
        svv += p.v * p.v;
        svi += p.v * p.i;
        ++used;
    }
    if (used < 4) {
        throw std::invalid_argument("ohmic_fit: need at least 4 points inside the window");
    }
    if (!(svv > 0.0)) throw std::runtime_error("ohmic_fit: no nonzero voltages in window");
    const double slope = svi / svv;
    if (!(slope > 0.0)) throw std::runtime_error("ohmic_fit: non-conductive window");
    return 1.0 / slope;
}

double simmons_current(double v, double d, double phi_ev, double area) {
    if (!(d > 0.0) || !(phi_ev > 0.0) || !(area > 0.0)) {
        throw std::invalid_argument("simmons_current: d, phi and area must be positive");
    }
    const double va = std::abs(v);
    if (va >= 2.0 * phi_ev) {
        throw std::domain_error(
            "simmons_current: |v| >= 2*phi leaves the intermediate-voltage range");
    }
    const double pb = ev_to_joule(phi_ev - 0.5 * va);       // mean barrier [J]
    const double ph = pb + kElementaryCharge * va;          // raised side [J]
    const double a_coef = 4.0 * kPi * d * std::sqrt(2.0 * kElectronMass) / kPlanck;
    const double j =
        kElementaryCharge / (2.0 * kPi * kPlanck * d * d) *
        (pb * std::exp(-a_coef * std::sqrt(pb)) - ph * std::exp(-a_coef * std::sqrt(ph)));
    const double current = j * area;
    return v < 0.0 ? -current : current;
}

SimmonsFit fit_simmons(const IVTrace& trace, double area) {
    trace.validate();
    if (!(area > 0.0)) throw std::invalid_argument("fit_simmons: area must be positive");

    std::vector<IVPoint> pts;
    for (const auto& p : trace.points) {
        if (p.v > 0.0 && p.i > 0.0) pts.push_back(p);
    }
    if (pts.size() < 4) {
        throw std::invalid_argument("fit_simmons: need at least 4 points with v > 0, i > 0");
    }

    // Parameters scaled to (nm, eV) so both live near O(1).
    auto residual = [&](const Eigen::VectorXd& q) {
        const double d = q[0] * 1e-9;
        const double phi = q[1];
        Eigen::VectorXd r(static_cast<Eigen::Index>(pts.size()));
        for (std::size_t k = 0; k < pts.size(); ++k) {
            double value;
            if (d > 0.0 && phi > 0.0 && pts[k].v < 2.0 * phi) {
                const double model = simmons_current(pts[k].v, d, phi, area);
                value = model > 0.0 ? std::log(model) - std::log(pts[k].i) : 1e6;
            } else {
                // Finite penalty steers the step back into the valid box.
                value = 1e6;
            }
            r[static_cast<Eigen::Index>(k)] = value;
        }
        return r;
    };

    Eigen::VectorXd init(2);
    init << 1.5, 2.0;  // nm, eV
    const LeastSquaresResult fit = least_squares_fit(residual, init);

    SimmonsFit out;
    out.d = fit.params[0] * 1e-9;
    out.phi = fit.params[1];
    out.area = area;
    out.rss = fit.rss;
    out.converged = fit.converged;
    out.suspect = fit.params[0] < kSuspectLo || fit.params[0] > kSuspectHi ||
                  fit.params[1] < kSuspectLo || fit.params[1] > kSuspectHi;

    // Conditioning of the (d, phi) direction pair at the solution. Small-bias
    // traces leave the two nearly degenerate.
    Eigen::MatrixXd jac(static_cast<Eigen::Index>(pts.size()), 2);
    const Eigen::VectorXd r0 = residual(fit.params);
    for (int j = 0; j < 2; ++j) {
        const double step = std::max(1e-8, 1e-8 * std::abs(fit.params[j]));
        Eigen::VectorXd probe = fit.params;
        probe[j] += step;
        jac.col(j) = (residual(probe) - r0) / step;
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
    const double smin = svd.singularValues().minCoeff();
    out.condition = smin > 0.0 ? svd.singularValues().maxCoeff() / smin
                               : std::numeric_limits<double>::infinity();
    out.ill_conditioned = !(out.condition < kConditionThreshold);
    return out;
}

std::optional<double> detect_breakdown(const IVTrace& trace, double jump_factor) {
    trace.validate();
    if (!(jump_factor > 1.0)) {
        throw std::invalid_argument("detect_breakdown: jump_factor must exceed 1");
    }
    for (std::size_t k = 0; k + 1 < trace.points.size(); ++k) {
        if (trace.points[k].v <= kBreakdownGuard) continue;
        const double denom = std::max(trace.points[k].i, kCurrentFloor);
        if (trace.points[k + 1].i / denom > jump_factor) {
            return trace.points[k + 1].v;
        }
    }
    return std::nullopt;
}

double breakdown_from_maps(const BarrierMaps& maps) {
    maps.validate();
    double v_bd = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < maps.thickness.size(); ++k) {
        v_bd = std::min(v_bd, maps.thickness[k] * maps.strength[k]);
    }
    return v_bd;
}

}  // namespace depinner
