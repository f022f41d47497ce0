// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#include "depinner/phase_diagram.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace depinner {

namespace {

std::size_t axis_index(const std::vector<double>& axis, double value, const char* what) {
    const auto it = std::lower_bound(axis.begin(), axis.end(), value);
    if (it == axis.end() || *it != value) {
        throw std::logic_error(std::string("build_grid: lost ") + what + " axis value");
    }
    return static_cast<std::size_t>(it - axis.begin());
}

}  // namespace

void TuningRecord::validate() const {
    if (fit.has_value() == t_fail.has_value()) {
        throw std::invalid_argument(
            "TuningRecord: exactly one of fit / t_fail must be present");
    }
}

void PhaseGrid::validate() const {
    if (v_axis.size() < 2 || t_axis.size() < 2) {
        throw std::invalid_argument("PhaseGrid: axes need at least 2 points each");
    }
    for (std::size_t i = 1; i < v_axis.size(); ++i) {
        if (!(v_axis[i] > v_axis[i - 1])) {
            throw std::invalid_argument("PhaseGrid: v_axis must be strictly ascending");
        }
    }
    for (std::size_t i = 1; i < t_axis.size(); ++i) {
        if (!(t_axis[i] > t_axis[i - 1])) {
            throw std::invalid_argument("PhaseGrid: t_axis must be strictly ascending");
        }
    }
    if (cells.size() != v_axis.size() * t_axis.size()) {
        throw std::invalid_argument("PhaseGrid: cell count does not match axes");
    }
    for (const auto& c : cells) {
        if (c.n_failed > c.n_total ||
            c.speeds.size() != static_cast<std::size_t>(c.n_total - c.n_failed)) {
            throw std::invalid_argument("PhaseGrid: inconsistent cell counts");
        }
    }
}

PhaseGrid build_grid(const std::vector<TuningRecord>& records, double f_drive) {
    if (records.empty()) throw std::invalid_argument("build_grid: no records");

    std::set<double> v_set, t_set;
    for (const auto& rec : records) {
        rec.validate();
        if (rec.conditions.f_drive != f_drive) {
            throw std::invalid_argument("build_grid: record frequency does not match grid");
        }
        v_set.insert(rec.conditions.v_amp);
        t_set.insert(rec.conditions.t_set);
    }

    PhaseGrid grid;
    grid.v_axis.assign(v_set.begin(), v_set.end());
    grid.t_axis.assign(t_set.begin(), t_set.end());
    grid.f_drive = f_drive;
    if (grid.v_axis.size() < 2 || grid.t_axis.size() < 2) {
        throw std::invalid_argument("build_grid: need at least 2 distinct values per axis");
    }
    grid.cells.resize(grid.v_axis.size() * grid.t_axis.size());

    for (const auto& rec : records) {
        const std::size_t iv = axis_index(grid.v_axis, rec.conditions.v_amp, "voltage");
        const std::size_t it = axis_index(grid.t_axis, rec.conditions.t_set, "temperature");
        PhaseCell& cell = grid.cells[grid.index(iv, it)];
        ++cell.n_total;
        if (rec.t_fail) {
            ++cell.n_failed;
        } else {
            cell.speeds.push_back(rec.fit->a);
        }
    }

    for (std::size_t it = 0; it < grid.t_axis.size(); ++it) {
        for (std::size_t iv = 0; iv < grid.v_axis.size(); ++iv) {
            PhaseCell& cell = grid.cells[grid.index(iv, it)];
            if (cell.n_total == 0) {
                throw std::invalid_argument("build_grid: empty (V, T) cell in the grid");
            }
            cell.underpopulated = cell.n_total < 3;
            std::sort(cell.speeds.begin(), cell.speeds.end());
        }
    }
    return grid;
}

std::optional<double> cell_speed(const PhaseGrid& grid, std::size_t iv, std::size_t it) {
    if (iv >= grid.v_axis.size() || it >= grid.t_axis.size()) {
        throw std::out_of_range("cell_speed: cell index outside the grid");
    }
    const auto& speeds = grid.cell(iv, it).speeds;
    if (speeds.empty()) return std::nullopt;
    std::vector<double> sorted(speeds);
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    return n % 2 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

std::optional<double> interpolate_speed(const PhaseGrid& grid, double v, double t) {
    grid.validate();
    if (v < grid.v_axis.front() || v > grid.v_axis.back() ||
        t < grid.t_axis.front() || t > grid.t_axis.back()) {
        throw std::domain_error("interpolate_speed: query outside the grid hull");
    }
    auto patch_index = [](const std::vector<double>& axis, double x) {
        auto idx = static_cast<std::size_t>(
            std::upper_bound(axis.begin(), axis.end(), x) - axis.begin());
        if (idx > 0) --idx;
        return std::min(idx, axis.size() - 2);
    };
    const std::size_t iv = patch_index(grid.v_axis, v);
    const std::size_t it = patch_index(grid.t_axis, t);

    const auto m00 = cell_speed(grid, iv, it);
    const auto m10 = cell_speed(grid, iv + 1, it);
    const auto m01 = cell_speed(grid, iv, it + 1);
    const auto m11 = cell_speed(grid, iv + 1, it + 1);
    if (!m00 || !m10 || !m01 || !m11) return std::nullopt;

    const double fx = (v - grid.v_axis[iv]) / (grid.v_axis[iv + 1] - grid.v_axis[iv]);
    const double fy = (t - grid.t_axis[it]) / (grid.t_axis[it + 1] - grid.t_axis[it]);
    return (1.0 - fy) * ((1.0 - fx) * *m00 + fx * *m10) +
           fy * ((1.0 - fx) * *m01 + fx * *m11);
}

std::vector<std::pair<double, double>> extract_contour(const PhaseGrid& grid,
                                                       double level) {
    grid.validate();
    std::vector<std::pair<double, double>> points;

    auto crossing = [&](double m1, double m2) {
        return (m1 - level) * (m2 - level) < 0.0;
    };

    // Horizontal edges (along V).
    for (std::size_t it = 0; it < grid.t_axis.size(); ++it) {
        for (std::size_t iv = 0; iv + 1 < grid.v_axis.size(); ++iv) {
            const auto m1 = cell_speed(grid, iv, it);
            const auto m2 = cell_speed(grid, iv + 1, it);
            if (!m1 || !m2 || !crossing(*m1, *m2)) continue;
            const double s = (level - *m1) / (*m2 - *m1);
            points.emplace_back(
                grid.v_axis[iv] + s * (grid.v_axis[iv + 1] - grid.v_axis[iv]),
                grid.t_axis[it]);
        }
    }
    // Vertical edges (along T).
    for (std::size_t it = 0; it + 1 < grid.t_axis.size(); ++it) {
        for (std::size_t iv = 0; iv < grid.v_axis.size(); ++iv) {
            const auto m1 = cell_speed(grid, iv, it);
            const auto m2 = cell_speed(grid, iv, it + 1);
            if (!m1 || !m2 || !crossing(*m1, *m2)) continue;
            const double s = (level - *m1) / (*m2 - *m1);
            points.emplace_back(
                grid.v_axis[iv],
                grid.t_axis[it] + s * (grid.t_axis[it + 1] - grid.t_axis[it]));
        }
    }

    std::sort(points.begin(), points.end(),
              [](const auto& a, const auto& b) {
                  return a.second != b.second ? a.second < b.second : a.first < b.first;
              });
    return points;
}

BoundaryLine fit_boundary_line(const std::vector<std::pair<double, double>>& points,
                               double frequency) {
    if (points.size() < 2) {
        throw std::invalid_argument("fit_boundary_line: need at least 2 points");
    }
    double mv = 0.0, mt = 0.0;
    for (const auto& [v, t] : points) {
        mv += v;
        mt += t;
    }
    mv /= static_cast<double>(points.size());
    mt /= static_cast<double>(points.size());
    double svv = 0.0, svt = 0.0;
    for (const auto& [v, t] : points) {
        svv += (v - mv) * (v - mv);
        svt += (v - mv) * (t - mt);
    }
    if (!(svv > 0.0)) {
        throw std::runtime_error("fit_boundary_line: all points share one voltage");
    }
    BoundaryLine line;
    line.slope = svt / svv;
    line.intercept_t = mt - line.slope * mv;
    line.frequency = frequency;
    return line;
}

std::vector<double> failure_fraction_map(const PhaseGrid& grid) {
    grid.validate();
    std::vector<double> out(grid.cells.size());
    for (std::size_t k = 0; k < grid.cells.size(); ++k) {
        out[k] = static_cast<double>(grid.cells[k].n_failed) /
                 static_cast<double>(grid.cells[k].n_total);
    }
    return out;
}

DeformedDiagram apply_self_heating(const PhaseGrid& grid, double r_nominal,
                                   const HeatParams& heat) {
    grid.validate();
    DeformedDiagram out;
    out.f_drive = grid.f_drive;
    out.r_nominal = r_nominal;
    out.cells.reserve(grid.cells.size());
    for (std::size_t it = 0; it < grid.t_axis.size(); ++it) {
        for (std::size_t iv = 0; iv < grid.v_axis.size(); ++iv) {
            const PhaseCell& cell = grid.cell(iv, it);
            DeformedCell d;
            d.v_amp = grid.v_axis[iv];
            d.t_set = grid.t_axis[it];
            d.t_eff = d.t_set +
                      mean_temperature_rise(heating_power(d.v_amp, r_nominal), heat);
            d.speeds = cell.speeds;
            d.n_failed = cell.n_failed;
            d.n_total = cell.n_total;
            out.cells.push_back(std::move(d));
        }
    }
    return out;
}

}  // namespace depinner
