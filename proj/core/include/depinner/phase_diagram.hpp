// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "depinner/curve_fit.hpp"
#include "depinner/depinning.hpp"
#include "depinner/self_heating.hpp"

namespace depinner {

/// Outcome of one tuning run: either a log-law fit or a failure time.
struct TuningRecord {
    std::string junction_id;
    RunConditions conditions;
    std::optional<LogFit> fit;
    std::optional<double> t_fail;  // s

    /// Exactly one of fit / t_fail must be present.
    void validate() const;
};

struct PhaseCell {
    std::vector<double> speeds;  // fitted a per surviving junction
    int n_failed = 0;
    int n_total = 0;
    bool underpopulated = false;  // fewer than 3 runs landed here
};

/// Rectilinear (V, T) grid of tuning outcomes at one drive frequency.
/// Cells sit on the axis nodes; cell (iv, it) is at
/// (v_axis[iv], t_axis[it]).
struct PhaseGrid {
    std::vector<double> v_axis;  // ascending [V]
    std::vector<double> t_axis;  // ascending [K]
    double f_drive = 0.0;        // Hz
    std::vector<PhaseCell> cells;  // row-major: index = it * v_axis.size() + iv

    std::size_t index(std::size_t iv, std::size_t it) const {
        return it * v_axis.size() + iv;
    }
    const PhaseCell& cell(std::size_t iv, std::size_t it) const {
        return cells[index(iv, it)];
    }
    void validate() const;
};

/// Assemble a grid from records sharing one drive frequency. Axes are the
/// sorted unique condition values; every (V, T) combination must have at
/// least one record. Cells with fewer than 3 runs are flagged.
PhaseGrid build_grid(const std::vector<TuningRecord>& records, double f_drive);

/// Median speed of a cell, failures excluded; nullopt when every junction
/// in the cell failed.
std::optional<double> cell_speed(const PhaseGrid& grid, std::size_t iv, std::size_t it);

/// Bilinear interpolation of cell medians at (v, t). Throws std::domain_error
/// outside the axes' hull; returns nullopt when a corner of the surrounding
/// patch has no defined median.
std::optional<double> interpolate_speed(const PhaseGrid& grid, double v, double t);

/// Level crossings of the cell-median surface along grid edges
/// (marching-squares edge rule), ordered by temperature then voltage.
/// Edges touching an undefined cell are skipped. (V, T) pairs.
std::vector<std::pair<double, double>> extract_contour(const PhaseGrid& grid,
                                                       double level = 0.01);

/// Ordinary least squares of T against V through the given (V, T) points.
BoundaryLine fit_boundary_line(const std::vector<std::pair<double, double>>& points,
                               double frequency = 0.0);

/// Per-cell failed fraction, same row-major layout as PhaseGrid::cells.
std::vector<double> failure_fraction_map(const PhaseGrid& grid);

/// One grid cell after the self-heating shift; the shared T axis is gone.
struct DeformedCell {
    double v_amp = 0.0;  // V
    double t_set = 0.0;  // K, the original set point
    double t_eff = 0.0;  // K, set point plus Joule heating rise
    std::vector<double> speeds;
    int n_failed = 0;
    int n_total = 0;
};

struct DeformedDiagram {
    double f_drive = 0.0;
    double r_nominal = 0.0;  // ohm
    std::vector<DeformedCell> cells;
};

/// Shift every cell to its self-heated effective temperature. Speeds and
/// failure counts are untouched; only temperatures move (upward).
DeformedDiagram apply_self_heating(const PhaseGrid& grid, double r_nominal,
                                   const HeatParams& heat);

}  // namespace depinner
