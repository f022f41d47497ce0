// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>

#include "depinner/curve_fit.hpp"
#include "depinner/junction_iv.hpp"
#include "depinner/phase_diagram.hpp"

namespace depinner {

// File formats. Numbers are written with shortest round-trip formatting so
// emissions are byte-deterministic and read back to the identical value.
// Temperatures are celsius on disk, kelvin in memory.

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

// Tuning-curve CSV: '#'-prefixed metadata lines (# v_amp_V=, # t_set_C=,
// # f_hz=, # junction=) followed by a `t_s,r_frac` header and rows.
std::string tuning_curve_to_csv(const TuningCurve& curve);
TuningCurve tuning_curve_from_csv(const std::string& text);
void write_tuning_curve_csv(const TuningCurve& curve, const std::filesystem::path& path);
/// Warns on stderr when the first sample is not a plausible normalized start.
TuningCurve read_tuning_curve_csv(const std::filesystem::path& path);

// IV CSV: optional '#' comment lines, `v_V,i_A` header, rows.
std::string iv_trace_to_csv(const IVTrace& trace);
IVTrace iv_trace_from_csv(const std::string& text);
void write_iv_trace_csv(const IVTrace& trace, const std::filesystem::path& path);
IVTrace read_iv_trace_csv(const std::filesystem::path& path);

// Structured-text (JSON) documents with unit-suffixed keys.
std::string phase_grid_to_text(const PhaseGrid& grid);
PhaseGrid phase_grid_from_text(const std::string& text);
void write_phase_grid(const PhaseGrid& grid, const std::filesystem::path& path);
PhaseGrid read_phase_grid(const std::filesystem::path& path);

std::string deformed_to_text(const DeformedDiagram& diagram);
void write_deformed(const DeformedDiagram& diagram, const std::filesystem::path& path);

std::string barrier_maps_to_text(const BarrierMaps& maps);
BarrierMaps barrier_maps_from_text(const std::string& text);
BarrierMaps read_barrier_maps(const std::filesystem::path& path);

std::string contour_to_text(const std::vector<std::pair<double, double>>& points,
                            double level, double f_drive);
/// Returns (V, T[K]) points; accepts documents written by contour_to_text.
std::vector<std::pair<double, double>> contour_from_text(const std::string& text);
std::vector<std::pair<double, double>> read_contour(const std::filesystem::path& path);

// Breakdown-boundary points CSV: `t_set_C,v_bd_V` header; returns (T[K], V) pairs.
std::vector<std::pair<double, double>> breakdown_points_from_csv(const std::string& text);
std::vector<std::pair<double, double>> read_breakdown_points(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace depinner
