// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#include "depinner/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "depinner/constants.hpp"

namespace depinner {

namespace {

using ordered_json = nlohmann::ordered_json;

double parse_double(std::string_view s, const char* what) {
    double value = 0.0;
    const auto* begin = s.data();
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw std::runtime_error(std::string("could not parse ") + what + ": '" +
                                 std::string(s) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

struct CsvBody {
    std::vector<std::pair<std::string, std::string>> metadata;  // key, value
    std::vector<std::array<std::string, 2>> rows;
};

/// Shared reader for the two-column CSV dialect: '#' metadata, fixed header.
CsvBody parse_two_column_csv(const std::string& text, const std::string& header) {
    CsvBody body;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        const std::string_view sv = trim(line);
        if (sv.empty()) continue;
        if (sv.front() == '#') {
            std::string_view kv = trim(sv.substr(1));
            const auto eq = kv.find('=');
            if (eq != std::string_view::npos) {
                body.metadata.emplace_back(std::string(trim(kv.substr(0, eq))),
                                           std::string(trim(kv.substr(eq + 1))));
            }
            continue;
        }
        if (!header_seen) {
            if (std::string(sv) != header) {
                throw std::runtime_error("csv: expected header '" + header + "', got '" +
                                         std::string(sv) + "'");
            }
            header_seen = true;
            continue;
        }
        const auto comma = sv.find(',');
        if (comma == std::string_view::npos) {
            throw std::runtime_error("csv: malformed row '" + std::string(sv) + "'");
        }
        body.rows.push_back({std::string(trim(sv.substr(0, comma))),
                             std::string(trim(sv.substr(comma + 1)))});
    }
    if (!header_seen) throw std::runtime_error("csv: missing '" + header + "' header");
    return body;
}

}  // namespace

std::string format_double(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buf, ptr);
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

std::string tuning_curve_to_csv(const TuningCurve& curve) {
    curve.validate();
    std::ostringstream out;
    out << "# v_amp_V=" << format_double(curve.conditions.v_amp) << "\n";
    out << "# t_set_C=" << format_double(kelvin_to_celsius(curve.conditions.t_set)) << "\n";
    out << "# f_hz=" << format_double(curve.conditions.f_drive) << "\n";
    if (!curve.junction_id.empty()) out << "# junction=" << curve.junction_id << "\n";
    out << "t_s,r_frac\n";
    for (const auto& s : curve.samples) {
        out << format_double(s.t) << "," << format_double(s.r) << "\n";
    }
    return out.str();
}

TuningCurve tuning_curve_from_csv(const std::string& text) {
    const CsvBody body = parse_two_column_csv(text, "t_s,r_frac");
    TuningCurve curve;
    for (const auto& [key, value] : body.metadata) {
        if (key == "v_amp_V") {
            curve.conditions.v_amp = parse_double(value, "v_amp_V");
        } else if (key == "t_set_C") {
            curve.conditions.t_set = celsius_to_kelvin(parse_double(value, "t_set_C"));
        } else if (key == "f_hz") {
            curve.conditions.f_drive = parse_double(value, "f_hz");
        } else if (key == "junction") {
            curve.junction_id = value;
        }
        // unknown keys are ignored
    }
    curve.samples.reserve(body.rows.size());
    for (const auto& row : body.rows) {
        curve.samples.push_back({parse_double(row[0], "t_s"), parse_double(row[1], "r_frac")});
    }
    curve.validate();
    return curve;
}

void write_tuning_curve_csv(const TuningCurve& curve, const std::filesystem::path& path) {
    write_text_file(path, tuning_curve_to_csv(curve));
}

TuningCurve read_tuning_curve_csv(const std::filesystem::path& path) {
    TuningCurve curve = tuning_curve_from_csv(read_text_file(path));
    if (!curve.plausible_start()) {
        std::cerr << "depinner: " << path.string()
                  << ": first sample r outside (0, 10]; not a normalized start?\n";
    }
    return curve;
}

std::string iv_trace_to_csv(const IVTrace& trace) {
    trace.validate();
    std::ostringstream out;
    out << "v_V,i_A\n";
    for (const auto& p : trace.points) {
        out << format_double(p.v) << "," << format_double(p.i) << "\n";
    }
    return out.str();
}

IVTrace iv_trace_from_csv(const std::string& text) {
    const CsvBody body = parse_two_column_csv(text, "v_V,i_A");
    IVTrace trace;
    trace.points.reserve(body.rows.size());
    for (const auto& row : body.rows) {
        trace.points.push_back({parse_double(row[0], "v_V"), parse_double(row[1], "i_A")});
    }
    trace.validate();
    return trace;
}

void write_iv_trace_csv(const IVTrace& trace, const std::filesystem::path& path) {
    write_text_file(path, iv_trace_to_csv(trace));
}

IVTrace read_iv_trace_csv(const std::filesystem::path& path) {
    return iv_trace_from_csv(read_text_file(path));
}

std::string phase_grid_to_text(const PhaseGrid& grid) {
    grid.validate();
    ordered_json doc;
    doc["format"] = "depinner-phase-grid";
    doc["f_hz"] = grid.f_drive;
    doc["v_axis_V"] = grid.v_axis;
    ordered_json t_axis = ordered_json::array();
    for (const double t : grid.t_axis) t_axis.push_back(kelvin_to_celsius(t));
    doc["t_axis_C"] = t_axis;
    ordered_json cells = ordered_json::array();
    for (std::size_t it = 0; it < grid.t_axis.size(); ++it) {
        for (std::size_t iv = 0; iv < grid.v_axis.size(); ++iv) {
            const PhaseCell& c = grid.cell(iv, it);
            ordered_json jc;
            jc["iv"] = iv;
            jc["it"] = it;
            jc["n_total"] = c.n_total;
            jc["n_failed"] = c.n_failed;
            jc["a_values"] = c.speeds;
            cells.push_back(std::move(jc));
        }
    }
    doc["cells"] = std::move(cells);
    return doc.dump(2) + "\n";
}

PhaseGrid phase_grid_from_text(const std::string& text) {
    const auto doc = ordered_json::parse(text);
    if (doc.value("format", "") != "depinner-phase-grid") {
        throw std::runtime_error("not a depinner-phase-grid document");
    }
    PhaseGrid grid;
    grid.f_drive = doc.at("f_hz").get<double>();
    grid.v_axis = doc.at("v_axis_V").get<std::vector<double>>();
    for (const auto& c : doc.at("t_axis_C")) {
        grid.t_axis.push_back(celsius_to_kelvin(c.get<double>()));
    }
    grid.cells.resize(grid.v_axis.size() * grid.t_axis.size());
    for (const auto& jc : doc.at("cells")) {
        const auto iv = jc.at("iv").get<std::size_t>();
        const auto it = jc.at("it").get<std::size_t>();
        if (iv >= grid.v_axis.size() || it >= grid.t_axis.size()) {
            throw std::runtime_error("phase grid: cell index outside the axes");
        }
        PhaseCell& cell = grid.cells[grid.index(iv, it)];
        cell.n_total = jc.at("n_total").get<int>();
        cell.n_failed = jc.at("n_failed").get<int>();
        cell.speeds = jc.at("a_values").get<std::vector<double>>();
        cell.underpopulated = cell.n_total < 3;
    }
    grid.validate();
    return grid;
}

void write_phase_grid(const PhaseGrid& grid, const std::filesystem::path& path) {
    write_text_file(path, phase_grid_to_text(grid));
}

PhaseGrid read_phase_grid(const std::filesystem::path& path) {
    return phase_grid_from_text(read_text_file(path));
}

std::string deformed_to_text(const DeformedDiagram& diagram) {
    ordered_json doc;
    doc["format"] = "depinner-deformed-grid";
    doc["f_hz"] = diagram.f_drive;
    doc["r_nominal_ohm"] = diagram.r_nominal;
    ordered_json points = ordered_json::array();
    for (const auto& c : diagram.cells) {
        ordered_json jc;
        jc["v_amp_V"] = c.v_amp;
        jc["t_set_C"] = kelvin_to_celsius(c.t_set);
        jc["t_eff_C"] = kelvin_to_celsius(c.t_eff);
        jc["n_total"] = c.n_total;
        jc["n_failed"] = c.n_failed;
        jc["a_values"] = c.speeds;
        points.push_back(std::move(jc));
    }
    doc["points"] = std::move(points);
    return doc.dump(2) + "\n";
}

void write_deformed(const DeformedDiagram& diagram, const std::filesystem::path& path) {
    write_text_file(path, deformed_to_text(diagram));
}

std::string barrier_maps_to_text(const BarrierMaps& maps) {
    maps.validate();
    ordered_json doc;
    doc["format"] = "depinner-barrier-maps";
    doc["rows"] = maps.rows;
    doc["cols"] = maps.cols;
    ordered_json t = ordered_json::array();
    ordered_json e = ordered_json::array();
    for (const double x : maps.thickness) t.push_back(x * 1e9);        // m -> nm
    for (const double x : maps.strength) e.push_back(x * 1e-9);       // V/m -> V/nm
    doc["thickness_nm"] = std::move(t);
    doc["strength_V_per_nm"] = std::move(e);
    return doc.dump(2) + "\n";
}

BarrierMaps barrier_maps_from_text(const std::string& text) {
    const auto doc = ordered_json::parse(text);
    if (doc.value("format", "") != "depinner-barrier-maps") {
        throw std::runtime_error("not a depinner-barrier-maps document");
    }
    BarrierMaps maps;
    maps.rows = doc.at("rows").get<std::size_t>();
    maps.cols = doc.at("cols").get<std::size_t>();
    for (const auto& x : doc.at("thickness_nm")) {
        maps.thickness.push_back(x.get<double>() * 1e-9);
    }
    for (const auto& x : doc.at("strength_V_per_nm")) {
        maps.strength.push_back(x.get<double>() * 1e9);
    }
    maps.validate();
    return maps;
}

BarrierMaps read_barrier_maps(const std::filesystem::path& path) {
    return barrier_maps_from_text(read_text_file(path));
}

std::string contour_to_text(const std::vector<std::pair<double, double>>& points,
                            double level, double f_drive) {
    ordered_json doc;
    doc["format"] = "depinner-contour";
    doc["f_hz"] = f_drive;
    doc["level"] = level;
    ordered_json arr = ordered_json::array();
    for (const auto& [v, t] : points) {
        ordered_json p;
        p["v_V"] = v;
        p["t_C"] = kelvin_to_celsius(t);
        arr.push_back(std::move(p));
    }
    doc["points"] = std::move(arr);
    return doc.dump(2) + "\n";
}

std::vector<std::pair<double, double>> contour_from_text(const std::string& text) {
    const auto doc = ordered_json::parse(text);
    if (doc.value("format", "") != "depinner-contour") {
        throw std::runtime_error("not a depinner-contour document");
    }
    std::vector<std::pair<double, double>> points;
    for (const auto& p : doc.at("points")) {
        points.emplace_back(p.at("v_V").get<double>(),
                            celsius_to_kelvin(p.at("t_C").get<double>()));
    }
    return points;
}

std::vector<std::pair<double, double>> read_contour(const std::filesystem::path& path) {
    return contour_from_text(read_text_file(path));
}

std::vector<std::pair<double, double>> breakdown_points_from_csv(const std::string& text) {
    const CsvBody body = parse_two_column_csv(text, "t_set_C,v_bd_V");
    std::vector<std::pair<double, double>> points;
    points.reserve(body.rows.size());
    for (const auto& row : body.rows) {
        points.emplace_back(celsius_to_kelvin(parse_double(row[0], "t_set_C")),
                            parse_double(row[1], "v_bd_V"));
    }
    return points;
}

std::vector<std::pair<double, double>> read_breakdown_points(
    const std::filesystem::path& path) {
    return breakdown_points_from_csv(read_text_file(path));
}

}  // namespace depinner
