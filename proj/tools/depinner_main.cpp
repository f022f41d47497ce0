// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0
//
// depinner CLI: file-based front end over the library. Every subcommand is a
// thin adapter: read inputs, call the one matching library operation, emit a
// structured-text report. Exit codes: 0 success, 1 usage error, 2 data or
// convergence error.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "depinner/constants.hpp"
#include "depinner/curve_fit.hpp"
#include "depinner/depinning.hpp"
#include "depinner/io.hpp"
#include "depinner/junction_iv.hpp"
#include "depinner/phase_diagram.hpp"
#include "depinner/self_heating.hpp"
#include "depinner/transmon.hpp"
#include "depinner/workbench.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

void emit(const ordered_json& doc, const std::string& out_path) {
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        depinner::write_text_file(out_path, text);
    }
}

ordered_json conditions_json(const depinner::RunConditions& c) {
    ordered_json j;
    j["v_amp_V"] = c.v_amp;
    j["t_set_C"] = depinner::kelvin_to_celsius(c.t_set);
    j["f_hz"] = c.f_drive;
    return j;
}

ordered_json log_fit_json(const depinner::LogFit& fit) {
    ordered_json j;
    j["a"] = fit.a;
    j["c_per_s"] = fit.c;
    j["rss"] = fit.rss;
    j["converged"] = fit.converged;
    j["degenerate_c"] = fit.degenerate_c;
    return j;
}

ordered_json power_fit_json(const depinner::PowerFit& fit) {
    ordered_json j;
    j["a"] = fit.a;
    j["n"] = fit.n;
    j["rss"] = fit.rss;
    j["converged"] = fit.converged;
    return j;
}

std::vector<fs::path> collect_curve_files(const std::vector<std::string>& files,
                                          const std::string& dir) {
    std::vector<fs::path> paths(files.begin(), files.end());
    if (!dir.empty()) {
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.is_regular_file() && entry.path().extension() == ".csv") {
                paths.push_back(entry.path());
            }
        }
    }
    std::sort(paths.begin(), paths.end());
    if (paths.empty()) {
        throw std::runtime_error("no input curve files given");
    }
    return paths;
}

struct HeatFlags {
    double k = 30.0;
    double r_max_nm = 100.0;
    double factor = 2.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--k-w-per-m-k", k, "Substrate thermal conductivity [W/(m K)]")
            ->capture_default_str();
        cmd->add_option("--r-max-nm", r_max_nm, "Averaging radius [nm]")
            ->capture_default_str();
        cmd->add_option("--factor", factor, "Semi-infinite-solid correction factor")
            ->capture_default_str();
    }
    depinner::HeatParams params() const { return {k, r_max_nm * 1e-9, factor}; }
};

// ---------------------------------------------------------------------------
// curve fitting
// ---------------------------------------------------------------------------

void add_fit_curve(CLI::App& app) {
    struct O {
        std::string in, out, model = "log";
    };
    auto opts = std::make_shared<O>();
    CLI::App* cmd = app.add_subcommand("fit-curve", "Fit a tuning curve to the log or power law");
    cmd->add_option("--in", opts->in, "Tuning-curve CSV")->required()->check(CLI::ExistingFile);
    cmd->add_option("--model", opts->model, "Model: log or power")
        ->check(CLI::IsMember({"log", "power"}))
        ->capture_default_str();
    cmd->add_option("--out", opts->out, "Write the report here instead of stdout");
    cmd->callback([opts] {
        const auto curve = depinner::read_tuning_curve_csv(opts->in);
        ordered_json doc;
        doc["command"] = "fit-curve";
        doc["input"] = opts->in;
        doc["junction"] = curve.junction_id;
        doc["conditions"] = conditions_json(curve.conditions);
        doc["model"] = opts->model;
        if (opts->model == "log") {
            doc["fit"] = log_fit_json(depinner::fit_log_model(curve));
        } else {
            doc["fit"] = power_fit_json(depinner::fit_power_model(curve));
        }
        emit(doc, opts->out);
    });
}

void add_compare_fits(CLI::App& app) {
    struct O {
        std::string in, out;
    };
    auto opts = std::make_shared<O>();
    CLI::App* cmd = app.add_subcommand("compare-fits", "Fit both tuning laws and pick the better");
    cmd->add_option("--in", opts->in, "Tuning-curve CSV")->required()->check(CLI::ExistingFile);
    cmd->add_option("--out", opts->out, "Write the report here instead of stdout");
    cmd->callback([opts] {
        const auto curve = depinner::read_tuning_curve_csv(opts->in);
        const auto cmp = depinner::compare_models(curve);
        ordered_json doc;
        doc["command"] = "compare-fits";
        doc["input"] = opts->in;
        doc["junction"] = curve.junction_id;
        doc["log"] = log_fit_json(cmp.log_fit);
        doc["power"] = power_fit_json(cmp.power_fit);
        doc["preferred"] =
            cmp.preferred == depinner::ModelComparison::Preferred::Log ? "log" : "power";
        emit(doc, opts->out);
    });
}

// ---------------------------------------------------------------------------
// phase diagram
// ---------------------------------------------------------------------------

void add_phase_grid(CLI::App& app) {
    struct O {
        std::vector<std::string> files;
        std::string dir, out;
        double f_drive = 0.0;
        double cutoff = depinner::kFailureCutoffSeconds;
        double collapse = 0.1;
    };
    auto opts = std::make_shared<O>();
    CLI::App* cmd = app.add_subcommand(
        "phase-grid", "Build a (V, T) phase grid from tuning-curve CSVs");
    cmd->add_option("curves", opts->files, "Tuning-curve CSV files");
    cmd->add_option("--curves-dir", opts->dir, "Directory of tuning-curve CSVs")
        ->check(CLI::ExistingDirectory);
    cmd->add_option("--f-hz", opts->f_drive, "Drive frequency the grid belongs to")->required();
    cmd->add_option("--failure-cutoff-s", opts->cutoff, "Failure counting cutoff [s]")
        ->capture_default_str();
    cmd->add_option("--collapse-fraction", opts->collapse, "Failure threshold on r")
        ->capture_default_str();
    cmd->add_option("--out", opts->out, "Write the grid here instead of stdout");
    cmd->callback([opts] {
        std::vector<depinner::TuningRecord> records;
        for (const auto& path : collect_curve_files(opts->files, opts->dir)) {
            records.push_back(depinner::record_from_curve(
                depinner::read_tuning_curve_csv(path), opts->cutoff, opts->collapse));
        }
        const auto grid = depinner::build_grid(records, opts->f_drive);
        const std::string text = depinner::phase_grid_to_text(grid);
        if (opts->out.empty()) {
            std::cout << text;
        } else {
            depinner::write_text_file(opts->out, text);
        }
    });
}

void add_contour(CLI::App& app) {
    struct O {
        std::string grid, out;
        double level = 0.01;
    };
    auto opts = std::make_shared<O>();
    CLI::App* cmd = app.add_subcommand("contour", "Extract a speed-level contour from a grid");
    cmd->add_option("--grid", opts->grid, "Phase-grid document")->required()->check(CLI::ExistingFile);
    cmd->add_option("--level", opts->level, "Speed level to trace")->capture_default_str();
    cmd->add_option("--out", opts->out, "Write the contour here instead of stdout");
    cmd->callback([opts] {
        const auto grid = depinner::read_phase_grid(opts->grid);
        const auto points = depinner::extract_contour(grid, opts->level);
        const std::string text = depinner::contour_to_text(points, opts->level, grid.f_drive);
        if (opts->out.empty()) {
            std::cout << text;
        } else {
            depinner::write_text_file(opts->out, text);
        }
    });
}

void add_boundary_line(CLI::App& app) {
    struct O {
        std::string contour, out;
    };
    auto opts = std::make_shared<O>();
    CLI::App* cmd = app.add_subcommand("boundary-line", "Fit a straight line to a contour");
    cmd->add_option("--contour", opts->contour, "Contour document")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", opts->out, "Write the report here instead of stdout");
    cmd->callback([opts] {
        const std::string text = depinner::read_text_file(opts->contour);
        const auto points = depinner::contour_from_text(text);
        const double f_hz = ordered_json::parse(text).value("f_hz", 0.0);
        const auto line = depinner::fit_boundary_line(points, f_hz);
        ordered_json doc;
        doc["command"] = "boundary-line";
        doc["n_points"] = points.size();
        doc["slope_K_per_V"] = line.slope;
        doc["intercept_K"] = line.intercept_t;
        doc["f_hz"] = line.frequency;
        emit(doc, opts->out);
    });
}

void add_fit_breakdown_boundary(CLI::App& app) {
    struct O {
        std::string points, out;
        double mu = 1.0;
    };
    auto opts = std::make_shared<O>();
    CLI::App* cmd = app.add_subcommand(
        "fit-breakdown-boundary", "Fit the depinning boundary law to DC breakdown points");
    cmd->add_option("--points", opts->points, "CSV with header t_set_C,v_bd_V")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--mu", opts->mu, "Boundary exponent")->capture_default_str();
    cmd->add_option("--out", opts->out, "Write the report here instead of stdout");
    cmd->callback([opts] {
        const auto points = depinner::read_breakdown_points(opts->points);
        const auto fit = depinner::fit_depinning_boundary(points, opts->mu);
        ordered_json doc;
        doc["command"] = "fit-breakdown-boundary";
        doc["n_points"] = points.size();
        doc["tp_K"] = fit.params.t_p;
        doc["vth_V"] = fit.params.v_th;
        doc["mu"] = fit.params.mu;
        doc["rss_K2"] = fit.rss;
        doc["converged"] = fit.converged;
        doc["degenerate"] = fit.degenerate;
        emit(doc, opts->out);
    });
}

void add_classify(CLI::App& app) {
    struct O {
        double v = 0.0, t_c = 0.0, f = 0.0;
        double tp = 0.0, vth = 0.0, mu = 1.0, tau = 0.0;
        std::string out;
    };
    auto opts = std::make_shared<O>();
    CLI::App* cmd = app.add_subcommand("classify", "Regime of a (V, T) point under a drive");
    cmd->add_option("--v-amp-v", opts->v, "Drive amplitude [V]")->required();
    cmd->add_option("--t-c", opts->t_c, "Temperature [C]")->required();
    cmd->add_option("--f-hz", opts->f, "Drive frequency [Hz]; 0 means DC")
        ->capture_default_str();
    cmd->add_option("--tp-k", opts->tp, "Depinning temperature T_P [K]")->required();
    cmd->add_option("--vth-v", opts->vth, "Threshold voltage V_th [V]")->required();
    cmd->add_option("--mu", opts->mu, "Boundary exponent")->capture_default_str();
    cmd->add_option("--tau-s", opts->tau, "Hop timescale [s]; required for AC drive");
    cmd->add_option("--out", opts->out, "Write the report here instead of stdout");
    cmd->callback([opts] {
        const depinner::DepinningParams p{opts->tp, opts->vth, opts->mu, opts->tau};
        const double t_k = depinner::celsius_to_kelvin(opts->t_c);
        const double omega0 = 2.0 * depinner::kPi * opts->f;
        const auto regime = depinner::classify_point(opts->v, t_k, omega0, p);
        ordered_json doc;
        doc["command"] = "classify";
        doc["v_amp_V"] = opts->v;
        doc["t_C"] = opts->t_c;
        doc["f_hz"] = opts->f;
        doc["regime"] = depinner::to_string(regime);
        if (opts->v <= p.v_th) {
            doc["running_boundary_C"] = depinner::kelvin_to_celsius(
                depinner::depinning_temperature(opts->v, p));
            if (omega0 > 0.0) {
                doc["creep_boundary_C"] = depinner::kelvin_to_celsius(
                    depinner::creep_temperature(opts->v, p, omega0));
            }
        }
        emit(doc, opts->out);
    });
}

// ---------------------------------------------------------------------------
// self heating
// ---------------------------------------------------------------------------

void add_self_heat(CLI::App& app) {
    struct O {
        double v = 0.0, r = 0.0;
        double t_ambient_c = 0.0;
        bool has_ambient = false;
        HeatFlags heat;
        std::string out;
    };
    auto opts = std::make_shared<O>();
    CLI::App* cmd = app.add_subcommand("self-heat", "Joule power and mean temperature rise");
    cmd->add_option("--v-amp-v", opts->v, "Drive amplitude [V]")->required();
    cmd->add_option("--r-ohm", opts->r, "Nominal junction resistance [ohm]")->required();
    opts->heat.attach(cmd);
    auto* amb = cmd->add_option("--t-ambient-c", opts->t_ambient_c,
                                "Ambient temperature [C]; adds t_eff_C to the report");
    cmd->add_option("--out", opts->out, "Write the report here instead of stdout");
    cmd->callback([opts, amb] {
        const auto heat = opts->heat.params();
        const double power = depinner::heating_power(opts->v, opts->r);
        const double rise = depinner::mean_temperature_rise(power, heat);
        ordered_json doc;
        doc["command"] = "self-heat";
        doc["v_amp_V"] = opts->v;
        doc["r_ohm"] = opts->r;
        doc["power_W"] = power;
        doc["delta_t_K"] = rise;
        if (amb->count() > 0) {
            const double t_eff = depinner::effective_temperature(
                depinner::celsius_to_kelvin(opts->t_ambient_c), opts->v, opts->r, heat);
            doc["t_ambient_C"] = opts->t_ambient_c;
            doc["t_eff_C"] = depinner::kelvin_to_celsius(t_eff);
        }
        emit(doc, opts->out);
    });
}

void add_deform_grid(CLI::App& app) {
    struct O {
        std::string grid, out;
        double r = 0.0;
        HeatFlags heat;
    };
    auto opts = std::make_shared<O>();
    CLI::App* cmd = app.add_subcommand(
        "deform-grid", "Shift a phase grid to self-heated effective temperatures");
    cmd->add_option("--grid", opts->grid, "Phase-grid document")->required()->check(CLI::ExistingFile);
    cmd->add_option("--r-ohm", opts->r, "Nominal junction resistance [ohm]")->required();
    opts->heat.attach(cmd);
    cmd->add_option("--out", opts->out, "Write the deformed diagram here instead of stdout");
    cmd->callback([opts] {
        const auto grid = depinner::read_phase_grid(opts->grid);
        const auto deformed = depinner::apply_self_heating(grid, opts->r, opts->heat.params());
        const std::string text = depinner::deformed_to_text(deformed);
        if (opts->out.empty()) {
            std::cout << text;
        } else {
            depinner::write_text_file(opts->out, text);
        }
    });
}

// ---------------------------------------------------------------------------
// junction IV
// ---------------------------------------------------------------------------

void add_simmons_fit(CLI::App& app) {
    struct O {
        std::string in, out;
        double area_nm2 = 8.86e4;
        double jump_factor = 5.0;
        bool no_truncate = false;
    };
    auto opts = std::make_shared<O>();
    CLI::App* cmd = app.add_subcommand("simmons-fit", "Fit an IV trace to the Simmons model");
    cmd->add_option("--in", opts->in, "IV CSV")->required()->check(CLI::ExistingFile);
    cmd->add_option("--area-nm2", opts->area_nm2, "Junction area [nm^2], held fixed")
        ->capture_default_str();
    cmd->add_option("--jump-factor", opts->jump_factor,
                    "Breakdown jump ratio used for truncation")
        ->capture_default_str();
    cmd->add_flag("--no-truncate", opts->no_truncate,
                  "Fit the full trace even past a detected breakdown");
    cmd->add_option("--out", opts->out, "Write the report here instead of stdout");
    cmd->callback([opts] {
        auto trace = depinner::read_iv_trace_csv(opts->in);
        const auto v_bd = depinner::detect_breakdown(trace, opts->jump_factor);
        if (v_bd && !opts->no_truncate) {
            std::erase_if(trace.points, [&](const depinner::IVPoint& p) {
                return p.v >= *v_bd;
            });
        }
        const auto fit = depinner::fit_simmons(trace, opts->area_nm2 * 1e-18);
        ordered_json doc;
        doc["command"] = "simmons-fit";
        doc["input"] = opts->in;
        doc["d_nm"] = fit.d * 1e9;
        doc["phi_eV"] = fit.phi;
        doc["area_nm2"] = opts->area_nm2;
        doc["rss_log"] = fit.rss;
        doc["converged"] = fit.converged;
        doc["suspect"] = fit.suspect;
        doc["ill_conditioned"] = fit.ill_conditioned;
        doc["condition"] = fit.condition;
        if (v_bd) {
            doc["v_bd_V"] = *v_bd;
        } else {
            doc["v_bd_V"] = nullptr;
        }
        emit(doc, opts->out);
    });
}

void add_ohmic_fit(CLI::App& app) {
    struct O {
        std::string in, out;
        double window = 0.05;
    };
    auto opts = std::make_shared<O>();
    CLI::App* cmd = app.add_subcommand("ohmic-fit", "Ohm's-law resistance over a small-bias window");
    cmd->add_option("--in", opts->in, "IV CSV")->required()->check(CLI::ExistingFile);
    cmd->add_option("--v-window-v", opts->window, "Fit window [V]")->capture_default_str();
    cmd->add_option("--out", opts->out, "Write the report here instead of stdout");
    cmd->callback([opts] {
        const auto trace = depinner::read_iv_trace_csv(opts->in);
        ordered_json doc;
        doc["command"] = "ohmic-fit";
        doc["input"] = opts->in;
        doc["v_window_V"] = opts->window;
        doc["r_ohm"] = depinner::ohmic_fit(trace, opts->window);
        emit(doc, opts->out);
    });
}

void add_detect_breakdown(CLI::App& app) {
    struct O {
        std::string in, out;
        double jump_factor = 5.0;
    };
    auto opts = std::make_shared<O>();
    CLI::App* cmd = app.add_subcommand("detect-breakdown", "Locate the breakdown jump in an IV trace");
    cmd->add_option("--in", opts->in, "IV CSV")->required()->check(CLI::ExistingFile);
    cmd->add_option("--jump-factor", opts->jump_factor, "Consecutive-sample current ratio")
        ->capture_default_str();
    cmd->add_option("--out", opts->out, "Write the report here instead of stdout");
    cmd->callback([opts] {
        const auto trace = depinner::read_iv_trace_csv(opts->in);
        const auto v_bd = depinner::detect_breakdown(trace, opts->jump_factor);
        ordered_json doc;
        doc["command"] = "detect-breakdown";
        doc["input"] = opts->in;
        if (v_bd) {
            doc["v_bd_V"] = *v_bd;
        } else {
            doc["v_bd_V"] = nullptr;
        }
        emit(doc, opts->out);
    });
}

void add_breakdown_map(CLI::App& app) {
    struct O {
        std::string maps, out;
    };
    auto opts = std::make_shared<O>();
    CLI::App* cmd = app.add_subcommand(
        "breakdown-map", "Breakdown voltage from thickness and strength maps");
    cmd->add_option("--maps", opts->maps, "Barrier-maps document")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", opts->out, "Write the report here instead of stdout");
    cmd->callback([opts] {
        const auto maps = depinner::read_barrier_maps(opts->maps);
        ordered_json doc;
        doc["command"] = "breakdown-map";
        doc["rows"] = maps.rows;
        doc["cols"] = maps.cols;
        doc["v_bd_V"] = depinner::breakdown_from_maps(maps);
        emit(doc, opts->out);
    });
}

// ---------------------------------------------------------------------------
// transmon
// ---------------------------------------------------------------------------

ordered_json spectrum_json(const depinner::TransmonParams& p) {
    const auto spec = depinner::spectrum(p);
    ordered_json doc;
    doc["ec_MHz"] = p.e_c * 1e-6;
    doc["ej_GHz"] = p.e_j * 1e-9;
    doc["n_charge"] = p.n_charge;
    ordered_json transitions = ordered_json::array();
    for (const double f : spec.transitions) transitions.push_back(f * 1e-9);
    doc["transitions_GHz"] = std::move(transitions);
    doc["f01_GHz"] = spec.transitions[0] * 1e-9;
    doc["anharmonicity_MHz"] = (spec.transitions[1] - spec.transitions[0]) * 1e-6;
    return doc;
}

void add_transmon_spectrum(CLI::App& app) {
    struct O {
        double ec_mhz = 0.0, ej_ghz = 0.0;
        int n_charge = 30, n_levels = 6;
        std::string out;
    };
    auto opts = std::make_shared<O>();
    CLI::App* cmd = app.add_subcommand("transmon-spectrum",
                                       "Charge-basis transition frequencies of a transmon");
    cmd->add_option("--ec-mhz", opts->ec_mhz, "Charging energy [MHz]")->required();
    cmd->add_option("--ej-ghz", opts->ej_ghz, "Josephson energy [GHz]")->required();
    cmd->add_option("--n-charge", opts->n_charge, "Charge-basis half-width")
        ->capture_default_str();
    cmd->add_option("--n-levels", opts->n_levels, "Levels to report")->capture_default_str();
    cmd->add_option("--out", opts->out, "Write the report here instead of stdout");
    cmd->callback([opts] {
        const depinner::TransmonParams p{opts->ec_mhz * 1e6, opts->ej_ghz * 1e9,
                                         opts->n_charge, opts->n_levels};
        ordered_json doc;
        doc["command"] = "transmon-spectrum";
        doc.update(spectrum_json(p));
        emit(doc, opts->out);
    });
}

void add_infer_ejec(CLI::App& app) {
    struct O {
        double f01_ghz = 0.0, f12_ghz = 0.0;
        int n_charge = 30;
        std::string out;
    };
    auto opts = std::make_shared<O>();
    CLI::App* cmd = app.add_subcommand("infer-ejec",
                                       "Infer (E_C, E_J) from the first two transitions");
    cmd->add_option("--f01-ghz", opts->f01_ghz, "f(0->1) [GHz]")->required();
    cmd->add_option("--f12-ghz", opts->f12_ghz, "f(1->2) [GHz]")->required();
    cmd->add_option("--n-charge", opts->n_charge, "Charge-basis half-width")
        ->capture_default_str();
    cmd->add_option("--out", opts->out, "Write the report here instead of stdout");
    cmd->callback([opts] {
        const auto p =
            depinner::infer_ej_ec(opts->f01_ghz * 1e9, opts->f12_ghz * 1e9, opts->n_charge);
        ordered_json doc;
        doc["command"] = "infer-ejec";
        doc["f01_GHz"] = opts->f01_ghz;
        doc["f12_GHz"] = opts->f12_ghz;
        doc["ec_MHz"] = p.e_c * 1e-6;
        doc["ej_GHz"] = p.e_j * 1e-9;
        doc["ej_over_ec"] = p.e_j / p.e_c;
        emit(doc, opts->out);
    });
}

std::vector<double> read_transition_csv(const std::string& path) {
    std::istringstream in(depinner::read_text_file(path));
    std::string line;
    std::vector<double> out;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::string t = line;
        if (!t.empty() && t.back() == '\r') t.pop_back();
        if (!header_seen) {
            if (t != "f_ghz") throw std::runtime_error("expected header 'f_ghz'");
            header_seen = true;
            continue;
        }
        out.push_back(std::stod(t));
    }
    if (!header_seen) throw std::runtime_error("expected header 'f_ghz'");
    return out;
}

void add_harmonics_report(CLI::App& app) {
    struct O {
        std::vector<double> measured_ghz;
        std::string csv, out;
        double ec_mhz = 0.0, ej_ghz = 0.0;
        int n_charge = 30, n_levels = 6;
    };
    auto opts = std::make_shared<O>();
    CLI::App* cmd = app.add_subcommand(
        "harmonics-report",
        "Measured-minus-predicted transition frequencies across the qudit levels");
    auto* inline_opt = cmd->add_option("--measured-ghz", opts->measured_ghz,
                                       "Measured transitions f(k->k+1) [GHz], ascending k")
                           ->delimiter(',');
    auto* csv_opt = cmd->add_option("--measured-csv", opts->csv,
                                    "CSV with a single f_ghz column instead of --measured-ghz")
                        ->check(CLI::ExistingFile)
                        ->excludes(inline_opt);
    auto* ec_opt = cmd->add_option("--ec-mhz", opts->ec_mhz,
                                   "Charging energy [MHz]; inferred from f01, f12 when omitted");
    auto* ej_opt = cmd->add_option("--ej-ghz", opts->ej_ghz, "Josephson energy [GHz]")
                       ->needs(ec_opt);
    ec_opt->needs(ej_opt);
    cmd->add_option("--n-charge", opts->n_charge, "Charge-basis half-width")
        ->capture_default_str();
    cmd->add_option("--n-levels", opts->n_levels, "Levels to report")->capture_default_str();
    cmd->add_option("--out", opts->out, "Write the report here instead of stdout");
    cmd->callback([opts, csv_opt, ec_opt] {
        std::vector<double> measured_hz;
        if (csv_opt->count() > 0) {
            for (const double f : read_transition_csv(opts->csv)) measured_hz.push_back(f * 1e9);
        } else {
            for (const double f : opts->measured_ghz) measured_hz.push_back(f * 1e9);
        }
        if (measured_hz.empty()) {
            throw CLI::ValidationError("harmonics-report",
                                       "need --measured-ghz or --measured-csv");
        }

        depinner::TransmonParams p;
        bool inferred = false;
        if (ec_opt->count() > 0) {
            p = {opts->ec_mhz * 1e6, opts->ej_ghz * 1e9, opts->n_charge, opts->n_levels};
        } else {
            if (measured_hz.size() < 2) {
                throw CLI::ValidationError(
                    "harmonics-report", "inference needs at least f01 and f12");
            }
            p = depinner::infer_ej_ec(measured_hz[0], measured_hz[1], opts->n_charge);
            p.n_levels = opts->n_levels;
            inferred = true;
        }

        const auto predicted = depinner::spectrum(p).transitions;
        const auto deviations = depinner::harmonic_deviation_report(measured_hz, p);
        ordered_json doc;
        doc["command"] = "harmonics-report";
        doc["ec_MHz"] = p.e_c * 1e-6;
        doc["ej_GHz"] = p.e_j * 1e-9;
        doc["inferred_from_f01_f12"] = inferred;
        ordered_json rows = ordered_json::array();
        for (const auto& [k, delta] : deviations) {
            ordered_json row;
            row["transition"] = "f" + std::to_string(k) + std::to_string(k + 1);
            row["measured_GHz"] = measured_hz[static_cast<std::size_t>(k)] * 1e-9;
            row["predicted_GHz"] = predicted[static_cast<std::size_t>(k)] * 1e-9;
            row["delta_MHz"] = delta * 1e-6;
            rows.push_back(std::move(row));
        }
        doc["deviations"] = std::move(rows);
        emit(doc, opts->out);
    });
}

// ---------------------------------------------------------------------------
// depinning utilities
// ---------------------------------------------------------------------------

void add_estimate_tau(CLI::App& app) {
    struct O {
        double f_low = 0.0, f_high = 0.0, i_low = 0.0, i_high = 0.0;
        std::string out;
    };
    auto opts = std::make_shared<O>();
    CLI::App* cmd = app.add_subcommand(
        "estimate-tau", "Hop timescale from boundary-line intercepts at two frequencies");
    cmd->add_option("--f-low", opts->f_low, "Lower drive frequency [Hz]")->required();
    cmd->add_option("--f-high", opts->f_high, "Higher drive frequency [Hz]")->required();
    cmd->add_option("--intercept-low", opts->i_low, "Boundary intercept at f-low [K]")->required();
    cmd->add_option("--intercept-high", opts->i_high, "Boundary intercept at f-high [K]")
        ->required();
    cmd->add_option("--out", opts->out, "Write the report here instead of stdout");
    cmd->callback([opts] {
        const auto est =
            depinner::estimate_tau(opts->f_low, opts->f_high, opts->i_low, opts->i_high);
        ordered_json doc;
        doc["command"] = "estimate-tau";
        doc["f_low_hz"] = opts->f_low;
        doc["f_high_hz"] = opts->f_high;
        doc["intercept_low_K"] = opts->i_low;
        doc["intercept_high_K"] = opts->i_high;
        doc["tau_s"] = est.tau;
        doc["adiabatic"] = est.adiabatic;
        emit(doc, opts->out);
    });
}

// ---------------------------------------------------------------------------
// synthetic data
// ---------------------------------------------------------------------------

void add_synth(CLI::App& app) {
    struct O {
        double a = 0.0, c = 1.0, duration = 150.0, noise = 0.0;
        int n_samples = 200;
        std::uint64_t seed = depinner::kDefaultSeed;
        double v_amp = 0.0, t_c = 25.0, f = 0.0;
        std::string junction, out;
    };
    auto opts = std::make_shared<O>();
    CLI::App* cmd = app.add_subcommand("synth", "Generate a synthetic log-law tuning curve");
    cmd->add_option("--a", opts->a, "Speed parameter")->required();
    cmd->add_option("--c", opts->c, "Time-scale parameter [1/s]")->capture_default_str();
    cmd->add_option("--duration-s", opts->duration, "Run duration [s]")->capture_default_str();
    cmd->add_option("--n-samples", opts->n_samples, "Samples (log-spaced)")->capture_default_str();
    cmd->add_option("--noise", opts->noise, "Relative multiplicative noise")->capture_default_str();
    cmd->add_option("--seed", opts->seed, "RNG seed")
        ->envname("DEPINNER_SEED")
        ->capture_default_str();
    cmd->add_option("--v-amp-v", opts->v_amp, "Recorded drive amplitude [V]")->capture_default_str();
    cmd->add_option("--t-c", opts->t_c, "Recorded set temperature [C]")->capture_default_str();
    cmd->add_option("--f-hz", opts->f, "Recorded drive frequency [Hz]")->capture_default_str();
    cmd->add_option("--junction", opts->junction, "Junction label");
    cmd->add_option("--out", opts->out, "Output CSV path")->required();
    cmd->callback([opts] {
        auto curve = depinner::synth_tuning_curve(opts->a, opts->c, opts->duration,
                                                  opts->n_samples, opts->noise, opts->seed);
        curve.conditions = {opts->v_amp, depinner::celsius_to_kelvin(opts->t_c), opts->f};
        curve.junction_id = opts->junction;
        depinner::write_tuning_curve_csv(curve, opts->out);
        ordered_json doc;
        doc["command"] = "synth";
        doc["out"] = opts->out;
        doc["n_samples"] = opts->n_samples;
        doc["seed"] = opts->seed;
        emit(doc, "");
    });
}

void add_simulate_campaign(CLI::App& app) {
    struct O {
        std::vector<double> v_values, t_values_c;
        double f = 103.0, tp = 0.0, vth = 0.0, mu = 1.0, tau = 0.0;
        double speed_scale = 5e-4, noise = 0.0, duration = 150.0;
        int per_cell = 3, samples = 64;
        std::uint64_t seed = depinner::kDefaultSeed;
        std::string out_dir;
    };
    auto opts = std::make_shared<O>();
    CLI::App* cmd = app.add_subcommand("simulate-campaign",
                                       "Simulate a tuning campaign over a (V, T) grid");
    cmd->add_option("--v-values", opts->v_values, "Voltage amplitudes [V]")
        ->required()
        ->delimiter(',');
    cmd->add_option("--t-values-c", opts->t_values_c, "Set temperatures [C]")
        ->required()
        ->delimiter(',');
    cmd->add_option("--f-hz", opts->f, "Drive frequency [Hz]")->capture_default_str();
    cmd->add_option("--junctions-per-cell", opts->per_cell, "Junctions per cell")
        ->capture_default_str();
    cmd->add_option("--tp-k", opts->tp, "Depinning temperature T_P [K]")->required();
    cmd->add_option("--vth-v", opts->vth, "Threshold voltage V_th [V]")->required();
    cmd->add_option("--mu", opts->mu, "Boundary exponent")->capture_default_str();
    cmd->add_option("--tau-s", opts->tau, "Hop timescale [s]")->required();
    cmd->add_option("--speed-scale", opts->speed_scale, "Creep speed per K past the boundary")
        ->capture_default_str();
    cmd->add_option("--noise", opts->noise, "Relative curve noise")->capture_default_str();
    cmd->add_option("--duration-s", opts->duration, "Run duration [s]")->capture_default_str();
    cmd->add_option("--samples-per-curve", opts->samples, "Samples per curve")
        ->capture_default_str();
    cmd->add_option("--seed", opts->seed, "Campaign seed")
        ->envname("DEPINNER_SEED")
        ->capture_default_str();
    cmd->add_option("--out-dir", opts->out_dir, "Directory for the emitted curve CSVs")
        ->required();
    cmd->callback([opts] {
        depinner::CampaignSpec spec;
        spec.v_values = opts->v_values;
        for (const double c : opts->t_values_c) {
            spec.t_values.push_back(depinner::celsius_to_kelvin(c));
        }
        spec.f_drive = opts->f;
        spec.junctions_per_cell = opts->per_cell;
        spec.depinning = {opts->tp, opts->vth, opts->mu, opts->tau};
        spec.speed_scale = opts->speed_scale;
        spec.noise = opts->noise;
        spec.seed = opts->seed;
        spec.duration = opts->duration;
        spec.samples_per_curve = opts->samples;

        const auto runs = depinner::simulate_campaign(spec);
        fs::create_directories(opts->out_dir);
        int n_failed = 0;
        for (const auto& run : runs) {
            depinner::write_tuning_curve_csv(
                run.curve, fs::path(opts->out_dir) / (run.curve.junction_id + ".csv"));
            if (run.failed) ++n_failed;
        }
        ordered_json doc;
        doc["command"] = "simulate-campaign";
        doc["out_dir"] = opts->out_dir;
        doc["n_runs"] = runs.size();
        doc["n_failed"] = n_failed;
        doc["seed"] = opts->seed;
        emit(doc, "");
    });
}

void add_simulate_target(CLI::App& app) {
    struct O {
        double start_r = 5000.0, target = 0.3;
        double a = depinner::kOvershootPresetA;
        double ln_c = depinner::kOvershootPresetLnC;
        double rate = depinner::kOvershootPresetRate;
        std::string out, curve_out;
    };
    auto opts = std::make_shared<O>();
    CLI::App* cmd = app.add_subcommand(
        "simulate-target", "Tune toward a target fraction, then drift through settling");
    cmd->add_option("--start-r-ohm", opts->start_r, "Starting resistance [ohm]")
        ->capture_default_str();
    cmd->add_option("--target-fraction", opts->target, "Fractional tuning target")
        ->capture_default_str();
    cmd->add_option("--a", opts->a, "Log-law speed parameter")->capture_default_str();
    cmd->add_option("--ln-c", opts->ln_c, "ln of the log-law c parameter")->capture_default_str();
    cmd->add_option("--overshoot-rate", opts->rate, "Post-target drift per log-second")
        ->capture_default_str();
    cmd->add_option("--curve-out", opts->curve_out, "Also write the trajectory CSV here");
    cmd->add_option("--out", opts->out, "Write the report here instead of stdout");
    cmd->callback([opts] {
        const auto run = depinner::simulate_targeted_run(
            opts->start_r, opts->target, opts->a, std::exp(opts->ln_c), opts->rate);
        if (!opts->curve_out.empty()) {
            depinner::write_tuning_curve_csv(run.curve, opts->curve_out);
        }
        ordered_json doc;
        doc["command"] = "simulate-target";
        doc["target_fraction"] = opts->target;
        doc["final_fraction"] = run.final_fraction;
        doc["final_r_ohm"] = run.final_r;
        doc["t_hit_s"] = run.t_hit;
        emit(doc, opts->out);
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"depinner: depinning-model analysis of Josephson-junction tuning"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read option defaults from a structured-text file");
    app.failure_message(CLI::FailureMessage::help);

    add_fit_curve(app);
    add_compare_fits(app);
    add_phase_grid(app);
    add_contour(app);
    add_boundary_line(app);
    add_fit_breakdown_boundary(app);
    add_classify(app);
    add_self_heat(app);
    add_deform_grid(app);
    add_simmons_fit(app);
    add_ohmic_fit(app);
    add_detect_breakdown(app);
    add_breakdown_map(app);
    add_transmon_spectrum(app);
    add_infer_ejec(app);
    add_harmonics_report(app);
    add_estimate_tau(app);
    add_synth(app);
    add_simulate_campaign(app);
    add_simulate_target(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "depinner: error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
