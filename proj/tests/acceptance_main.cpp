// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Tolerances are pinned here, in code; nothing is deferred to calibration.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "depinner/constants.hpp"
#include "depinner/curve_fit.hpp"
#include "depinner/depinning.hpp"
#include "depinner/io.hpp"
#include "depinner/junction_iv.hpp"
#include "depinner/phase_diagram.hpp"
#include "depinner/rng.hpp"
#include "depinner/self_heating.hpp"
#include "depinner/transmon.hpp"
#include "depinner/workbench.hpp"

namespace fs = std::filesystem;
using namespace depinner;
using Clock = std::chrono::steady_clock;

namespace {

const fs::path kDataDir = DEPINNER_DATA_DIR;
const std::string kCli = DEPINNER_CLI_PATH;
const fs::path kRepoRoot = kDataDir.parent_path().parent_path();

struct Criterion {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

double rel_err(double got, double want) {
    return std::abs(got - want) / std::abs(want);
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// --------------------------------------------------------------------------

Criterion criterion_1_eq2_anchors() {
    Criterion c;
    const DepinningParams p{450.0, 1.3, 1.0, 0.0};
    depinning_temperature(p.v_th / 2.0, p);  // warm up
    const auto t0 = Clock::now();
    const double t_half = depinning_temperature(p.v_th / 2.0, p);
    const double v_back = depinning_voltage(p.t_p, p);
    const double elapsed = ms_since(t0);
    c.expect(rel_err(t_half, p.t_p) <= 1e-12, "T(V_th/2) != T_P at 1e-12");
    c.expect(rel_err(v_back, p.v_th / 2.0) <= 1e-12, "V(T_P) != V_th/2 at 1e-12");
    c.expect(elapsed < 1.0, "runtime >= 1 ms");
    return c;
}

Criterion criterion_2_tau() {
    Criterion c;
    estimate_tau(103.0, 1000.0, 424.95, 437.95);  // warm up
    const auto t0 = Clock::now();
    const auto est = estimate_tau(103.0, 1000.0, 424.95, 437.95);
    const double elapsed = ms_since(t0);
    c.expect(est.tau >= 3e-37 && est.tau <= 3e-35,
             "tau outside one order of magnitude of 3e-36 s");
    c.expect(elapsed < 1.0, "runtime >= 1 ms");

    SeededRng rng(20260811);
    for (int trial = 0; trial < 50; ++trial) {
        const double tau0 = std::pow(10.0, rng.uniform(-38.0, -5.0));
        const double r = std::log(2.0 * kPi * 1000.0 * tau0) /
                         std::log(2.0 * kPi * 103.0 * tau0);
        const auto back = estimate_tau(103.0, 1000.0, r * 437.95, 437.95);
        c.expect(rel_err(back.tau, tau0) <= 1e-6, "closed-form inversion off 1e-6");
    }
    return c;
}

Criterion criterion_3_self_heating() {
    Criterion c;
    const HeatParams h;
    const double power = heating_power(1.0, 5000.0);
    c.expect(power == 1.0e-4, "P(1 V, 5 kOhm) != 1e-4 W exactly");
    const double rise = mean_temperature_rise(power, h);
    c.expect(rise >= 7.5 && rise <= 8.5, "delta T outside [7.5, 8.5] K");

    // Quadrature oracle: midpoint shell integration, 1e5 shells.
    const int n_shells = 100000;
    const double dr = h.r_max / n_shells;
    double integral = 0.0;
    for (int i = 0; i < n_shells; ++i) {
        const double r = (i + 0.5) * dr;
        integral += power / (4.0 * kPi * h.k * r) * 4.0 * kPi * r * r * dr;
    }
    const double oracle =
        h.semi_infinite_factor * integral / (4.0 / 3.0 * kPi * std::pow(h.r_max, 3));
    c.expect(rel_err(rise, oracle) <= 1e-6, "closed form vs quadrature oracle off 1e-6");
    return c;
}

Criterion criterion_4_rc() {
    Criterion c;
    const double f = rc_cutoff(15e3, 240e-12);
    c.expect(std::abs(f - 44.2e3) <= 0.1e3, "RC cutoff outside 44.2 +- 0.1 kHz");
    return c;
}

Criterion criterion_5_fit_recovery() {
    Criterion c;
    const auto t0 = Clock::now();
    SeededRng meta(555);
    for (int trial = 0; trial < 100; ++trial) {
        const double a = meta.uniform(0.01, 0.1);
        const double cc = meta.uniform(0.1, 10.0);

        const auto clean =
            fit_log_model(synth_tuning_curve(a, cc, 150.0, 200, 0.0, 10 + trial));
        c.expect(rel_err(clean.a, a) <= 1e-4 && rel_err(clean.c, cc) <= 1e-4,
                 "noiseless log recovery off 1e-4");

        const auto noisy =
            fit_log_model(synth_tuning_curve(a, cc, 150.0, 200, 0.005, 5000 + trial));
        c.expect(rel_err(noisy.a, a) <= 0.05 && rel_err(noisy.c, cc) <= 0.05,
                 "noisy log recovery off 5%");
    }
    for (int trial = 0; trial < 100; ++trial) {
        const double a = meta.uniform(0.01, 0.1);
        const double n = meta.uniform(0.2, 0.6);
        SeededRng rng(9000 + trial);
        TuningCurve clean_curve, noisy_curve;
        for (int i = 0; i < 400; ++i) {
            const double t = 0.5 * std::pow(2000.0, i / 399.0);
            const double r = a * std::pow(t, n) + 1.0;
            clean_curve.samples.push_back({t, r});
            noisy_curve.samples.push_back({t, r * (1.0 + rng.gaussian(0.0, 0.005))});
        }
        const auto clean = fit_power_model(clean_curve);
        c.expect(rel_err(clean.a, a) <= 1e-4 && rel_err(clean.n, n) <= 1e-4,
                 "noiseless power recovery off 1e-4");
        const auto noisy = fit_power_model(noisy_curve);
        c.expect(rel_err(noisy.a, a) <= 0.05 && rel_err(noisy.n, n) <= 0.05,
                 "noisy power recovery off 5%");
    }
    c.expect(ms_since(t0) < 10000.0, "fit-recovery suite exceeded 10 s");
    return c;
}

Criterion criterion_6_phase_pipeline() {
    Criterion c;

    // Frequency ordering through the full pipeline, one parameter set.
    auto intercept_at = [&](double f) {
        CampaignSpec spec;
        spec.depinning = {3000.0, 1.3, 1.0, 1e-6};
        spec.f_drive = f;
        for (int i = 0; i < 8; ++i) spec.v_values.push_back(0.5 + 0.1 * i);
        for (int i = 0; i < 9; ++i) spec.t_values.push_back(280.0 + 30.0 * i);
        spec.speed_scale = 5e-4;
        spec.noise = 0.002;
        spec.seed = 1234;
        std::vector<TuningRecord> records;
        for (const auto& run : simulate_campaign(spec)) {
            records.push_back(record_from_curve(run.curve));
        }
        const auto grid = build_grid(records, f);
        const auto contour = extract_contour(grid, 0.01);
        c.expect(contour.size() >= 3, "contour too sparse");
        return fit_boundary_line(contour, f).intercept_t;
    };
    const double i103 = intercept_at(103.0);
    const double i1000 = intercept_at(1000.0);
    c.expect(i103 < i1000, "intercept(103 Hz) !< intercept(1000 Hz)");

    // Planted planar boundary recovered to 2 percent intercept error.
    const double slope = -200.0, b = 430.0, s = 5e-4, level = 0.01;
    std::vector<TuningRecord> records;
    for (int it = 0; it < 11; ++it) {
        for (int iv = 0; iv < 9; ++iv) {
            const double v = 0.4 + 0.1 * iv;
            const double t = 250.0 + 15.0 * it;
            const double a = s * (t - (slope * v + b));
            for (int j = 0; j < 3; ++j) {
                TuningRecord rec;
                rec.junction_id = "p";
                rec.conditions = {v, t, 103.0};
                LogFit fit;
                fit.a = a;
                fit.c = 1.0;
                fit.converged = true;
                rec.fit = fit;
                records.push_back(rec);
            }
        }
    }
    const auto grid = build_grid(records, 103.0);
    const auto line = fit_boundary_line(extract_contour(grid, level), 103.0);
    const double want_intercept = b + level / s;
    c.expect(rel_err(line.intercept_t, want_intercept) <= 0.02,
             "planted intercept off 2%");
    return c;
}

Criterion criterion_7_simmons() {
    Criterion c;
    const double area = 8.86e4 * 1e-18;

    for (int k = 1; k <= 50; ++k) {
        const double v = 0.07 * k;  // up to 3.5 V < 2*phi
        c.expect(simmons_current(-v, 1.5e-9, 2.0, area) ==
                     -simmons_current(v, 1.5e-9, 2.0, area),
                 "odd symmetry not exact");
    }
    double prev = 0.0;
    for (int k = 1; k <= 2000; ++k) {
        const double v = 1.7 * k / 2000.0;
        const double i = simmons_current(v, 1.5e-9, 2.0, area);
        c.expect(i > prev, "current not strictly increasing in v");
        prev = i;
    }
    double prev_i = simmons_current(0.5, 0.9e-9, 2.0, area);
    for (int k = 1; k <= 40; ++k) {
        const double d = (0.9 + 0.05 * k) * 1e-9;
        const double i = simmons_current(0.5, d, 2.0, area);
        c.expect(i < prev_i, "current not decreasing in d");
        prev_i = i;
    }

    auto make_trace = [&](double d_nm, double phi, double noise, std::uint64_t seed) {
        SeededRng rng(seed);
        IVTrace trace;
        for (int k = 0; k <= 120; ++k) {
            const double v = 0.01 * k;
            double i = v > 0.0 ? simmons_current(v, d_nm * 1e-9, phi, area) : 0.0;
            if (noise > 0.0 && v > 0.0) i *= 1.0 + rng.gaussian(0.0, noise);
            trace.points.push_back({v, i});
        }
        return trace;
    };
    const auto clean = fit_simmons(make_trace(1.8, 1.6, 0.0, 1), area);
    c.expect(rel_err(clean.d, 1.8e-9) <= 1e-3 && rel_err(clean.phi, 1.6) <= 1e-3,
             "noiseless Simmons recovery off 0.1%");
    for (int trial = 0; trial < 50; ++trial) {
        const auto fit = fit_simmons(make_trace(1.8, 1.6, 0.01, 600 + trial), area);
        c.expect(rel_err(fit.d, 1.8e-9) <= 0.05 && rel_err(fit.phi, 1.6) <= 0.05,
                 "noisy Simmons recovery off 5%");
    }

    SeededRng rng(777);
    BarrierMaps maps;
    maps.rows = maps.cols = 64;
    for (int k = 0; k < 64 * 64; ++k) {
        maps.thickness.push_back(rng.uniform(1.0, 3.0) * 1e-9);
        maps.strength.push_back(rng.uniform(0.3, 0.9) * 1e9);
    }
    double brute = std::numeric_limits<double>::infinity();
    for (std::size_t idx = 0; idx < maps.thickness.size(); ++idx) {
        brute = std::min(brute, maps.thickness[idx] * maps.strength[idx]);
    }
    c.expect(breakdown_from_maps(maps) == brute, "map minimum != brute-force scan");
    return c;
}

Criterion criterion_8_transmon() {
    Criterion c;
    const TransmonParams pairs[] = {{166e6, 23.2e9, 30, 6}, {168e6, 22.2e9, 30, 6}};
    for (const auto& p : pairs) {
        const auto spec = spectrum(p);
        const double asym = std::sqrt(8.0 * p.e_j * p.e_c) - p.e_c;
        c.expect(rel_err(spec.transitions[0], asym) <= 0.01,
                 "f01 off the asymptotic by > 1%");
        const double anharm = spec.transitions[1] - spec.transitions[0];
        c.expect(std::abs(anharm + p.e_c) / p.e_c <= 0.10,
                 "anharmonicity off -E_C by > 10%");

        TransmonParams doubled = p;
        doubled.n_charge = 60;
        const auto t30 = spec.transitions;
        const auto t60 = spectrum(doubled).transitions;
        for (std::size_t k = 0; k < t30.size(); ++k) {
            c.expect(std::abs(t30[k] - t60[k]) <= 1e-9 * std::abs(t60[k]),
                     "basis not converged to 1e-9");
        }

        const auto inferred = infer_ej_ec(spec.transitions[0], spec.transitions[1]);
        c.expect(rel_err(inferred.e_c, p.e_c) <= 1e-4 &&
                     rel_err(inferred.e_j, p.e_j) <= 1e-4,
                 "infer_EJ_EC round trip off 0.01%");
    }
    return c;
}

// --------------------------------------------------------------------------
// Criterion 9: byte-identical CLI output across two runs, every subcommand.

struct CliRun {
    std::string stdout_text;
    std::vector<std::pair<std::string, std::string>> artifacts;  // rel name, bytes
};

CliRun run_cli_capture(const std::string& args, const fs::path& run_dir,
                       const std::vector<fs::path>& artifact_roots) {
    fs::create_directories(run_dir);
    const fs::path out_file = run_dir / "stdout.txt";
    const std::string cmd = "cd " + kRepoRoot.string() + " && " + kCli + " " + args +
                            " > " + out_file.string() + " 2> /dev/null";
    if (std::system(cmd.c_str()) == -1) throw std::runtime_error("system() failed");
    CliRun run;
    run.stdout_text = read_text_file(out_file);
    for (const auto& root : artifact_roots) {
        if (fs::is_directory(root)) {
            std::vector<fs::path> files;
            for (const auto& entry : fs::recursive_directory_iterator(root)) {
                if (entry.is_regular_file()) files.push_back(entry.path());
            }
            std::sort(files.begin(), files.end());
            for (const auto& f : files) {
                run.artifacts.emplace_back(f.filename().string(), read_text_file(f));
            }
        } else if (fs::is_regular_file(root)) {
            run.artifacts.emplace_back(root.filename().string(), read_text_file(root));
        }
    }
    return run;
}

Criterion criterion_9_determinism() {
    Criterion c;
    const fs::path base = fs::temp_directory_path() / "depinner-acceptance";
    fs::remove_all(base);
    fs::create_directories(base);

    // Shared inputs, produced once.
    const fs::path grid_json = base / "grid.json";
    const fs::path contour_json = base / "contour.json";
    const fs::path campaign_in = base / "campaign-in";
    const std::string campaign_flags =
        "--v-values 0.6,0.8,1.0,1.2 --t-values-c 26.85,76.85,126.85 --f-hz 103 "
        "--tp-k 3000 --vth-v 1.3 --tau-s 1e-6 --seed 11 --noise 0.001";
    auto prepare = [&](const std::string& tail) {
        const std::string cmd =
            "cd " + kRepoRoot.string() + " && " + kCli + " " + tail + " > /dev/null 2>&1";
        c.expect(std::system(cmd.c_str()) == 0, "input preparation failed: " + tail);
    };
    prepare("simulate-campaign " + campaign_flags + " --out-dir " + campaign_in.string());
    prepare("phase-grid --curves-dir " + campaign_in.string() + " --f-hz 103 --out " +
            grid_json.string());
    prepare("contour --grid " + grid_json.string() + " --out " + contour_json.string());

    struct Case {
        std::string name;
        std::function<std::string(const fs::path&)> args;  // run dir -> argv tail
        std::function<std::vector<fs::path>(const fs::path&)> artifacts;
    };
    auto no_artifacts = [](const fs::path&) { return std::vector<fs::path>{}; };
    const std::vector<Case> cases = {
        {"fit-curve",
         [](const fs::path&) {
             return std::string("fit-curve --in tests/data/samples/tune_80C_0p95V_8hz.csv");
         },
         no_artifacts},
        {"compare-fits",
         [](const fs::path&) {
             return std::string(
                 "compare-fits --in tests/data/samples/tune_80C_0p95V_81hz.csv");
         },
         no_artifacts},
        {"phase-grid",
         [&](const fs::path& dir) {
             return "phase-grid --curves-dir " + campaign_in.string() + " --f-hz 103 --out " +
                    (dir / "grid.json").string();
         },
         [](const fs::path& dir) { return std::vector<fs::path>{dir / "grid.json"}; }},
        {"contour",
         [&](const fs::path& dir) {
             return "contour --grid " + grid_json.string() + " --out " +
                    (dir / "contour.json").string();
         },
         [](const fs::path& dir) { return std::vector<fs::path>{dir / "contour.json"}; }},
        {"boundary-line",
         [&](const fs::path&) { return "boundary-line --contour " + contour_json.string(); },
         no_artifacts},
        {"fit-breakdown-boundary",
         [](const fs::path&) {
             return std::string(
                 "fit-breakdown-boundary --points tests/data/samples/bd_points.csv");
         },
         no_artifacts},
        {"classify",
         [](const fs::path&) {
             return std::string(
                 "classify --v-amp-v 0.65 --t-c 126.85 --f-hz 103 --tp-k 3000 "
                 "--vth-v 1.3 --tau-s 1e-6");
         },
         no_artifacts},
        {"self-heat",
         [](const fs::path&) {
             return std::string("self-heat --v-amp-v 1 --r-ohm 5000 --t-ambient-c 85");
         },
         no_artifacts},
        {"deform-grid",
         [&](const fs::path& dir) {
             return "deform-grid --grid " + grid_json.string() + " --r-ohm 5000 --out " +
                    (dir / "deformed.json").string();
         },
         [](const fs::path& dir) { return std::vector<fs::path>{dir / "deformed.json"}; }},
        {"simmons-fit",
         [](const fs::path&) {
             return std::string("simmons-fit --in tests/data/samples/iv_junction_a.csv");
         },
         no_artifacts},
        {"ohmic-fit",
         [](const fs::path&) {
             return std::string("ohmic-fit --in tests/data/samples/iv_junction_b.csv");
         },
         no_artifacts},
        {"detect-breakdown",
         [](const fs::path&) {
             return std::string("detect-breakdown --in tests/data/samples/iv_junction_c.csv");
         },
         no_artifacts},
        {"breakdown-map",
         [](const fs::path&) {
             return std::string("breakdown-map --maps tests/data/samples/maps_demo.json");
         },
         no_artifacts},
        {"transmon-spectrum",
         [](const fs::path&) {
             return std::string("transmon-spectrum --ec-mhz 166 --ej-ghz 23.2");
         },
         no_artifacts},
        {"infer-ejec",
         [](const fs::path&) {
             return std::string("infer-ejec --f01-ghz 5.3792367 --f12-ghz 5.2002484");
         },
         no_artifacts},
        {"harmonics-report",
         [](const fs::path&) {
             return std::string(
                 "harmonics-report --measured-ghz 5.3792367,5.2002484,5.0107007,4.8082169");
         },
         no_artifacts},
        {"estimate-tau",
         [](const fs::path&) {
             return std::string(
                 "estimate-tau --f-low 103 --f-high 1000 --intercept-low 424.95 "
                 "--intercept-high 437.95");
         },
         no_artifacts},
        {"synth",
         [](const fs::path& dir) {
             return "synth --a 0.05 --c 2 --noise 0.01 --seed 42 --out " +
                    (dir / "curve.csv").string();
         },
         [](const fs::path& dir) { return std::vector<fs::path>{dir / "curve.csv"}; }},
        {"simulate-campaign",
         [&](const fs::path& dir) {
             return "simulate-campaign " + campaign_flags + " --out-dir " +
                    (dir / "runs").string();
         },
         [](const fs::path& dir) { return std::vector<fs::path>{dir / "runs"}; }},
        {"simulate-target",
         [](const fs::path& dir) {
             return "simulate-target --start-r-ohm 5000 --target-fraction 0.3 "
                    "--curve-out " +
                    (dir / "target.csv").string();
         },
         [](const fs::path& dir) { return std::vector<fs::path>{dir / "target.csv"}; }},
    };

    for (const auto& test_case : cases) {
        // Two runs with byte-identical invocations: same directory, same
        // arguments. Artifacts are snapshotted between the runs.
        const fs::path dir = base / test_case.name;
        const std::string args = test_case.args(dir);
        const auto artifact_roots = test_case.artifacts(dir);
        const CliRun a = run_cli_capture(args, dir, artifact_roots);
        const CliRun b = run_cli_capture(args, dir, artifact_roots);
        c.expect(!a.stdout_text.empty() || !a.artifacts.empty(),
                 test_case.name + ": produced no output at all");
        c.expect(a.stdout_text == b.stdout_text, test_case.name + ": stdout differs");
        c.expect(a.artifacts.size() == b.artifacts.size(),
                 test_case.name + ": artifact count differs");
        for (std::size_t k = 0; k < std::min(a.artifacts.size(), b.artifacts.size()); ++k) {
            c.expect(a.artifacts[k].first == b.artifacts[k].first &&
                         a.artifacts[k].second == b.artifacts[k].second,
                     test_case.name + ": artifact bytes differ");
        }
    }
    return c;
}

}  // namespace

int main() {
    struct Entry {
        const char* label;
        std::function<Criterion()> run;
    };
    const std::vector<Entry> entries = {
        {"1. Eq. 2 closed-form anchors (1e-12, < 1 ms)", criterion_1_eq2_anchors},
        {"2. tau estimation from reference boundary intercepts", criterion_2_tau},
        {"3. self-heating power, ~8 K rise, quadrature oracle", criterion_3_self_heating},
        {"4. RC cutoff 44.2 +- 0.1 kHz", criterion_4_rc},
        {"5. fit-recovery suite (log + power, clean + noisy)", criterion_5_fit_recovery},
        {"6. phase-diagram pipeline: frequency ordering + planted boundary",
         criterion_6_phase_pipeline},
        {"7. Simmons suite: symmetry, monotonicity, round trips, map minimum",
         criterion_7_simmons},
        {"8. transmon suite: asymptotics, convergence, inference", criterion_8_transmon},
        {"9. CLI determinism: byte-identical reruns of every subcommand",
         criterion_9_determinism},
    };

    int failures = 0;
    for (const auto& entry : entries) {
        Criterion result;
        try {
            result = entry.run();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        if (result.ok) {
            std::printf("[PASS] %s\n", entry.label);
        } else {
            ++failures;
            std::printf("[FAIL] %s -- %s\n", entry.label, result.detail.c_str());
        }
    }
    return failures;
}
