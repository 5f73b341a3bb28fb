// Command-line front end: condition tables, single simulations, parameter
// sweeps and exact-vs-analytic comparisons, with CSV (and optional SVG)
// output plus a manifest that re-runs to identical results.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rotorient/config.hpp"
#include "rotorient/magnus.hpp"
#include "rotorient/observables.hpp"
#include "rotorient/optimum.hpp"
#include "rotorient/propagate.hpp"
#include "rotorient/sweep.hpp"
#include "svg.hpp"

namespace {

using namespace rotorient;

constexpr const char* kVersion = "1.0.0";
constexpr double kPi = std::numbers::pi;

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

struct Options {
    std::string config_path;
    std::string out_dir = ".";
    std::string mode_override;
    bool svg = false;
    bool serial = false;
    // conditions subcommand
    int branch = 0;  // 0 = both
    int max_winding = 0;
    std::string csv_path;
};

RotorModel model_from(const Config& cfg) {
    RotorModel model;
    model.b = cfg.get_double("rotor.b", 1.0);
    model.mu = cfg.get_double("rotor.mu", 1.0);
    model.j_max = cfg.get_int("rotor.j_max", 2);
    model.m = cfg.get_int("rotor.m", 0);
    validate(model);
    return model;
}

OptimalCondition condition_from(const Config& cfg) {
    OptimalCondition condition = condition_amplitudes(cfg.get_int("condition.branch", 1),
                                                      cfg.get_int("condition.winding", 0));
    // Explicit targets (in units of pi) override the branch-derived ones and
    // allow off-condition or zero-amplitude fields.
    if (cfg.has("condition.theta1_pi") || cfg.has("condition.theta2_pi")) {
        condition.theta1_mag = cfg.get_double("condition.theta1_pi", 0.0) * kPi;
        condition.theta2_mag = cfg.get_double("condition.theta2_pi", 0.0) * kPi;
        if (condition.theta1_mag < 0.0 || condition.theta2_mag < 0.0) {
            throw ConfigError("condition.theta*_pi must be non-negative");
        }
        condition.ratio = condition.theta1_mag > 0.0
                              ? condition.theta2_mag / condition.theta1_mag
                              : 0.0;
    }
    return condition;
}

StepControl step_control_from(const Config& cfg) {
    StepControl control;
    control.steps_per_period = cfg.get_int("propagation.steps_per_period", 200);
    control.norm_tolerance = cfg.get_double("propagation.norm_tolerance", 1e-10);
    control.trajectory_stride = cfg.get_int("propagation.trajectory_stride", 0);
    if (control.steps_per_period < 1) {
        throw ConfigError("propagation.steps_per_period must be positive");
    }
    return control;
}

struct FieldParams {
    double bandwidth = 0.02;  // 1/tau'
    double detuning = 0.0;    // units of w01 unless absolute
    double delay = 0.0;       // tau'
    double phi1 = 0.0;
    double phi2 = 0.0;
    bool detuning_absolute = false;
};

FieldParams field_params_from(const Config& cfg) {
    FieldParams params;
    params.bandwidth = cfg.get_double("field.bandwidth", 0.02);
    params.detuning = cfg.get_double("field.detuning", 0.0);
    params.delay = cfg.get_double("field.delay", 0.0);
    params.phi1 = cfg.get_double("field.phi1", 0.0);
    params.phi2 = cfg.get_double("field.phi2", 0.0);
    const std::string unit = cfg.get_string("field.detuning_unit", "omega01");
    if (unit == "absolute") {
        params.detuning_absolute = true;
    } else if (unit != "omega01") {
        throw ConfigError("field.detuning_unit must be `omega01` or `absolute`");
    }
    if (!(params.bandwidth > 0.0)) {
        throw ConfigError("field.bandwidth must be positive");
    }
    return params;
}

FieldConfig build_field(const RotorModel& model, const OptimalCondition& condition,
                        const FieldParams& params) {
    const double tp = tau_prime(model);
    const double detuning_abs = params.detuning_absolute
                                    ? params.detuning
                                    : params.detuning * transition_frequency(model, 0);
    return pulses_from_targets(
        {complexd{condition.theta1_mag, 0.0}, complexd{condition.theta2_mag, 0.0}}, model,
        detuning_abs, params.bandwidth / tp, params.delay * tp, params.phi1, params.phi2);
}

// Fully resolved configuration snapshot: reparsing it reproduces the run.
Config resolve_config(const Config& cfg) {
    Config out = cfg;
    const RotorModel model = model_from(cfg);
    out.set_double("rotor.b", model.b);
    out.set_double("rotor.mu", model.mu);
    out.set_int("rotor.j_max", model.j_max);
    out.set_int("rotor.m", model.m);
    out.set_int("condition.branch", cfg.get_int("condition.branch", 1));
    out.set_int("condition.winding", cfg.get_int("condition.winding", 0));
    const FieldParams params = field_params_from(cfg);
    out.set_double("field.bandwidth", params.bandwidth);
    out.set_double("field.detuning", params.detuning);
    out.set_double("field.delay", params.delay);
    out.set_double("field.phi1", params.phi1);
    out.set_double("field.phi2", params.phi2);
    out.set("field.detuning_unit", params.detuning_absolute ? "absolute" : "omega01");
    const StepControl control = step_control_from(cfg);
    out.set_int("propagation.steps_per_period", control.steps_per_period);
    out.set_double("propagation.norm_tolerance", control.norm_tolerance);
    out.set_int("propagation.trajectory_stride", control.trajectory_stride);
    out.set_double("units.b_ghz", cfg.get_double("units.b_ghz", 44.3));
    out.set_double("units.mu_debye", cfg.get_double("units.mu_debye", 2.985));
    return out;
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

void write_manifest(const std::filesystem::path& dir, const std::string& subcommand,
                    const Config& resolved, const std::vector<std::string>& outputs) {
    const RotorModel model = model_from(resolved);
    UnitSystem units;
    units.b_ghz = resolved.get_double("units.b_ghz", 44.3);
    units.mu_debye = resolved.get_double("units.mu_debye", 2.985);

    std::ofstream out(dir / "manifest.cfg");
    if (!out) throw std::runtime_error("cannot write manifest in " + dir.string());
    out << "# rotorient " << kVersion << "\n";
    out << "# subcommand: " << subcommand << "\n";
    out << "# generated: " << timestamp_utc() << "\n";
    for (const auto& name : outputs) out << "# output: " << name << "\n";
    out << "# physical scales (reporting only): tau' = " << format_double(units.tau_prime_ps(model))
        << " ps, revival = " << format_double(units.revival_period_ps(model)) << " ps\n";
    out << "\n" << resolved.dump();
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    return out;
}

void write_report_csv(const std::filesystem::path& path, const StateReport& report) {
    auto out = open_output(path);
    out << "state,population,phase\n";
    for (size_t j = 0; j < report.populations.size(); ++j) {
        out << j << "," << format_double(report.populations[j]) << ","
            << format_double(report.phases[j]) << "\n";
    }
}

void write_field_csv(const std::filesystem::path& path, const FieldConfig& field, int points) {
    auto out = open_output(path);
    out << "t,field\n";
    for (int i = 0; i < points; ++i) {
        const double t = field.t_start + (field.t_end - field.t_start) * i / (points - 1);
        out << format_double(t) << "," << format_double(field_time(field, t)) << "\n";
    }
}

void write_trace_csv(const std::filesystem::path& path, const OrientationTrace& trace) {
    auto out = open_output(path);
    out << "t,orientation\n";
    for (const auto& [t, v] : trace.samples) {
        out << format_double(t) << "," << format_double(v) << "\n";
    }
}

void write_trajectory_csv(const std::filesystem::path& path,
                          const std::vector<WavePacket>& trajectory) {
    auto out = open_output(path);
    out << "t";
    const size_t n = trajectory.empty() ? 0 : trajectory.front().coeffs.size();
    for (size_t j = 0; j < n; ++j) out << ",re_c" << j << ",im_c" << j;
    for (size_t j = 0; j < n; ++j) out << ",p" << j;
    out << "\n";
    for (const auto& packet : trajectory) {
        out << format_double(packet.reference_time);
        for (const auto& c : packet.coeffs) {
            out << "," << format_double(c.real()) << "," << format_double(c.imag());
        }
        for (const auto& c : packet.coeffs) out << "," << format_double(std::norm(c));
        out << "\n";
    }
}

void write_sweep_csv(const std::filesystem::path& path, const SweepResult& result) {
    auto out = open_output(path);
    out << "axis1,axis2,mode,max_orientation,p0,p1,p2,phase0,phase1,phase2\n";
    for (const auto& r : result.records) {
        out << format_double(r.axis1) << ",";
        if (result.has_axis2) out << format_double(r.axis2);
        out << "," << r.mode << ",";
        if (r.ok) {
            out << format_double(r.max_orientation);
            for (int j = 0; j < 3; ++j) {
                out << "," << format_double(j < int(r.populations.size()) ? r.populations[j] : 0.0);
            }
            for (int j = 0; j < 3; ++j) {
                out << "," << format_double(j < int(r.phases.size()) ? r.phases[j] : 0.0);
            }
            out << "\n";
        } else {
            out << "nan,nan,nan,nan,nan,nan,nan\n";
        }
    }
}

int cmd_conditions(const Options& opt) {
    std::vector<OptimalCondition> rows;
    for (int branch : {1, 2}) {
        if (opt.branch != 0 && branch != opt.branch) continue;
        for (int j = 0; j <= opt.max_winding; ++j) {
            rows.push_back(condition_amplitudes(branch, j));
        }
    }

    std::printf("%-7s %-8s %-12s %-12s %-10s %s\n", "branch", "winding", "|theta1|/pi",
                "|theta2|/pi", "ratio", "phase condition");
    for (const auto& c : rows) {
        std::printf("%-7d %-8d %-12.6f %-12.6f %-10.6f %s\n", c.branch, c.winding,
                    c.theta1_mag / kPi, c.theta2_mag / kPi, c.ratio,
                    "2*arg(theta1)-arg(theta2) = (k+-1/2)*pi");
    }

    if (!opt.csv_path.empty()) {
        auto out = open_output(opt.csv_path);
        out << "branch,winding,theta1_over_pi,theta2_over_pi,ratio,phase_condition\n";
        for (const auto& c : rows) {
            out << c.branch << "," << c.winding << "," << format_double(c.theta1_mag / kPi) << ","
                << format_double(c.theta2_mag / kPi) << "," << format_double(c.ratio)
                << ",(k+-1/2)*pi\n";
        }
    }
    return 0;
}

int cmd_simulate(const Options& opt) {
    const Config cfg = Config::parse_file(opt.config_path);
    const Config resolved = resolve_config(cfg);
    const RotorModel model = model_from(resolved);
    const auto condition = condition_from(resolved);
    const auto params = field_params_from(resolved);
    const auto control = step_control_from(resolved);
    const auto field = build_field(model, condition, params);
    if (field.overlap_flagged) {
        std::cerr << "warning: the two spectral lobes overlap; amplitude targets degrade\n";
    }

    const auto result = propagate_exact(ground_state(model), field, model, control);
    const auto report = population_phase_report(result.final);
    const auto best = max_orientation_over_revival(result.final, model);
    const auto trace =
        sample_orientation_trace(result.final, model, field.t_end,
                                 field.t_end + revival_period(model),
                                 resolved.get_int("output.trace_points", 2048));

    const std::filesystem::path dir(opt.out_dir);
    std::filesystem::create_directories(dir);
    std::vector<std::string> outputs = {"field.csv", "orientation.csv", "report.csv"};
    write_field_csv(dir / "field.csv", field, resolved.get_int("output.field_points", 4001));
    write_trace_csv(dir / "orientation.csv", trace);
    write_report_csv(dir / "report.csv", report);
    if (control.trajectory_stride > 0) {
        write_trajectory_csv(dir / "trajectory.csv", result.trajectory);
        outputs.push_back("trajectory.csv");
    }
    if (opt.svg) {
        svg::Series s{"orientation", "#1f77b4", trace.samples};
        svg::write_line_plot((dir / "orientation.svg").string(), "field-free orientation",
                             "t (internal units)", "<cos theta>", {s});
        outputs.push_back("orientation.svg");
    }
    write_manifest(dir, "simulate", resolved, outputs);

    std::printf("norm drift: %.3e\n", result.norm_drift);
    std::printf("max |<cos theta>| over one revival: %.6f at t = %.6f\n", best.value, best.time);
    for (size_t j = 0; j < report.populations.size(); ++j) {
        std::printf("J=%zu  population %.6f  phase %+.6f\n", j, report.populations[j],
                    report.phases[j]);
    }
    return 0;
}

SweepConfig sweep_config_from(const Config& cfg, const Options& opt) {
    SweepConfig sweep;
    sweep.condition = condition_from(cfg);
    const FieldParams params = field_params_from(cfg);
    sweep.bandwidth = params.bandwidth;
    sweep.detuning = params.detuning;
    sweep.delay = params.delay;
    sweep.phi1 = params.phi1;
    sweep.phi2 = params.phi2;
    sweep.detuning_absolute = params.detuning_absolute;
    sweep.step_control = step_control_from(cfg);

    const std::string mode =
        opt.mode_override.empty() ? cfg.get_string("sweep.mode", "both") : opt.mode_override;
    sweep.mode = sweep_mode_from_string(mode);

    sweep.axis1.param = sweep_param_from_string(cfg.require_string("sweep.axis1"));
    sweep.axis1.min = cfg.require_double("sweep.axis1_min");
    sweep.axis1.max = cfg.require_double("sweep.axis1_max");
    sweep.axis1.n = cfg.get_int("sweep.axis1_n", 201);

    const std::string axis2 = cfg.get_string("sweep.axis2", "none");
    if (axis2 != "none") {
        sweep.axis2.param = sweep_param_from_string(axis2);
        sweep.axis2.min = cfg.require_double("sweep.axis2_min");
        sweep.axis2.max = cfg.require_double("sweep.axis2_max");
        sweep.axis2.n = cfg.get_int("sweep.axis2_n", 101);
    }
    return sweep;
}

void write_sweep_svg(const std::filesystem::path& dir, const SweepConfig& sweep,
                     const SweepResult& result, std::vector<std::string>& outputs) {
    const std::string x_label = to_string(sweep.axis1.param);
    if (!result.has_axis2) {
        std::vector<svg::Series> series;
        const char* colors[2] = {"#1f77b4", "#d62728"};
        int color = 0;
        for (const std::string mode : {"exact", "analytic"}) {
            svg::Series s{mode, colors[color++ % 2], {}};
            for (const auto& r : result.records) {
                if (r.mode == mode && r.ok) s.points.emplace_back(r.axis1, r.max_orientation);
            }
            if (!s.points.empty()) series.push_back(std::move(s));
        }
        svg::write_line_plot((dir / "sweep.svg").string(), "max |<cos theta>|", x_label,
                             "max orientation", series);
        outputs.push_back("sweep.svg");
        return;
    }
    for (const std::string mode : {"exact", "analytic"}) {
        if (sweep.mode == SweepMode::exact && mode == "analytic") continue;
        if (sweep.mode == SweepMode::analytic && mode == "exact") continue;
        // records are (i1, i2, mode)-ordered; index them directly
        const int modes = (sweep.mode == SweepMode::both) ? 2 : 1;
        const int mode_index = (sweep.mode == SweepMode::both && mode == "analytic") ? 1 : 0;
        std::vector<double> values(size_t(result.n1) * result.n2, 0.0);
        for (int i1 = 0; i1 < result.n1; ++i1) {
            for (int i2 = 0; i2 < result.n2; ++i2) {
                const auto& r =
                    result.records[(size_t(i1) * result.n2 + i2) * modes + mode_index];
                values[size_t(i2) * result.n1 + i1] =
                    r.ok ? r.max_orientation : std::nan("");
            }
        }
        svg::write_heatmap((dir / ("sweep_" + mode + ".svg")).string(),
                           "max |<cos theta>| (" + mode + ")", x_label,
                           to_string(sweep.axis2.param), result.n1, result.n2,
                           sweep.axis1.min, sweep.axis1.max, sweep.axis2.min, sweep.axis2.max,
                           values);
        outputs.push_back("sweep_" + mode + ".svg");
    }
}

int cmd_sweep(const Options& opt) {
    const Config cfg = Config::parse_file(opt.config_path);
    Config resolved = resolve_config(cfg);
    const RotorModel model = model_from(resolved);
    const SweepConfig sweep = sweep_config_from(resolved, opt);
    // Echo the effective mode into the snapshot so a manifest re-run matches
    // even when --mode was passed on the command line.
    resolved.set("sweep.mode", to_string(sweep.mode));
    resolved.set("sweep.axis1", to_string(sweep.axis1.param));
    resolved.set_double("sweep.axis1_min", sweep.axis1.min);
    resolved.set_double("sweep.axis1_max", sweep.axis1.max);
    resolved.set_int("sweep.axis1_n", sweep.axis1.n);
    resolved.set("sweep.axis2", to_string(sweep.axis2.param));
    if (sweep.axis2.param != SweepParam::none) {
        resolved.set_double("sweep.axis2_min", sweep.axis2.min);
        resolved.set_double("sweep.axis2_max", sweep.axis2.max);
        resolved.set_int("sweep.axis2_n", sweep.axis2.n);
    }

    const auto result =
        run_sweep(sweep, model, opt.serial ? Execution::serial : Execution::parallel);

    const std::filesystem::path dir(opt.out_dir);
    std::filesystem::create_directories(dir);
    std::vector<std::string> outputs = {"sweep.csv"};
    write_sweep_csv(dir / "sweep.csv", result);
    if (opt.svg) write_sweep_svg(dir, sweep, result, outputs);
    write_manifest(dir, "sweep", resolved, outputs);

    if (result.failed_points > 0) {
        std::cerr << result.failed_points << " of " << result.records.size()
                  << " grid points failed\n";
        for (const auto& r : result.records) {
            if (!r.ok) {
                std::cerr << "  axis1=" << r.axis1 << " axis2=" << r.axis2 << " [" << r.mode
                          << "]: " << r.error << "\n";
                break;  // one sample diagnostic is enough
            }
        }
    }
    if (result.failed_points == int(result.records.size())) {
        return kExitNumerical;
    }
    std::printf("sweep: %zu records (%d failed) -> %s\n", result.records.size(),
                result.failed_points, (dir / "sweep.csv").string().c_str());
    return 0;
}

int cmd_compare(const Options& opt) {
    const Config cfg = Config::parse_file(opt.config_path);
    const Config resolved = resolve_config(cfg);
    const RotorModel model = model_from(resolved);
    const auto condition = condition_from(resolved);
    const auto control = step_control_from(resolved);
    FieldParams params = field_params_from(resolved);

    const std::string axis = resolved.get_string("compare.axis", "none");
    std::vector<double> values;
    if (axis == "none") {
        values.push_back(0.0);
    } else {
        const double lo = resolved.require_double("compare.min");
        const double hi = resolved.require_double("compare.max");
        const int n = resolved.get_int("compare.n", 21);
        for (int i = 0; i < n; ++i) {
            values.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
        }
    }

    const std::filesystem::path dir(opt.out_dir);
    std::filesystem::create_directories(dir);
    auto out = open_output(dir / "compare.csv");
    out << "axis,p0_exact,p1_exact,p2_exact,phase0_exact,phase1_exact,phase2_exact,"
           "p0_analytic,p1_analytic,p2_analytic,phase0_analytic,phase1_analytic,phase2_analytic,"
           "max_orientation_exact,max_orientation_analytic,max_population_diff\n";

    for (double v : values) {
        FieldParams point = params;
        if (axis == "bandwidth") point.bandwidth = v;
        if (axis == "detuning") point.detuning = v;
        if (axis == "delay") point.delay = v;
        const auto field = build_field(model, condition, point);
        const auto record = magnus_vs_exact_report(field, model, control);
        out << format_double(v);
        for (int j = 0; j < 3; ++j) out << "," << format_double(record.populations_exact[j]);
        for (int j = 0; j < 3; ++j) out << "," << format_double(record.phases_exact[j]);
        for (int j = 0; j < 3; ++j) out << "," << format_double(record.populations_analytic[j]);
        for (int j = 0; j < 3; ++j) out << "," << format_double(record.phases_analytic[j]);
        out << "," << format_double(record.max_orientation_exact) << ","
            << format_double(record.max_orientation_analytic) << ","
            << format_double(record.max_population_diff) << "\n";
    }
    write_manifest(dir, "compare", resolved, {"compare.csv"});
    std::printf("compare: %zu points -> %s\n", values.size(),
                (dir / "compare.csv").string().c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"three-state rigid-rotor orientation control toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Options opt;

    auto* conditions = app.add_subcommand("conditions", "print the optimal amplitude conditions");
    conditions->add_option("--branch", opt.branch, "restrict to one branch (1 or 2)")
        ->check(CLI::Range(1, 2));
    conditions->add_option("--max-winding", opt.max_winding, "largest winding index j");
    conditions->add_option("--csv", opt.csv_path, "also write the table as CSV");

    auto* simulate = app.add_subcommand("simulate", "propagate one configuration exactly");
    simulate->add_option("--config", opt.config_path, "configuration file")->required();
    simulate->add_option("--out-dir", opt.out_dir, "output directory");
    simulate->add_flag("--svg", opt.svg, "emit SVG plots");

    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep");
    sweep->add_option("--config", opt.config_path, "configuration file")->required();
    sweep->add_option("--out-dir", opt.out_dir, "output directory");
    sweep->add_option("--mode", opt.mode_override, "exact | analytic | both");
    sweep->add_flag("--svg", opt.svg, "emit SVG plots");
    sweep->add_flag("--serial", opt.serial, "disable the parallel grid loop");

    auto* compare = app.add_subcommand("compare", "exact vs first-order analytic report");
    compare->add_option("--config", opt.config_path, "configuration file")->required();
    compare->add_option("--out-dir", opt.out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (conditions->parsed()) return cmd_conditions(opt);
        if (simulate->parsed()) return cmd_simulate(opt);
        if (sweep->parsed()) return cmd_sweep(opt);
        if (compare->parsed()) return cmd_compare(opt);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return 0;
}
