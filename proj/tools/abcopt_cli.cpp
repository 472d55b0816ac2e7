// Command-line front end: benchmark-table reproduction, custom runs,
// divergence curve dumps, and the invariant suites.
//
// Exit codes: 0 success/PASS, 2 check or reproduction failure,
//             64 usage error, 65 degenerate input (empty subdifferential).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abcopt/algorithms.hpp"
#include "abcopt/bregman.hpp"
#include "abcopt/checks.hpp"
#include "abcopt/errors.hpp"
#include "abcopt/functions.hpp"
#include "abcopt/solver1d.hpp"
#include "abcopt/tables.hpp"
#include "abcopt/trace_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFail = 2;
constexpr int kExitUsage = 64;
constexpr int kExitDegenerate = 65;

abcopt::Domain parse_domain(const std::string& text) {
    const auto sep = text.find(':');
    if (sep == std::string::npos) {
        throw std::invalid_argument("domain must be <lo>:<hi>");
    }
    size_t used = 0;
    const double lo = std::stod(text.substr(0, sep), &used);
    if (used != sep) throw std::invalid_argument("domain must be <lo>:<hi>");
    const std::string hi_text = text.substr(sep + 1);
    const double hi = std::stod(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument("domain must be <lo>:<hi>");
    return abcopt::Domain(lo, hi);
}

abcopt::Schedule parse_schedule(const std::string& text) {
    if (text == "harmonic") return abcopt::Schedule::harmonic();
    if (text.rfind("constant:", 0) == 0) {
        return abcopt::Schedule::constant(std::stod(text.substr(9)));
    }
    if (text.rfind("file:", 0) == 0) {
        const std::string path = text.substr(5);
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("schedule file not readable: " + path);
        std::vector<double> values;
        double v;
        while (in >> v) values.push_back(v);
        return abcopt::Schedule::explicit_list(values);
    }
    throw std::invalid_argument("schedule must be harmonic, constant:<c> or file:<path>");
}

struct RunSpec {
    std::string method;
    double x0 = 0.0;
    bool x0_set = false;
    std::string schedule = "harmonic";
    std::string domain = "-5:5";
    int grid = 100001;
    int max_iters = 50;
    double f_tol = 1e-9;
    std::string lambda_mode;  // empty: paper for prox, refresh for mirror
    std::string tiebreak = "smallest-abs";
    std::string format = "csv";
};

double parse_number(const std::string& text) {
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad numeric value: " + text);
    return v;
}

/// Flat key=value config for the run subcommand. Values fill in only the
/// options not already given on the command line; unknown keys are rejected.
void apply_config(const std::string& path, RunSpec& spec, const CLI::App& run) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config file not readable: " + path);
    auto unset = [&run](const std::string& flag) {
        return run.get_option("--" + flag)->count() == 0;
    };
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "method") {
            if (unset(key)) spec.method = value;
        } else if (key == "x0") {
            if (unset(key)) spec.x0 = parse_number(value);
            spec.x0_set = true;
        } else if (key == "schedule") {
            if (unset(key)) spec.schedule = value;
        } else if (key == "domain") {
            if (unset(key)) spec.domain = value;
        } else if (key == "grid") {
            if (unset(key)) spec.grid = static_cast<int>(parse_number(value));
        } else if (key == "max-iters") {
            if (unset(key)) spec.max_iters = static_cast<int>(parse_number(value));
        } else if (key == "f-tol") {
            if (unset(key)) spec.f_tol = parse_number(value);
        } else if (key == "lambda-mode") {
            if (unset(key)) spec.lambda_mode = value;
        } else if (key == "tiebreak") {
            if (unset(key)) spec.tiebreak = value;
        } else if (key == "format") {
            if (unset(key)) spec.format = value;
        } else {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    }
}

int cmd_run(const RunSpec& spec) {
    if (spec.method.empty()) throw std::invalid_argument("run: --method is required");
    if (!spec.x0_set) throw std::invalid_argument("run: --x0 is required");
    const abcopt::Domain dom = parse_domain(spec.domain);
    const abcopt::Schedule sched = parse_schedule(spec.schedule);
    abcopt::SolverConfig cfg;
    cfg.grid_points = spec.grid;
    abcopt::StopRule stop;
    stop.max_iters = spec.max_iters;
    stop.f_tol = spec.f_tol;

    abcopt::LambdaMode mode;
    if (spec.lambda_mode.empty()) {
        mode = spec.method == "prox" ? abcopt::LambdaMode::PaperUpdate
                                     : abcopt::LambdaMode::Refresh;
    } else if (spec.lambda_mode == "paper") {
        mode = abcopt::LambdaMode::PaperUpdate;
    } else if (spec.lambda_mode == "refresh") {
        mode = abcopt::LambdaMode::Refresh;
    } else {
        throw std::invalid_argument("lambda-mode must be paper or refresh");
    }

    abcopt::TieBreak tiebreak;
    if (spec.tiebreak == "smallest-abs") {
        tiebreak = abcopt::TieBreak::SmallestAbs;
    } else if (spec.tiebreak == "positive") {
        tiebreak = abcopt::TieBreak::Positive;
    } else if (spec.tiebreak == "most-negative") {
        tiebreak = abcopt::TieBreak::MostNegative;
    } else {
        throw std::invalid_argument("tiebreak must be smallest-abs, positive or most-negative");
    }

    const abcopt::ObjectiveOracle f = abcopt::example_f(dom);
    const abcopt::BregmanGenerator gen = abcopt::example_generator(dom);
    abcopt::Trace trace;
    if (spec.method == "prox") {
        trace = abcopt::prox_run(f, gen, spec.x0, sched, stop, cfg, mode, tiebreak);
    } else if (spec.method == "mirror") {
        trace = abcopt::mirror_run(f, gen, spec.x0, sched, stop, cfg, mode, tiebreak);
    } else {
        throw std::invalid_argument("method must be prox or mirror");
    }
    for (const std::string& w : trace.warnings) std::cerr << "warning: " << w << "\n";
    if (spec.format == "csv") {
        std::cout << abcopt::trace_to_csv(trace);
    } else if (spec.format == "json") {
        std::cout << abcopt::trace_to_json(trace);
    } else {
        throw std::invalid_argument("format must be csv or json");
    }
    return kExitOk;
}

int cmd_reproduce(int table_id) {
    if (table_id < 1 || table_id > 4) {
        std::cerr << "error: table id must be 1..4\n";
        return kExitUsage;
    }
    const abcopt::TablePreset preset = abcopt::table_preset(table_id);
    const abcopt::TableReport report = abcopt::run_table(preset);
    std::printf("table %d: %s, schedule=%s\n", preset.id,
                preset.method == abcopt::Method::Prox ? "prox" : "mirror",
                preset.schedule.kind == abcopt::Schedule::Kind::Harmonic ? "harmonic"
                                                                         : "constant:0.1");
    for (const abcopt::TableRunResult& run : report.runs) {
        std::printf("x0 = %g\n", run.x0);
        std::printf("k,abs_x,f_x,expected_abs_x,expected_f,status\n");
        for (const abcopt::TableRowResult& row : run.rows) {
            std::printf("%d,%.10g,%.10g,%g,%g,%s\n", row.k, row.abs_x, row.f_x,
                        row.expected_abs_x, row.expected_f, row.ok ? "ok" : "MISMATCH");
        }
    }
    std::printf("table %d: %s\n", preset.id, report.pass ? "PASS" : "FAIL");
    return report.pass ? kExitOk : kExitCheckFail;
}

int cmd_divergence(double y, const std::string& range, int samples) {
    if (samples < 2) throw std::invalid_argument("samples must be >= 2");
    const abcopt::Domain probe = parse_domain(range);
    const double span = std::max(std::abs(probe.lo), std::abs(probe.hi));
    const double wide = std::max(span, std::abs(y)) + 1.0;
    const abcopt::BregmanGenerator gen = abcopt::example_generator(abcopt::Domain(-wide, wide));
    const auto lam = gen.lambda_of(y);
    if (!lam) {
        throw abcopt::DegeneratePointError("generator undefined at y=" + std::to_string(y));
    }
    std::printf("x,D\n");
    const double step = probe.width() / (samples - 1);
    for (int i = 0; i < samples; ++i) {
        const double x = i == samples - 1 ? probe.hi : probe.lo + i * step;
        const double d = abcopt::pointwise_divergence(gen.phi, *lam, x, y);
        std::printf("%s,%s\n", abcopt::format_double(x).c_str(),
                    abcopt::format_double(d).c_str());
    }
    return kExitOk;
}

int cmd_check(bool list_only) {
    const std::vector<abcopt::CheckSuite> suites = abcopt::invariant_suites();
    if (list_only) {
        for (const auto& s : suites) std::printf("%s\n", s.name.c_str());
        return kExitOk;
    }
    bool all_ok = true;
    for (const auto& s : suites) {
        std::ostringstream diag;
        const bool ok = s.run(diag);
        std::printf("%s: %s\n", s.name.c_str(), ok ? "ok" : "FAIL");
        if (!ok) {
            all_ok = false;
            std::cerr << diag.str();
        }
    }
    return all_ok ? kExitOk : kExitCheckFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bregman proximal point and mirror descent for abstract convex"
                 " scalar objectives"};
    app.require_subcommand(1);

    auto* reproduce = app.add_subcommand("reproduce", "Re-run a bundled benchmark table");
    int table_id = 0;
    reproduce->add_option("--table", table_id, "Table id (1-4)")->required();

    auto* run = app.add_subcommand("run", "Run one experiment and emit the trace");
    RunSpec spec;
    std::string config_path;
    run->add_option("--method", spec.method, "prox or mirror");
    auto* x0_opt = run->add_option("--x0", spec.x0, "initial point");
    run->add_option("--schedule", spec.schedule, "harmonic, constant:<c> or file:<path>");
    run->add_option("--domain", spec.domain, "search interval <lo>:<hi>");
    run->add_option("--grid", spec.grid, "solver grid points");
    run->add_option("--max-iters", spec.max_iters, "maximum number of steps");
    run->add_option("--f-tol", spec.f_tol, "stop when |f(x_{k+1})-f(x_k)| <= f-tol");
    run->add_option("--lambda-mode", spec.lambda_mode, "paper or refresh");
    run->add_option("--tiebreak", spec.tiebreak, "smallest-abs, positive or most-negative");
    run->add_option("--format", spec.format, "csv or json");
    run->add_option("--config", config_path, "flat key=value file mirroring the flags");

    auto* divergence = app.add_subcommand("divergence", "Dump the divergence curve D(., y)");
    double div_y = 0.0;
    std::string div_range = "-2:2";
    int div_samples = 401;
    divergence->add_option("--y", div_y, "base point (nonzero)")->required();
    divergence->add_option("--range", div_range, "curve interval <lo>:<hi>");
    divergence->add_option("--samples", div_samples, "number of curve points");

    auto* check = app.add_subcommand("check", "Run the invariant suites");
    bool check_list = false;
    check->add_flag("--list", check_list, "list suite names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (reproduce->parsed()) return cmd_reproduce(table_id);
        if (run->parsed()) {
            if (x0_opt->count() > 0) spec.x0_set = true;
            if (!config_path.empty()) apply_config(config_path, spec, *run);
            return cmd_run(spec);
        }
        if (divergence->parsed()) return cmd_divergence(div_y, div_range, div_samples);
        if (check->parsed()) return cmd_check(check_list);
    } catch (const abcopt::DegeneratePointError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFail;
    }
    return kExitUsage;
}
