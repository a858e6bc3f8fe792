#include "gburgers/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "gburgers/errors.hpp"
#include "gburgers/metrics.hpp"
#include "gburgers/stepper.hpp"

namespace gburgers::cli {

namespace {

// 8 significant digits, scientific; fixed format keeps outputs byte-stable.
std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.7e", v);
    return buf;
}

std::string sci_or_empty(std::optional<double> v) {
    return v ? sci(*v) : std::string();
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary keeps \n endings everywhere
    if (!out) throw ConfigError("cannot open output file '" + path + "'");
    return out;
}

ErrorReport exact_errors(const ProblemSpec& spec, const SolutionState& state) {
    const std::size_t n = state.w.size();
    std::vector<double> reference(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double xs = spec.a + spec.length() * (k + 0.5) / static_cast<double>(n);
        reference[k] = evaluate_exact(spec, xs, state.t);
    }
    return error_norms(state.w, reference, 1.0 / static_cast<double>(n), state.t);
}

}  // namespace

void cmd_solve(const RunFile& rf, const std::string& out_path) {
    const ProblemSpec spec = problem_from_runfile(rf);
    SolverConfig config;
    config.J = require_key(rf.J, "J");
    config.dt = require_key(rf.dt, "dt");
    config.T = require_key(rf.T, "T");
    std::vector<double> snapshots = rf.snapshots;
    if (snapshots.empty()) snapshots.push_back(config.T);

    const RunResult result = run(spec, config, snapshots);

    std::ofstream out = open_out(out_path);
    out << "t,x_star,w_numeric,w_exact,abs_error\n";
    for (const SolutionState& state : result.snapshots) {
        const std::size_t n = state.w.size();
        for (std::size_t k = 0; k < n; ++k) {
            const double xs = spec.a + spec.length() * (k + 0.5) / static_cast<double>(n);
            out << sci(state.t) << ',' << sci(xs) << ',' << sci(state.w[k]) << ',';
            if (spec.has_exact()) {
                const double exact = evaluate_exact(spec, xs, state.t);
                out << sci(exact) << ',' << sci(std::abs(state.w[k] - exact));
            } else {
                out << ',';
            }
            out << '\n';
        }
    }
}

namespace {

struct BenchmarkCell {
    int J;
    double dt;
    double T;
    double linf_ref;
    double l2_ref;
};

struct BenchmarkTable {
    int problem;
    double nu;
    ProblemParams params;
    std::vector<BenchmarkCell> cells;
    bool ratio_column;  // emit l_2 ratios between successive rows
};

BenchmarkTable benchmark_table(int table) {
    switch (table) {
        case 1:
            return {1, 0.01, {.c0 = 0.5, .sigma = {}},
                    {{3, 0.01, 2.0, 0.76e-3, 0.347e-3}, {3, 0.01, 4.0, 0.582e-3, 0.311e-3}},
                    false};
        case 2:
            // The stored T=4 L2 reference is reproduced as printed in its
            // source even though it is inconsistent with the L-infinity value
            // there (likely a dropped exponent digit); deviations against it
            // are reported as-is.
            return {1, 0.001, {.c0 = 0.5, .sigma = {}},
                    {{4, 0.01, 2.0, 0.2236e-3, 0.054998e-3},
                     {4, 0.01, 4.0, 0.1823e-3, 0.575806e-3}},
                    false};
        case 3:
            return {2, 1.0, {.c0 = {}, .sigma = 2.0},
                    {{2, 0.001, 0.01, 1.1533e-6, 8.18486e-7},
                     {2, 0.01, 0.1, 9.9506e-6, 7.00077e-6},
                     {2, 0.01, 0.2, 1.73036e-5, 1.22587e-5},
                     {4, 0.001, 0.01, 7.31654e-8, 5.12615e-8},
                     {4, 0.01, 0.1, 6.26645e-7, 4.40074e-7},
                     {4, 0.01, 0.2, 1.09634e-6, 7.72171e-7}},
                    false};
        case 4:
            return {3, 0.01, {.c0 = {}, .sigma = 100.0},
                    {{2, 0.01, 1.0, 3.58275e-7, 2.52147e-7},
                     {3, 0.01, 1.0, 9.02969e-8, 6.35077e-8},
                     {4, 0.01, 1.0, 2.26455e-8, 1.59079e-8},
                     {5, 0.01, 1.0, 5.66586e-9, 3.98117e-9}},
                    true};
        default:
            throw ConfigError("table number must be 1..4, got " + std::to_string(table));
    }
}

}  // namespace

void cmd_table(int table, const std::string& out_path) {
    const BenchmarkTable bench = benchmark_table(table);
    const ProblemSpec spec = make_test_problem(bench.problem, bench.nu, bench.params);

    std::ofstream out = open_out(out_path);
    out << "problem,J,two_m,dt,T,l_inf_computed,l_inf_reference,l_inf_rel_dev,"
           "l_2_computed,l_2_reference,l_2_rel_dev,l_2_ratio\n";

    std::optional<double> prev_l2;
    for (const BenchmarkCell& cell : bench.cells) {
        SolverConfig config{cell.J, cell.dt, cell.T};
        const RunResult result = run(spec, config);
        const ErrorReport report = exact_errors(spec, result.final_state);

        std::optional<double> ratio;
        if (bench.ratio_column && prev_l2) ratio = *prev_l2 / report.l_2;
        prev_l2 = report.l_2;

        out << bench.problem << ',' << cell.J << ',' << (2 << cell.J) << ',' << sci(cell.dt)
            << ',' << sci(cell.T) << ',' << sci(report.l_inf) << ',' << sci(cell.linf_ref) << ','
            << sci((report.l_inf - cell.linf_ref) / cell.linf_ref) << ',' << sci(report.l_2)
            << ',' << sci(cell.l2_ref) << ',' << sci((report.l_2 - cell.l2_ref) / cell.l2_ref)
            << ',' << sci_or_empty(ratio) << '\n';
    }
}

void cmd_converge(const RunFile& rf, const std::string& out_path) {
    const ProblemSpec spec = problem_from_runfile(rf);
    const double dt = require_key(rf.dt, "dt");
    const double T = require_key(rf.T, "T");
    if (rf.J_list.empty()) throw ConfigError("run file is missing required key 'J_list'");

    const std::vector<ConvergenceRow> rows =
        convergence_study(spec, dt, T, rf.J_list, rf.oracle_accuracy);

    std::ofstream out = open_out(out_path);
    out << "J,two_m,l_inf,l_2,ratio_to_previous,observed_order\n";
    for (const ConvergenceRow& row : rows) {
        out << row.J << ',' << (2 << row.J) << ',' << sci(row.l_inf) << ',' << sci(row.l_2)
            << ',' << sci_or_empty(row.ratio_to_previous) << ','
            << sci_or_empty(row.observed_order) << '\n';
    }
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Haar wavelet collocation solver for generalized Burgers-type equations"};
    app.require_subcommand(1);

    std::string solve_runfile, converge_runfile, out_override;
    int table_number = 0;

    CLI::App* solve = app.add_subcommand("solve", "run one solve and write the solution CSV");
    solve->add_option("runfile", solve_runfile, "flat key = value run file")->required();
    solve->add_option("--out", out_override, "output CSV path (overrides the run file)");

    CLI::App* table = app.add_subcommand("table", "reproduce a built-in benchmark table");
    table->add_option("number", table_number, "table number 1..4")->required();
    table->add_option("--out", out_override, "output CSV path");

    CLI::App* converge = app.add_subcommand("converge", "resolution sweep over J_list");
    converge->add_option("runfile", converge_runfile, "flat key = value run file")->required();
    converge->add_option("--out", out_override, "output CSV path (overrides the run file)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (solve->parsed()) {
            const RunFile rf = parse_runfile(solve_runfile);
            const std::string path =
                !out_override.empty() ? out_override : (!rf.out.empty() ? rf.out : "solution.csv");
            cmd_solve(rf, path);
            std::cout << "wrote " << path << "\n";
        } else if (table->parsed()) {
            const std::string path = !out_override.empty()
                                         ? out_override
                                         : ("table" + std::to_string(table_number) + ".csv");
            cmd_table(table_number, path);
            std::cout << "wrote " << path << "\n";
        } else if (converge->parsed()) {
            const RunFile rf = parse_runfile(converge_runfile);
            const std::string path = !out_override.empty()
                                         ? out_override
                                         : (!rf.out.empty() ? rf.out : "convergence.csv");
            cmd_converge(rf, path);
            std::cout << "wrote " << path << "\n";
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}

}  // namespace gburgers::cli
