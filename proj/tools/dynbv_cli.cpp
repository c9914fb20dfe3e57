// dynbv: batch experiment driver for the (mu+1)-EA on Dynamic BinVal.
//
// Subcommands: drift | analytic | oracle-check | runtime | threshold.
// Exit codes: 0 success, 1 verification failure, 2 config error,
// 3 estimate-validity failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "dynbv/experiments.hpp"

namespace {

int write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << path << "\n";
        return 2;
    }
    out << text;
    return 0;
}

int emit(const dynbv::Table& table, const std::string& format, const std::string& out,
         bool svg_allowed = false) {
    if (format == "csv") return write_output(dynbv::to_csv(table), out);
    if (format == "json") return write_output(dynbv::to_json(table), out);
    if (format == "svg") {
        if (!svg_allowed) {
            std::cerr << "svg output is only available for the drift command\n";
            return 2;
        }
        return write_output(dynbv::to_svg_drift(table), out);
    }
    std::cerr << "unknown format: " << format << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulation and numerical analysis of the (mu+1)-EA on Dynamic BinVal"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from an INI file ([section] per subcommand)");

    std::string format = "csv";
    std::string out_path;
    app.add_option("--format", format, "Output format: csv, json or svg")->capture_default_str();
    app.add_option("--out", out_path, "Output path (default: stdout)");

    dynbv::DriftExperiment drift;
    auto* cmd_drift = app.add_subcommand("drift", "Monte Carlo degenerate-population drift grid");
    cmd_drift->add_option("--c", drift.c_grid, "Mutation parameter grid")->delimiter(',');
    cmd_drift->add_option("--eps", drift.eps_grid, "Epsilon grid")->delimiter(',');
    cmd_drift->add_option("--n", drift.n, "Dimension")->capture_default_str();
    cmd_drift->add_option("--mu", drift.mu, "Population size")->capture_default_str();
    cmd_drift->add_option("--crossover", drift.crossover, "Crossover probability")
        ->capture_default_str();
    cmd_drift->add_option("--trials", drift.trials, "Trials per grid cell")->capture_default_str();
    cmd_drift->add_option("--cap", drift.cap, "Generation cap per trial")->capture_default_str();
    cmd_drift->add_option("--seed", drift.seed, "Master seed")->required();
    cmd_drift->add_option("--threads", drift.threads, "Worker threads")->capture_default_str();

    dynbv::AnalyticExperiment analytic;
    auto* cmd_analytic =
        app.add_subcommand("analytic", "Evaluate f0, f1, c0, eps*, mu0 over a c grid");
    cmd_analytic->add_option("--c", analytic.c_grid, "Mutation parameter grid")
        ->delimiter(',')
        ->required();
    cmd_analytic->add_option("--truncation", analytic.series.truncation, "Series truncation")
        ->capture_default_str();

    dynbv::OracleCheckExperiment oracle;
    auto* cmd_oracle =
        app.add_subcommand("oracle-check", "Exact enumeration vs closed formulas");
    cmd_oracle->add_option("--max-r", oracle.max_r, "Discard-triple r range")->capture_default_str();
    cmd_oracle->add_option("--max-k", oracle.max_k, "Discard-triple k range")->capture_default_str();
    cmd_oracle->add_option("--pair-max-r", oracle.pair_max_r, "Acceptance-probability r range")
        ->capture_default_str();
    cmd_oracle->add_option("--sym-max-r", oracle.sym_max_r, "Symmetry-check r range")
        ->capture_default_str();

    dynbv::RuntimeExperiment runtime;
    auto* cmd_runtime = app.add_subcommand("runtime", "Optimum-hitting runs over an n grid");
    cmd_runtime->add_option("--n", runtime.n_grid, "Dimension grid")->delimiter(',');
    cmd_runtime->add_option("--mu", runtime.mu, "Population size")->capture_default_str();
    cmd_runtime->add_option("--c", runtime.c, "Mutation parameter")->capture_default_str();
    cmd_runtime->add_option("--crossover", runtime.crossover, "Crossover probability")
        ->capture_default_str();
    cmd_runtime->add_option("--start-eps", runtime.start_eps, "Initial zero-bit fraction")
        ->capture_default_str();
    cmd_runtime->add_option("--runs", runtime.runs, "Runs per n")->capture_default_str();
    cmd_runtime->add_option("--budget-factor", runtime.budget_factor,
                            "Budget = factor * n * ln n")
        ->capture_default_str();
    cmd_runtime->add_option("--seed", runtime.seed, "Master seed")->required();
    cmd_runtime->add_option("--threads", runtime.threads, "Worker threads")->capture_default_str();

    dynbv::ThresholdExperiment threshold;
    std::string fitness_name = "dynbv";
    auto* cmd_threshold =
        app.add_subcommand("threshold", "Bisect the drift sign change in c at fixed eps");
    cmd_threshold
        ->add_option("--fitness", fitness_name, "dynbv, exponential or geometric")
        ->capture_default_str();
    cmd_threshold->add_option("--geom-p", threshold.geom_p, "Geometric parameter p")
        ->capture_default_str();
    cmd_threshold->add_option("--n", threshold.n, "Dimension")->capture_default_str();
    cmd_threshold->add_option("--mu", threshold.mu, "Population size")->capture_default_str();
    cmd_threshold->add_option("--eps", threshold.eps, "Zero-bit fraction")->capture_default_str();
    cmd_threshold->add_option("--c-lo", threshold.c_lo, "Bracket low end")->capture_default_str();
    cmd_threshold->add_option("--c-hi", threshold.c_hi, "Bracket high end")->capture_default_str();
    cmd_threshold->add_option("--resolution", threshold.resolution, "Final bracket width")
        ->capture_default_str();
    cmd_threshold->add_option("--batch", threshold.batch, "Trials per adaptive batch")
        ->capture_default_str();
    cmd_threshold->add_option("--max-trials", threshold.max_trials_per_point,
                              "Trial cap per bisection point")
        ->capture_default_str();
    cmd_threshold->add_option("--seed", threshold.seed, "Master seed")->required();
    cmd_threshold->add_option("--threads", threshold.threads, "Worker threads")
        ->capture_default_str();
    auto* points_opt = cmd_threshold->add_flag("--points", "Emit per-point diagnostics instead "
                                               "of the summary row");

    // global --format/--out may appear after the subcommand name
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_drift->parsed()) {
            try {
                return emit(dynbv::run_drift(drift), format, out_path, /*svg_allowed=*/true);
            } catch (const dynbv::EstimateInvalid& e) {
                std::cerr << "estimate validity failure: " << e.what() << "\n";
                return 3;
            }
        }
        if (cmd_analytic->parsed()) return emit(dynbv::run_analytic(analytic), format, out_path);
        if (cmd_oracle->parsed()) {
            auto rep = dynbv::run_oracle_check(oracle);
            int rc = emit(rep.table, format, out_path);
            if (rc != 0) return rc;
            if (!rep.all_pass) {
                std::cerr << "oracle-check: MISMATCH\n";
                return 1;
            }
            return 0;
        }
        if (cmd_runtime->parsed()) return emit(dynbv::run_runtime(runtime), format, out_path);
        if (cmd_threshold->parsed()) {
            if (fitness_name == "dynbv")
                threshold.fitness = dynbv::ThresholdExperiment::Fitness::dynbv;
            else if (fitness_name == "exponential")
                threshold.fitness = dynbv::ThresholdExperiment::Fitness::exponential;
            else if (fitness_name == "geometric")
                threshold.fitness = dynbv::ThresholdExperiment::Fitness::geometric;
            else {
                std::cerr << "unknown fitness: " << fitness_name << "\n";
                return 2;
            }
            auto res = dynbv::run_threshold(threshold);
            return emit(points_opt->count() ? res.points : res.summary, format, out_path);
        }
    } catch (const dynbv::NoSignChange& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
