// Command-line harness around the hyperik library: single IK solves,
// benchmark campaigns with CSV/JSON reports, convergence-trace export,
// forward-kinematics checks and workspace point sampling.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hyperik/bench.hpp"

namespace {

using namespace hyperik;

constexpr int kUsageError = 2;

Position parse_target(const std::string& text) {
    std::istringstream in(text);
    Position p;
    char c1 = 0, c2 = 0;
    if (!(in >> p.x >> c1 >> p.y >> c2 >> p.z) || c1 != ',' || c2 != ',' ||
        !(in >> std::ws).eof()) {
        throw ConfigError("target must be \"x,y,z\", got \"" + text + "\"");
    }
    return p;
}

AlgorithmId parse_algorithm(const std::string& name) {
    const auto id = algorithm_from_string(name);
    if (!id) {
        throw ConfigError("unknown algorithm \"" + name +
                          "\" (expected pso, cro, bes, efo, mvo or nro)");
    }
    return *id;
}

void warn_if_unreachable(const RobotModel& model, const Position& target) {
    const Position center = model.workspace_center();
    const double distance = fitness(target, center);
    const double reach = model.workspace_radius();
    if (distance > reach) {
        std::fprintf(stderr,
                     "warning: target (%g, %g, %g) is %.3f cm from the shoulder, "
                     "beyond the %.3f cm reach; solving for the closest "
                     "reachable point\n",
                     target.x, target.y, target.z, distance, reach);
    }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write output file: " + path.string());
    out << content;
}

struct CommonOptions {
    std::string target_text;
    std::string algorithm = "bes";
    std::uint64_t seed = 1;
    // 0 = not given on the command line; fall back to config file or the
    // standard 20x500 protocol.
    int population = 0;
    int iterations = 0;
    std::string config_path;
    std::string out_path;
};

// Base run settings, optionally taken from a bench config file so solve and
// trace share parameter overrides with bench campaigns. Explicit flags win.
std::pair<RobotModel, RunConfig> make_run_setup(const CommonOptions& opt) {
    RobotModel model;
    RunConfig rc;
    if (!opt.config_path.empty()) {
        const BenchConfig file = load_bench_config(opt.config_path);
        model = file.model;
        rc.population = file.population;
        rc.iterations = file.iterations;
        rc.params = file.params;
    }
    if (opt.population > 0) rc.population = opt.population;
    if (opt.iterations > 0) {
        rc.iterations = opt.iterations;
        if (opt.config_path.empty()) rc.params.mvo.max_iterations = opt.iterations;
    }
    rc.seed = opt.seed;
    return {model, rc};
}

int cmd_solve(const CommonOptions& opt) {
    const Position target = parse_target(opt.target_text);
    const AlgorithmId algorithm = parse_algorithm(opt.algorithm);
    auto [model, rc] = make_run_setup(opt);
    warn_if_unreachable(model, target);

    const SolveRecord record = solve_single(model, target, algorithm, rc);
    std::printf("algorithm:      %s\n", std::string(to_string(algorithm)).c_str());
    std::printf("target (cm):    (%g, %g, %g)\n", target.x, target.y, target.z);
    std::printf("final error:    %s cm\n", format_sci(record.final_error).c_str());
    std::printf("joint angles (deg):");
    for (double a : record.angles_deg) std::printf(" %.4f", a);
    std::printf("\n");
    std::printf("wall time:      %.3f s\n", record.wall_time_s);

    if (!opt.out_path.empty()) {
        BenchReport one;
        one.config.algorithms = {algorithm};
        one.config.targets = {target};
        one.config.seeds = {opt.seed};
        one.config.include_times = true;
        one.records = {record};
        one.aggregates = {{algorithm,
                           {record.final_error, record.final_error,
                            record.wall_time_s}}};
        write_file(opt.out_path, records_csv(one));
    }
    return 0;
}

int cmd_trace(const CommonOptions& opt) {
    const Position target = parse_target(opt.target_text);
    const AlgorithmId algorithm = parse_algorithm(opt.algorithm);
    auto [model, rc] = make_run_setup(opt);
    warn_if_unreachable(model, target);

    const SolveRecord record = solve_single(model, target, algorithm, rc);
    const std::string csv = trace_csv(record.trace);
    if (opt.out_path.empty()) {
        std::fputs(csv.c_str(), stdout);
    } else {
        write_file(opt.out_path, csv);
    }
    return 0;
}

int cmd_fk(const std::vector<double>& angles_deg) {
    RobotModel model;
    Eigen::VectorXd q(model.dof());
    for (int d = 0; d < model.dof(); ++d) q[d] = deg2rad(angles_deg[d]);
    const Position p = forward_kinematics(model, q);
    std::printf("%s %s %s\n", format_sci(p.x).c_str(), format_sci(p.y).c_str(),
                format_sci(p.z).c_str());
    return 0;
}

int cmd_sample_points(int count, std::uint64_t seed, const std::string& out) {
    RobotModel model;
    const std::string csv = points_csv(sample_workspace_points(model, count, seed));
    if (out.empty()) {
        std::fputs(csv.c_str(), stdout);
    } else {
        write_file(out, csv);
    }
    return 0;
}

int cmd_bench(const std::string& config_path, const std::string& out_override,
              int workers) {
    BenchConfig config = load_bench_config(config_path);
    if (!out_override.empty()) config.output_dir = out_override;

    const BenchReport report = run_bench(config, workers);
    write_bench_outputs(report, config.output_dir);

    std::printf("%zu runs (%zu algorithms x %zu targets x %zu seeds)\n",
                report.records.size(), config.algorithms.size(),
                config.targets.size(), config.seeds.size());
    std::printf("%-5s %-13s %-13s %s\n", "alg", "mean err", "median err",
                "mean time");
    for (const auto& [id, agg] : report.aggregates) {
        std::printf("%-5s %-13s %-13s %.3f s\n",
                    std::string(to_string(id)).c_str(),
                    format_sci(agg.mean_error).c_str(),
                    format_sci(agg.median_error).c_str(), agg.mean_time_s);
    }
    std::printf("outputs in %s: records.csv, aggregate.csv, report.json\n",
                config.output_dir.string().c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Inverse kinematics of a 9-DOF serial arm via six "
                 "metaheuristic optimizers"};
    app.require_subcommand(1);

    CommonOptions solve_opt;
    CLI::App* solve = app.add_subcommand("solve", "Solve IK for one target point");
    solve->add_option("--target", solve_opt.target_text, "Target point x,y,z (cm)")
        ->required();
    solve->add_option("--alg", solve_opt.algorithm,
                      "Algorithm: pso, cro, bes, efo, mvo, nro");
    solve->add_option("--seed", solve_opt.seed, "Random seed");
    solve->add_option("--pop", solve_opt.population, "Population size (default 20)");
    solve->add_option("--iters", solve_opt.iterations, "Iteration count (default 500)");
    solve->add_option("--config", solve_opt.config_path,
                      "Bench config file supplying parameter overrides");
    solve->add_option("--out", solve_opt.out_path, "Write the record as CSV");

    CommonOptions trace_opt;
    CLI::App* trace = app.add_subcommand(
        "trace", "Export per-iteration best error as CSV");
    trace->add_option("--target", trace_opt.target_text, "Target point x,y,z (cm)")
        ->required();
    trace->add_option("--alg", trace_opt.algorithm,
                      "Algorithm: pso, cro, bes, efo, mvo, nro");
    trace->add_option("--seed", trace_opt.seed, "Random seed");
    trace->add_option("--pop", trace_opt.population, "Population size (default 20)");
    trace->add_option("--iters", trace_opt.iterations, "Iteration count (default 500)");
    trace->add_option("--config", trace_opt.config_path,
                      "Bench config file supplying parameter overrides");
    trace->add_option("--out", trace_opt.out_path, "Output CSV path (default stdout)");

    std::vector<double> fk_angles;
    CLI::App* fk = app.add_subcommand(
        "fk", "Forward kinematics of 9 joint angles given in degrees");
    fk->add_option("angles", fk_angles, "theta1..theta9 in degrees")
        ->expected(9);

    int sp_count = 10;
    std::uint64_t sp_seed = 7;
    std::string sp_out;
    CLI::App* sample = app.add_subcommand(
        "sample-points", "Sample reachable workspace points as CSV");
    sample->add_option("--count", sp_count, "Number of points");
    sample->add_option("--seed", sp_seed, "Random seed");
    sample->add_option("--out", sp_out, "Output CSV path (default stdout)");

    std::string bench_config;
    std::string bench_out;
    int bench_workers = 1;
    CLI::App* bench = app.add_subcommand(
        "bench", "Run an (algorithms x targets x seeds) benchmark campaign");
    bench->add_option("--config", bench_config, "Campaign config JSON")->required();
    bench->add_option("--out", bench_out, "Output directory (overrides config)");
    bench->add_option("--workers", bench_workers, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_opt);
        if (trace->parsed()) return cmd_trace(trace_opt);
        if (fk->parsed()) return cmd_fk(fk_angles);
        if (sample->parsed()) return cmd_sample_points(sp_count, sp_seed, sp_out);
        if (bench->parsed()) return cmd_bench(bench_config, bench_out, bench_workers);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsageError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return kUsageError;
}
