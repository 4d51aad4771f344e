#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hyperik/runner.hpp"

namespace hyperik {

/// One benchmark campaign: every (algorithm x target x seed) combination is
/// run with the same population and iteration budget.
struct BenchConfig {
    std::vector<AlgorithmId> algorithms;
    std::vector<Position> targets;
    std::vector<std::uint64_t> seeds;
    int population = 20;
    int iterations = 500;
    // Wall times are inherently volatile, so CSV outputs omit them unless
    // asked; the JSON report always carries them.
    bool include_times = false;
    std::filesystem::path output_dir = "bench_out";
    AlgorithmParams params;
    RobotModel model;
};

/// Strict parse: unknown or malformed keys raise ConfigError naming the key.
BenchConfig parse_bench_config(const nlohmann::json& j);
BenchConfig load_bench_config(const std::filesystem::path& path);

struct SolveRecord {
    AlgorithmId algorithm = AlgorithmId::Pso;
    Position target;
    std::uint64_t seed = 0;
    double final_error = 0.0; // objective re-evaluated at the reported angles
    std::array<double, 9> angles_deg{};
    double wall_time_s = 0.0;
    std::vector<double> trace; // best cost after each iteration
};

struct AlgorithmAggregate {
    double mean_error = 0.0;
    double median_error = 0.0;
    double mean_time_s = 0.0;
};

struct BenchReport {
    BenchConfig config;
    std::vector<SolveRecord> records; // config order: algorithm, target, seed
    std::vector<std::pair<AlgorithmId, AlgorithmAggregate>> aggregates;
};

using ProblemFactory =
    std::function<SearchProblem(const RobotModel&, const Position&)>;

/// One optimization run, reported with angles in degrees and the error
/// recomputed from those angles.
SolveRecord solve_single(const RobotModel& model, const Position& target,
                         AlgorithmId algorithm, const RunConfig& config,
                         const ProblemFactory& factory = {});

/// Runs the whole campaign, fanning runs over `workers` threads. Records are
/// gathered in config order, so the report and its CSV serializations are
/// byte-identical regardless of worker count.
BenchReport run_bench(const BenchConfig& config, int workers = 1,
                      const ProblemFactory& factory = {});

/// Positions reached from uniformly sampled feasible joint configurations;
/// reachable by construction.
std::vector<Position> sample_workspace_points(const RobotModel& model,
                                              int count, std::uint64_t seed);

/// Scientific notation with 6 significant digits, locale-independent.
std::string format_sci(double value);

std::string records_csv(const BenchReport& report);
std::string aggregate_csv(const BenchReport& report);
std::string report_json(const BenchReport& report);
std::string trace_csv(const std::vector<double>& best_cost_per_iteration);
std::string points_csv(const std::vector<Position>& points);

/// Writes records.csv, aggregate.csv and report.json under the directory.
void write_bench_outputs(const BenchReport& report,
                         const std::filesystem::path& dir);

} // namespace hyperik
