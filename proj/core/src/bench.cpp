#include "hyperik/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

namespace hyperik {

using nlohmann::json;

namespace {

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& context) {
    for (const auto& [key, value] : j.items()) {
        if (std::find_if(allowed.begin(), allowed.end(), [&key](const char* k) {
                return key == k;
            }) == allowed.end()) {
            throw ConfigError("unknown key \"" + key + "\" in " + context);
        }
    }
}

double get_number(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) {
        throw ConfigError(std::string("key \"") + key + "\" must be a number");
    }
    return j[key].get<double>();
}

int get_int(const json& j, const char* key, int fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_integer()) {
        throw ConfigError(std::string("key \"") + key + "\" must be an integer");
    }
    return j[key].get<int>();
}

void parse_params(const json& j, AlgorithmParams& params, int iterations) {
    check_keys(j, {"pso", "cro", "bes", "efo", "mvo", "nro"}, "\"params\"");
    if (j.contains("pso")) {
        const json& p = j["pso"];
        check_keys(p, {"c1", "c2", "w_min", "w_max"}, "\"params.pso\"");
        params.pso.c1 = get_number(p, "c1", params.pso.c1);
        params.pso.c2 = get_number(p, "c2", params.pso.c2);
        params.pso.w_min = get_number(p, "w_min", params.pso.w_min);
        params.pso.w_max = get_number(p, "w_max", params.pso.w_max);
    }
    if (j.contains("cro")) {
        const json& p = j["cro"];
        check_keys(p,
                   {"reef_rows", "reef_cols", "rho0", "f_broadcast", "f_asexual",
                    "f_depredation", "p_depredation", "larva_attempts",
                    "mutation_scale"},
                   "\"params.cro\"");
        params.cro.reef_rows = get_int(p, "reef_rows", params.cro.reef_rows);
        params.cro.reef_cols = get_int(p, "reef_cols", params.cro.reef_cols);
        params.cro.rho0 = get_number(p, "rho0", params.cro.rho0);
        params.cro.f_broadcast = get_number(p, "f_broadcast", params.cro.f_broadcast);
        params.cro.f_asexual = get_number(p, "f_asexual", params.cro.f_asexual);
        params.cro.f_depredation =
            get_number(p, "f_depredation", params.cro.f_depredation);
        params.cro.p_depredation =
            get_number(p, "p_depredation", params.cro.p_depredation);
        params.cro.larva_attempts =
            get_int(p, "larva_attempts", params.cro.larva_attempts);
        params.cro.mutation_scale =
            get_number(p, "mutation_scale", params.cro.mutation_scale);
    }
    if (j.contains("bes")) {
        const json& p = j["bes"];
        check_keys(p, {"a_corner", "r_cycles", "alpha_intensity", "c1", "c2"},
                   "\"params.bes\"");
        params.bes.a_corner = get_number(p, "a_corner", params.bes.a_corner);
        params.bes.r_cycles = get_number(p, "r_cycles", params.bes.r_cycles);
        params.bes.alpha_intensity =
            get_number(p, "alpha_intensity", params.bes.alpha_intensity);
        params.bes.c1 = get_number(p, "c1", params.bes.c1);
        params.bes.c2 = get_number(p, "c2", params.bes.c2);
    }
    if (j.contains("efo")) {
        const json& p = j["efo"];
        check_keys(p,
                   {"ps_rate", "r_rate", "p_field", "n_field", "phi",
                    "generations_per_step"},
                   "\"params.efo\"");
        params.efo.ps_rate = get_number(p, "ps_rate", params.efo.ps_rate);
        params.efo.r_rate = get_number(p, "r_rate", params.efo.r_rate);
        params.efo.p_field = get_number(p, "p_field", params.efo.p_field);
        params.efo.n_field = get_number(p, "n_field", params.efo.n_field);
        params.efo.phi = get_number(p, "phi", params.efo.phi);
        params.efo.generations_per_step =
            get_int(p, "generations_per_step", params.efo.generations_per_step);
    }
    if (j.contains("mvo")) {
        const json& p = j["mvo"];
        check_keys(p, {"wep_min", "wep_max", "p_exploit", "max_iterations"},
                   "\"params.mvo\"");
        params.mvo.wep_min = get_number(p, "wep_min", params.mvo.wep_min);
        params.mvo.wep_max = get_number(p, "wep_max", params.mvo.wep_max);
        params.mvo.p_exploit = get_number(p, "p_exploit", params.mvo.p_exploit);
        params.mvo.max_iterations = get_int(p, "max_iterations", iterations);
    } else {
        params.mvo.max_iterations = iterations;
    }
    if (j.contains("nro")) {
        const json& p = j["nro"];
        check_keys(p, {"freq", "scaling", "p_beta", "p_fi"}, "\"params.nro\"");
        params.nro.freq = get_number(p, "freq", params.nro.freq);
        params.nro.scaling = get_number(p, "scaling", params.nro.scaling);
        params.nro.p_beta = get_number(p, "p_beta", params.nro.p_beta);
        params.nro.p_fi = get_number(p, "p_fi", params.nro.p_fi);
    }
}

RobotModel parse_model(const json& j) {
    if (!j.is_array() || j.size() != 9) {
        throw ConfigError("\"model\" must be an array of 9 DH rows");
    }
    std::vector<DHRow> rows;
    for (const json& r : j) {
        if (!r.is_array() || r.size() != 5) {
            throw ConfigError("each \"model\" row must be "
                              "[a_cm, alpha_deg, d_cm, theta_min_deg, theta_max_deg]");
        }
        rows.push_back({r[0].get<double>(), deg2rad(r[1].get<double>()),
                        r[2].get<double>(), deg2rad(r[3].get<double>()),
                        deg2rad(r[4].get<double>())});
    }
    return RobotModel(std::move(rows));
}

void validate_config(const BenchConfig& config) {
    if (config.algorithms.empty()) {
        throw ConfigError("\"algorithms\" must not be empty");
    }
    if (config.targets.empty()) {
        throw ConfigError("\"targets\" must not be empty");
    }
    if (config.seeds.empty()) {
        throw ConfigError("\"seeds\" must not be empty");
    }
    if (config.population < 2) {
        throw ConfigError("\"population\" must be at least 2");
    }
    if (config.iterations < 1) {
        throw ConfigError("\"iterations\" must be at least 1");
    }
}

} // namespace

BenchConfig parse_bench_config(const json& j) {
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    check_keys(j,
               {"algorithms", "targets", "seeds", "population", "iterations",
                "include_times", "output", "params", "model"},
               "config");
    BenchConfig config;

    if (!j.contains("algorithms") || !j["algorithms"].is_array()) {
        throw ConfigError("\"algorithms\" must be an array of algorithm names");
    }
    for (const json& a : j["algorithms"]) {
        const auto id = algorithm_from_string(a.get<std::string>());
        if (!id) {
            throw ConfigError("unknown algorithm \"" + a.get<std::string>() +
                              "\" in \"algorithms\"");
        }
        config.algorithms.push_back(*id);
    }

    if (!j.contains("targets") || !j["targets"].is_array()) {
        throw ConfigError("\"targets\" must be an array of [x, y, z] points");
    }
    for (const json& t : j["targets"]) {
        if (!t.is_array() || t.size() != 3) {
            throw ConfigError("each target must be an [x, y, z] array");
        }
        config.targets.push_back(
            {t[0].get<double>(), t[1].get<double>(), t[2].get<double>()});
    }

    if (!j.contains("seeds") || !j["seeds"].is_array()) {
        throw ConfigError("\"seeds\" must be an array of integers");
    }
    for (const json& s : j["seeds"]) {
        if (!s.is_number_integer()) {
            throw ConfigError("each seed must be an integer");
        }
        config.seeds.push_back(s.get<std::uint64_t>());
    }

    config.population = get_int(j, "population", config.population);
    config.iterations = get_int(j, "iterations", config.iterations);
    if (j.contains("include_times")) {
        if (!j["include_times"].is_boolean()) {
            throw ConfigError("\"include_times\" must be a boolean");
        }
        config.include_times = j["include_times"].get<bool>();
    }
    if (j.contains("output")) {
        config.output_dir = j["output"].get<std::string>();
    }
    if (j.contains("params")) {
        parse_params(j["params"], config.params, config.iterations);
    } else {
        config.params.mvo.max_iterations = config.iterations;
    }
    if (j.contains("model")) {
        config.model = parse_model(j["model"]);
    }
    validate_config(config);
    return config;
}

BenchConfig load_bench_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path.string());
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config is not valid JSON: " + std::string(e.what()));
    }
    return parse_bench_config(j);
}

SolveRecord solve_single(const RobotModel& model, const Position& target,
                         AlgorithmId algorithm, const RunConfig& config,
                         const ProblemFactory& factory) {
    const SearchProblem problem =
        factory ? factory(model, target) : make_ik_problem(model, target);
    const ConvergenceTrace trace = run(problem, config, algorithm);

    SolveRecord record;
    record.algorithm = algorithm;
    record.target = target;
    record.seed = config.seed;
    record.wall_time_s = trace.wall_time_seconds;
    record.trace = trace.best_cost_per_iteration;
    for (int d = 0; d < problem.dimension; ++d) {
        record.angles_deg[d] = rad2deg(trace.final_best.position[d]);
    }
    // Re-evaluated at the solution rather than copied from the optimizer's
    // bookkeeping. The printed degree angles reproduce this value within
    // 1e-12 (the degree/radian round trip costs about one ulp per joint).
    record.final_error = problem.evaluate(trace.final_best.position);
    return record;
}

BenchReport run_bench(const BenchConfig& config, int workers,
                      const ProblemFactory& factory) {
    validate_config(config);

    struct Task {
        AlgorithmId algorithm;
        Position target;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (AlgorithmId algorithm : config.algorithms) {
        for (const Position& target : config.targets) {
            for (std::uint64_t seed : config.seeds) {
                tasks.push_back({algorithm, target, seed});
            }
        }
    }

    BenchReport report;
    report.config = config;
    report.records.resize(tasks.size());

    RunConfig base;
    base.population = config.population;
    base.iterations = config.iterations;
    base.params = config.params;

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker_loop = [&] {
        try {
            for (std::size_t i = next.fetch_add(1);
                 i < tasks.size() && !failed.load(std::memory_order_relaxed);
                 i = next.fetch_add(1)) {
                RunConfig rc = base;
                rc.seed = tasks[i].seed;
                report.records[i] = solve_single(config.model, tasks[i].target,
                                                 tasks[i].algorithm, rc, factory);
            }
        } catch (...) {
            const std::scoped_lock lock(error_mutex);
            if (!error) error = std::current_exception();
            failed.store(true, std::memory_order_relaxed);
        }
    };

    workers = std::max(workers, 1);
    if (workers == 1) {
        worker_loop();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(worker_loop);
        }
        for (std::thread& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    // Per-algorithm aggregates over (targets x seeds), in config order.
    const std::size_t runs_per_algorithm =
        config.targets.size() * config.seeds.size();
    for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
        AlgorithmAggregate agg;
        std::vector<double> errors;
        errors.reserve(runs_per_algorithm);
        for (std::size_t k = 0; k < runs_per_algorithm; ++k) {
            const SolveRecord& r = report.records[a * runs_per_algorithm + k];
            agg.mean_error += r.final_error;
            agg.mean_time_s += r.wall_time_s;
            errors.push_back(r.final_error);
        }
        agg.mean_error /= static_cast<double>(runs_per_algorithm);
        agg.mean_time_s /= static_cast<double>(runs_per_algorithm);
        std::sort(errors.begin(), errors.end());
        const std::size_t mid = errors.size() / 2;
        agg.median_error = errors.size() % 2 == 1
                               ? errors[mid]
                               : 0.5 * (errors[mid - 1] + errors[mid]);
        report.aggregates.emplace_back(config.algorithms[a], agg);
    }
    return report;
}

std::vector<Position> sample_workspace_points(const RobotModel& model,
                                              int count, std::uint64_t seed) {
    if (count < 1) throw ConfigError("point count must be at least 1");
    Rng rng(seed);
    const Eigen::VectorXd lower = model.lower_bounds();
    const Eigen::VectorXd upper = model.upper_bounds();
    Eigen::VectorXd q(model.dof());
    std::vector<Position> points;
    points.reserve(count);
    for (int k = 0; k < count; ++k) {
        for (int d = 0; d < model.dof(); ++d) {
            q[d] = rng.uniform(lower[d], upper[d]);
        }
        points.push_back(forward_kinematics(model, q));
    }
    return points;
}

std::string format_sci(double value) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::scientific, 5);
    return std::string(buf.data(), res.ptr);
}

namespace {

std::string point_label(const Position& p) {
    return "(" + format_sci(p.x) + "; " + format_sci(p.y) + "; " +
           format_sci(p.z) + ")";
}

} // namespace

std::string records_csv(const BenchReport& report) {
    std::ostringstream out;
    out << "algorithm,target_x,target_y,target_z,seed,final_error_cm";
    for (int d = 1; d <= 9; ++d) out << ",theta" << d << "_deg";
    if (report.config.include_times) out << ",wall_time_s";
    out << "\n";
    for (const SolveRecord& r : report.records) {
        out << to_string(r.algorithm) << "," << format_sci(r.target.x) << ","
            << format_sci(r.target.y) << "," << format_sci(r.target.z) << ","
            << r.seed << "," << format_sci(r.final_error);
        for (double a : r.angles_deg) out << "," << format_sci(a);
        if (report.config.include_times) out << "," << format_sci(r.wall_time_s);
        out << "\n";
    }
    return out.str();
}

std::string aggregate_csv(const BenchReport& report) {
    const BenchConfig& config = report.config;
    const std::size_t n_seeds = config.seeds.size();
    const std::size_t runs_per_algorithm = config.targets.size() * n_seeds;

    std::ostringstream out;
    out << "point";
    for (AlgorithmId id : config.algorithms) out << "," << to_string(id);
    out << "\n";
    for (std::size_t t = 0; t < config.targets.size(); ++t) {
        out << point_label(config.targets[t]);
        for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
            double mean = 0.0;
            for (std::size_t s = 0; s < n_seeds; ++s) {
                mean += report.records[a * runs_per_algorithm + t * n_seeds + s]
                            .final_error;
            }
            mean /= static_cast<double>(n_seeds);
            out << "," << format_sci(mean);
        }
        out << "\n";
    }
    out << "Average Error";
    for (const auto& [id, agg] : report.aggregates) {
        out << "," << format_sci(agg.mean_error);
    }
    out << "\n";
    if (config.include_times) {
        out << "Average Time (s)";
        for (const auto& [id, agg] : report.aggregates) {
            out << "," << format_sci(agg.mean_time_s);
        }
        out << "\n";
    }
    return out.str();
}

std::string report_json(const BenchReport& report) {
    const BenchConfig& config = report.config;
    json j;
    j["population"] = config.population;
    j["iterations"] = config.iterations;
    json algorithms = json::array();
    for (AlgorithmId id : config.algorithms) {
        algorithms.push_back(std::string(to_string(id)));
    }
    j["algorithms"] = algorithms;
    j["seeds"] = config.seeds;
    json targets = json::array();
    for (const Position& t : config.targets) {
        targets.push_back({t.x, t.y, t.z});
    }
    j["targets"] = targets;

    json records = json::array();
    for (const SolveRecord& r : report.records) {
        json rec;
        rec["algorithm"] = std::string(to_string(r.algorithm));
        rec["target"] = {r.target.x, r.target.y, r.target.z};
        rec["seed"] = r.seed;
        rec["final_error_cm"] = r.final_error;
        rec["angles_deg"] = r.angles_deg;
        rec["wall_time_s"] = r.wall_time_s;
        records.push_back(std::move(rec));
    }
    j["records"] = std::move(records);

    json aggregates;
    for (const auto& [id, agg] : report.aggregates) {
        aggregates[std::string(to_string(id))] = {
            {"mean_error_cm", agg.mean_error},
            {"median_error_cm", agg.median_error},
            {"mean_time_s", agg.mean_time_s}};
    }
    j["aggregates"] = std::move(aggregates);
    return j.dump(2) + "\n";
}

std::string trace_csv(const std::vector<double>& best_cost_per_iteration) {
    std::ostringstream out;
    out << "iteration,best_error_cm\n";
    for (std::size_t i = 0; i < best_cost_per_iteration.size(); ++i) {
        out << (i + 1) << "," << format_sci(best_cost_per_iteration[i]) << "\n";
    }
    return out.str();
}

std::string points_csv(const std::vector<Position>& points) {
    std::ostringstream out;
    out << "x,y,z\n";
    for (const Position& p : points) {
        out << format_sci(p.x) << "," << format_sci(p.y) << ","
            << format_sci(p.z) << "\n";
    }
    return out.str();
}

void write_bench_outputs(const BenchReport& report,
                         const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const auto write = [&dir](const char* name, const std::string& content) {
        std::ofstream out(dir / name, std::ios::binary);
        if (!out) {
            throw ConfigError("cannot write output file: " +
                              (dir / name).string());
        }
        out << content;
    };
    write("records.csv", records_csv(report));
    write("aggregate.csv", aggregate_csv(report));
    write("report.json", report_json(report));
}

} // namespace hyperik
