#include "hyperik/runner.hpp"

#include <chrono>
#include <cmath>

namespace hyperik {

std::string_view to_string(AlgorithmId id) {
    switch (id) {
        case AlgorithmId::Pso: return "pso";
        case AlgorithmId::Cro: return "cro";
        case AlgorithmId::Bes: return "bes";
        case AlgorithmId::Efo: return "efo";
        case AlgorithmId::Mvo: return "mvo";
        case AlgorithmId::Nro: return "nro";
    }
    return "?";
}

std::optional<AlgorithmId> algorithm_from_string(std::string_view name) {
    for (AlgorithmId id : kAllAlgorithms) {
        if (name == to_string(id)) return id;
    }
    return std::nullopt;
}

std::unique_ptr<Optimizer> make_optimizer(AlgorithmId id,
                                          const AlgorithmParams& params) {
    switch (id) {
        case AlgorithmId::Pso: return std::make_unique<PsoOptimizer>(params.pso);
        case AlgorithmId::Cro: return std::make_unique<CroOptimizer>(params.cro);
        case AlgorithmId::Bes: return std::make_unique<BesOptimizer>(params.bes);
        case AlgorithmId::Efo: return std::make_unique<EfoOptimizer>(params.efo);
        case AlgorithmId::Mvo: return std::make_unique<MvoOptimizer>(params.mvo);
        case AlgorithmId::Nro: return std::make_unique<NroOptimizer>(params.nro);
    }
    throw ConfigError("unknown algorithm id");
}

namespace {

void validate(const SearchProblem& problem, const RunConfig& config) {
    if (config.population < 2) {
        throw ConfigError("population must be at least 2");
    }
    if (config.iterations < 1) {
        throw ConfigError("iterations must be at least 1");
    }
    if (problem.dimension <= 0 ||
        problem.lower.size() != problem.dimension ||
        problem.upper.size() != problem.dimension || !problem.evaluate) {
        throw ConfigError("malformed search problem");
    }
    for (int d = 0; d < problem.dimension; ++d) {
        if (!(problem.lower[d] < problem.upper[d]) ||
            !std::isfinite(problem.lower[d]) || !std::isfinite(problem.upper[d])) {
            throw ConfigError("problem bounds must satisfy lower < upper");
        }
    }
}

} // namespace

ConvergenceTrace run(const SearchProblem& problem, const RunConfig& config,
                     Optimizer& algorithm) {
    validate(problem, config);
    Rng rng(config.seed);
    algorithm.init(problem, config.population, rng);

    // Elitist tracker outside the algorithm state: the trace is best-so-far
    // even if an algorithm discards its best internally.
    Candidate best = algorithm.best();
    ConvergenceTrace trace;
    trace.best_cost_per_iteration.reserve(config.iterations);

    const auto start = std::chrono::steady_clock::now();
    for (int iteration = 0; iteration < config.iterations; ++iteration) {
        algorithm.step(problem, iteration, config.iterations, rng);
        if (algorithm.best().cost < best.cost) best = algorithm.best();
        trace.best_cost_per_iteration.push_back(best.cost);
    }
    const auto stop = std::chrono::steady_clock::now();

    trace.wall_time_seconds = std::chrono::duration<double>(stop - start).count();
    trace.final_best = std::move(best);
    return trace;
}

ConvergenceTrace run(const SearchProblem& problem, const RunConfig& config,
                     AlgorithmId algorithm) {
    const auto optimizer = make_optimizer(algorithm, config.params);
    return run(problem, config, *optimizer);
}

} // namespace hyperik
