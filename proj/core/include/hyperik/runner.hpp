#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "hyperik/bes.hpp"
#include "hyperik/cro.hpp"
#include "hyperik/efo.hpp"
#include "hyperik/errors.hpp"
#include "hyperik/mvo.hpp"
#include "hyperik/nro.hpp"
#include "hyperik/optimizer.hpp"
#include "hyperik/pso.hpp"

namespace hyperik {

enum class AlgorithmId { Pso, Cro, Bes, Efo, Mvo, Nro };

inline constexpr std::array<AlgorithmId, 6> kAllAlgorithms = {
    AlgorithmId::Pso, AlgorithmId::Cro, AlgorithmId::Bes,
    AlgorithmId::Efo, AlgorithmId::Mvo, AlgorithmId::Nro};

std::string_view to_string(AlgorithmId id);
std::optional<AlgorithmId> algorithm_from_string(std::string_view name);

struct AlgorithmParams {
    PsoParams pso;
    CroParams cro;
    BesParams bes;
    EfoParams efo;
    MvoParams mvo;
    NroParams nro;
};

std::unique_ptr<Optimizer> make_optimizer(AlgorithmId id,
                                          const AlgorithmParams& params);

/// Seeded run protocol: population and iteration budget plus the parameter
/// records of every algorithm.
struct RunConfig {
    int population = 20;
    int iterations = 500;
    std::uint64_t seed = 1;
    AlgorithmParams params;
};

/// Best-so-far cost after each iteration (non-increasing by construction),
/// the best candidate of the run, and the wall time of the iteration loop.
struct ConvergenceTrace {
    std::vector<double> best_cost_per_iteration;
    Candidate final_best;
    double wall_time_seconds = 0.0;
};

/// Runs `config.iterations` steps of the given optimizer on the problem.
/// Identical (problem, config) inputs produce identical traces; wall time
/// is the only field that varies between invocations.
/// Throws ConfigError for population < 2, iterations < 1 or invalid bounds.
ConvergenceTrace run(const SearchProblem& problem, const RunConfig& config,
                     Optimizer& algorithm);
ConvergenceTrace run(const SearchProblem& problem, const RunConfig& config,
                     AlgorithmId algorithm);

} // namespace hyperik
