#include "hyperik/efo.hpp"

#include <algorithm>
#include <cmath>

#include "hyperik/errors.hpp"

namespace hyperik {

EfoFields efo_fields(int population_size, const EfoParams& params) {
    EfoFields f;
    f.n_positive = static_cast<int>(std::ceil(params.p_field * population_size));
    f.n_negative = static_cast<int>(std::ceil(params.n_field * population_size));
    f.n_neutral = population_size - f.n_positive - f.n_negative;
    return f;
}

EfoState efo_init(const SearchProblem& problem, int population, Rng& rng) {
    EfoState state;
    state.population.reserve(population);
    for (int i = 0; i < population; ++i) {
        state.population.push_back(sample_uniform(problem, rng));
    }
    std::stable_sort(state.population.begin(), state.population.end(),
                     [](const Candidate& a, const Candidate& b) {
                         return a.cost < b.cost;
                     });
    return state;
}

bool efo_insert(EfoState& state, Candidate candidate) {
    if (candidate.cost >= state.population.back().cost) return false;
    const auto pos = std::upper_bound(
        state.population.begin(), state.population.end(), candidate.cost,
        [](double cost, const Candidate& c) { return cost < c.cost; });
    state.population.insert(pos, std::move(candidate));
    state.population.pop_back();
    return true;
}

namespace {

void efo_generate(EfoState& state, const SearchProblem& problem,
                  const EfoParams& params, Rng& rng) {
    const int n = static_cast<int>(state.population.size());
    const EfoFields f = efo_fields(n, params);
    const int neutral_begin = f.n_positive;
    const int negative_begin = f.n_positive + f.n_neutral;

    const double force = rng.uniform01();
    // One donor per field for the whole particle, so the recombination keeps
    // the donors' joint-angle correlations instead of mixing coordinates from
    // many particles.
    const int ip = static_cast<int>(rng.index(f.n_positive));
    const int iu = neutral_begin + static_cast<int>(rng.index(f.n_neutral));
    const int ig = negative_begin + static_cast<int>(rng.index(f.n_negative));

    Eigen::VectorXd position(problem.dimension);
    for (int d = 0; d < problem.dimension; ++d) {
        if (rng.uniform01() < params.ps_rate) {
            const int copy_from = static_cast<int>(rng.index(f.n_positive));
            position[d] = state.population[copy_from].position[d];
        } else {
            const double pos = state.population[ip].position[d];
            const double neu = state.population[iu].position[d];
            const double neg = state.population[ig].position[d];
            position[d] = neu + params.phi * force * (pos - neu) - force * (neg - neu);
        }
    }
    if (rng.uniform01() < params.r_rate) {
        const int d = static_cast<int>(rng.index(problem.dimension));
        position[d] = rng.uniform(problem.lower[d], problem.upper[d]);
    }
    position = clamp(problem, std::move(position));
    const double cost = problem.evaluate(position);
    efo_insert(state, Candidate{std::move(position), cost});
}

} // namespace

void efo_step(EfoState& state, const SearchProblem& problem,
              const EfoParams& params, Rng& rng) {
    const int generations = std::max(params.generations_per_step, 1);
    for (int g = 0; g < generations; ++g) {
        efo_generate(state, problem, params, rng);
    }
}

void EfoOptimizer::init(const SearchProblem& problem, int population, Rng& rng) {
    const EfoFields f = efo_fields(population, params_);
    if (f.n_positive < 1 || f.n_neutral < 1 || f.n_negative < 1) {
        throw ConfigError("efo: population too small to form positive, "
                          "neutral and negative fields");
    }
    state_ = efo_init(problem, population, rng);
}

} // namespace hyperik
