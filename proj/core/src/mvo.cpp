#include "hyperik/mvo.hpp"

#include <algorithm>
#include <cmath>

namespace hyperik {

std::pair<double, double> mvo_schedules(int iteration, const MvoParams& params) {
    const double t = static_cast<double>(iteration);
    const double L = static_cast<double>(params.max_iterations);
    const double wep = params.wep_min + t * (params.wep_max - params.wep_min) / L;
    const double inv_p = 1.0 / params.p_exploit;
    const double tdr = 1.0 - std::pow(t, inv_p) / std::pow(L, inv_p);
    return {wep, tdr};
}

MvoState mvo_init(const SearchProblem& problem, int population, Rng& rng) {
    MvoState state;
    state.universes.reserve(population);
    for (int i = 0; i < population; ++i) {
        state.universes.push_back(sample_uniform(problem, rng));
        if (state.universes.back().cost < state.best_universe.cost) {
            state.best_universe = state.universes.back();
        }
    }
    return state;
}

namespace {

// Roulette pick over the normalized inflation rates; higher inflation is
// more likely to donate. Falls back to the best universe if all weights
// vanish.
std::size_t roulette(const std::vector<double>& cumulative, Rng& rng) {
    const double total = cumulative.back();
    if (total <= 0.0) return 0;
    const double u = rng.uniform01() * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    return std::min(static_cast<std::size_t>(it - cumulative.begin()),
                    cumulative.size() - 1);
}

} // namespace

void mvo_step(MvoState& state, const SearchProblem& problem,
              const MvoParams& params, int iteration, Rng& rng) {
    const auto [wep, tdr] = mvo_schedules(iteration, params);
    const std::size_t n = state.universes.size();

    std::stable_sort(state.universes.begin(), state.universes.end(),
                     [](const Candidate& a, const Candidate& b) {
                         return a.cost < b.cost;
                     });

    // Inflation rate: any strictly decreasing transform of cost works; use
    // 1/(1+cost) min-max normalized so the best universe gets 1.
    std::vector<double> inflation(n);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        inflation[i] = 1.0 / (1.0 + state.universes[i].cost);
        lo = std::min(lo, inflation[i]);
        hi = std::max(hi, inflation[i]);
    }
    for (double& v : inflation) {
        v = hi > lo ? (v - lo) / (hi - lo) : 1.0;
    }
    std::vector<double> cumulative(n);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += inflation[i];
        cumulative[i] = sum;
    }

    for (std::size_t i = 0; i < n; ++i) {
        Candidate& universe = state.universes[i];
        for (int d = 0; d < problem.dimension; ++d) {
            // White/black-hole exchange: low-inflation universes receive
            // coordinates from roulette-selected donors.
            if (rng.uniform01() < 1.0 - inflation[i]) {
                const std::size_t j = roulette(cumulative, rng);
                universe.position[d] = state.universes[j].position[d];
            }
            // Wormhole travel around the best universe.
            if (rng.uniform01() < wep) {
                const double sign = rng.uniform01() < 0.5 ? 1.0 : -1.0;
                const double travel =
                    tdr * ((problem.upper[d] - problem.lower[d]) * rng.uniform01() +
                           problem.lower[d]);
                universe.position[d] = state.best_universe.position[d] + sign * travel;
            }
        }
        universe.position = clamp(problem, std::move(universe.position));
        universe.cost = problem.evaluate(universe.position);
        if (universe.cost < state.best_universe.cost) {
            state.best_universe = universe;
        }
    }
}

} // namespace hyperik
