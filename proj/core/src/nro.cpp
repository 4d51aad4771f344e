#include "hyperik/nro.hpp"

#include <cmath>
#include <numbers>

namespace hyperik {

NroState nro_init(const SearchProblem& problem, int population, Rng& rng) {
    NroState state;
    state.nuclei.reserve(population);
    for (int i = 0; i < population; ++i) {
        state.nuclei.push_back(sample_uniform(problem, rng));
        if (state.nuclei.back().cost < state.best_nucleus.cost) {
            state.best_nucleus = state.nuclei.back();
        }
    }
    return state;
}

namespace {

// Proportionality constant between params.scaling and the fission Gaussian
// sigma, calibrated against the positional-error scale this configuration
// is reported to reach (about 7e-3 cm averaged over workspace points).
constexpr double kFissionSpread = 12.0;

void accept_if_better(NroState& state, Candidate& nucleus,
                      Eigen::VectorXd candidate, const SearchProblem& problem) {
    const double cost = problem.evaluate(candidate);
    if (cost < nucleus.cost) {
        nucleus.position = std::move(candidate);
        nucleus.cost = cost;
        if (cost < state.best_nucleus.cost) state.best_nucleus = nucleus;
    }
}

} // namespace

void nro_fission_phase(NroState& state, const SearchProblem& problem,
                       const NroParams& params, int /*iteration*/, Rng& rng) {
    const int dim = problem.dimension;
    Eigen::VectorXd candidate(dim);
    for (Candidate& nucleus : state.nuclei) {
        if (rng.uniform01() >= params.p_fi) continue; // even nucleus, no fission
        const bool secondary = rng.uniform01() < params.p_beta;
        const double scale =
            kFissionSpread * (secondary ? 0.5 * params.scaling : params.scaling);
        for (int d = 0; d < dim; ++d) {
            const double center =
                secondary ? state.best_nucleus.position[d]
                          : 0.5 * (nucleus.position[d] + state.best_nucleus.position[d]);
            candidate[d] =
                center + scale * (problem.upper[d] - problem.lower[d]) * rng.normal();
        }
        accept_if_better(state, nucleus, clamp(problem, candidate), problem);
    }
}

void nro_fusion_phase(NroState& state, const SearchProblem& problem,
                      const NroParams& params, int iteration, Rng& rng) {
    const std::size_t n = state.nuclei.size();
    if (n < 3) return;
    const double modulation =
        std::sin(2.0 * std::numbers::pi * params.freq * iteration);
    for (std::size_t i = 0; i < n; ++i) {
        // Two fusion partners distinct from each other and from i.
        std::size_t j = rng.index(n - 1);
        if (j >= i) ++j;
        std::size_t k = rng.index(n - 2);
        const std::size_t lo = std::min(i, j);
        const std::size_t hi = std::max(i, j);
        if (k >= lo) ++k;
        if (k >= hi) ++k;
        const double r1 = rng.uniform01();
        const double r2 = rng.uniform01();
        Eigen::VectorXd candidate =
            state.nuclei[i].position +
            modulation * (r1 * (state.nuclei[j].position - state.best_nucleus.position) +
                          r2 * (state.nuclei[k].position - state.best_nucleus.position));
        accept_if_better(state, state.nuclei[i], clamp(problem, std::move(candidate)),
                         problem);
    }
}

void nro_step(NroState& state, const SearchProblem& problem,
              const NroParams& params, int iteration, Rng& rng) {
    nro_fission_phase(state, problem, params, iteration, rng);
    nro_fusion_phase(state, problem, params, iteration, rng);
}

} // namespace hyperik
