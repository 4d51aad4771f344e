#include "hyperik/pso.hpp"

namespace hyperik {

PsoState pso_init(const SearchProblem& problem, int population, Rng& rng) {
    PsoState state;
    state.particles.reserve(population);
    for (int i = 0; i < population; ++i) {
        state.particles.push_back(sample_uniform(problem, rng));
        state.velocities.emplace_back(Eigen::VectorXd::Zero(problem.dimension));
        state.personal_best.push_back(state.particles.back());
        if (state.particles.back().cost < state.global_best.cost) {
            state.global_best = state.particles.back();
        }
    }
    return state;
}

double pso_inertia(const PsoParams& params, int iteration, int total) {
    if (total <= 1) return params.w_max;
    const double frac = static_cast<double>(iteration) / static_cast<double>(total - 1);
    return params.w_max + (params.w_min - params.w_max) * frac;
}

void pso_step(PsoState& state, const SearchProblem& problem,
              const PsoParams& params, int iteration, int total, Rng& rng) {
    const double w = pso_inertia(params, iteration, total);
    for (std::size_t i = 0; i < state.particles.size(); ++i) {
        Candidate& particle = state.particles[i];
        Eigen::VectorXd& velocity = state.velocities[i];
        for (int d = 0; d < problem.dimension; ++d) {
            const double r1 = rng.uniform01();
            const double r2 = rng.uniform01();
            velocity[d] =
                w * velocity[d] +
                params.c1 * r1 * (state.personal_best[i].position[d] - particle.position[d]) +
                params.c2 * r2 * (state.global_best.position[d] - particle.position[d]);
        }
        // Only positions are clamped; the velocity keeps its value.
        particle.position = clamp(problem, particle.position + velocity);
        particle.cost = problem.evaluate(particle.position);
        if (particle.cost < state.personal_best[i].cost) {
            state.personal_best[i] = particle;
            if (particle.cost < state.global_best.cost) {
                state.global_best = particle;
            }
        }
    }
}

} // namespace hyperik
