#pragma once

#include <vector>

#include "hyperik/optimizer.hpp"

namespace hyperik {

/// Particle Swarm Optimization with per-coordinate random accelerations and
/// an inertia weight that decays linearly from w_max to w_min over the run.
struct PsoParams {
    double c1 = 1.2; // acceleration towards the personal best
    double c2 = 1.2; // acceleration towards the global best
    double w_min = 0.4;
    double w_max = 0.9;
};

struct PsoState {
    std::vector<Candidate> particles;
    std::vector<Eigen::VectorXd> velocities; // start at zero
    std::vector<Candidate> personal_best;
    Candidate global_best;
};

PsoState pso_init(const SearchProblem& problem, int population, Rng& rng);

/// Linear decay: w(0) = w_max, w(total-1) = w_min.
double pso_inertia(const PsoParams& params, int iteration, int total);

void pso_step(PsoState& state, const SearchProblem& problem,
              const PsoParams& params, int iteration, int total, Rng& rng);

class PsoOptimizer final : public Optimizer {
public:
    explicit PsoOptimizer(const PsoParams& params) : params_(params) {}

    void init(const SearchProblem& problem, int population, Rng& rng) override {
        state_ = pso_init(problem, population, rng);
    }
    void step(const SearchProblem& problem, int iteration, int total,
              Rng& rng) override {
        pso_step(state_, problem, params_, iteration, total, rng);
    }
    const Candidate& best() const override { return state_.global_best; }

    const PsoState& state() const { return state_; }

private:
    PsoParams params_;
    PsoState state_;
};

} // namespace hyperik
