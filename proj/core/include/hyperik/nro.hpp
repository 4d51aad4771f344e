#pragma once

#include <vector>

#include "hyperik/optimizer.hpp"

namespace hyperik {

/// Nuclear Reaction Optimization: a fission phase (Gaussian products around
/// the nucleus/best midpoint, or a tighter secondary product around the best)
/// followed by a fusion phase (pairwise combination towards the best), both
/// with greedy acceptance.
struct NroParams {
    double freq = 0.05;    // sinusoidal modulation frequency of fusion weights
    double scaling = 0.01; // fission Gaussian scale, as a fraction of range
    double p_beta = 0.1;   // probability of a secondary (beta-decay) product
    double p_fi = 0.75;    // per-nucleus fission probability
};

struct NroState {
    std::vector<Candidate> nuclei;
    Candidate best_nucleus; // minimum ever observed
};

NroState nro_init(const SearchProblem& problem, int population, Rng& rng);

void nro_fission_phase(NroState& state, const SearchProblem& problem,
                       const NroParams& params, int iteration, Rng& rng);

/// Identity when the population has fewer than 3 nuclei (no partners).
void nro_fusion_phase(NroState& state, const SearchProblem& problem,
                      const NroParams& params, int iteration, Rng& rng);

/// Fission first, then fusion.
void nro_step(NroState& state, const SearchProblem& problem,
              const NroParams& params, int iteration, Rng& rng);

class NroOptimizer final : public Optimizer {
public:
    explicit NroOptimizer(const NroParams& params) : params_(params) {}

    void init(const SearchProblem& problem, int population, Rng& rng) override {
        state_ = nro_init(problem, population, rng);
    }
    void step(const SearchProblem& problem, int iteration, int, Rng& rng) override {
        nro_step(state_, problem, params_, iteration, rng);
    }
    const Candidate& best() const override { return state_.best_nucleus; }

    const NroState& state() const { return state_; }

private:
    NroParams params_;
    NroState state_;
};

} // namespace hyperik
