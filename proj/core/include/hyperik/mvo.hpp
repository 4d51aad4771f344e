#pragma once

#include <utility>
#include <vector>

#include "hyperik/optimizer.hpp"

namespace hyperik {

/// Multi-Verse Optimization. Universes exchange coordinates from high- to
/// low-inflation universes (exploration) and teleport coordinates near the
/// best universe through wormholes whose travel distance shrinks over the
/// run (exploitation).
struct MvoParams {
    double wep_min = 0.2;     // wormhole existence probability at iteration 0
    double wep_max = 1.0;     // and at iteration L
    double p_exploit = 6.0;   // exploitation accuracy exponent
    int max_iterations = 500; // L, the schedule horizon
};

struct MvoState {
    std::vector<Candidate> universes;
    Candidate best_universe; // best ever observed
};

/// (WEP, TDR) at the given iteration: WEP grows linearly from wep_min to
/// wep_max; TDR = 1 - (t^(1/p))/(L^(1/p)) falls from 1 to 0.
std::pair<double, double> mvo_schedules(int iteration, const MvoParams& params);

MvoState mvo_init(const SearchProblem& problem, int population, Rng& rng);

void mvo_step(MvoState& state, const SearchProblem& problem,
              const MvoParams& params, int iteration, Rng& rng);

class MvoOptimizer final : public Optimizer {
public:
    explicit MvoOptimizer(const MvoParams& params) : params_(params) {}

    void init(const SearchProblem& problem, int population, Rng& rng) override {
        state_ = mvo_init(problem, population, rng);
    }
    void step(const SearchProblem& problem, int iteration, int total,
              Rng& rng) override {
        // The schedule horizon follows the run unless configured otherwise.
        MvoParams p = params_;
        if (p.max_iterations <= 0) p.max_iterations = total;
        mvo_step(state_, problem, p, iteration, rng);
    }
    const Candidate& best() const override { return state_.best_universe; }

    const MvoState& state() const { return state_; }

private:
    MvoParams params_;
    MvoState state_;
};

} // namespace hyperik
