#pragma once

#include <numbers>
#include <vector>

#include "hyperik/optimizer.hpp"

namespace hyperik {

/// Electromagnetic Field Optimization. The sorted population is split into
/// a positive field (best), a neutral field, and a negative field (worst).
/// Each generation composes one new particle from a positive/neutral/negative
/// donor triple with golden-ratio attraction to the positive field and
/// repulsion from the negative, and inserts it in sorted order if it beats
/// the current worst.
struct EfoParams {
    double ps_rate = 0.1;  // probability of copying a coordinate from the positive field
    double r_rate = 0.3;   // probability of randomizing one coordinate
    double p_field = 0.1;  // fraction of the population forming the positive field
    double n_field = 0.45; // fraction forming the negative field
    double phi = std::numbers::phi; // attraction/repulsion ratio
    // Particles generated per iteration. 1 keeps the iteration budget literal;
    // set to the population size for comparisons on equal evaluation budgets.
    int generations_per_step = 1;
};

struct EfoState {
    std::vector<Candidate> population; // sorted ascending by cost
};

struct EfoFields {
    int n_positive = 0;
    int n_neutral = 0;
    int n_negative = 0;
};

/// Field sizes: positive = ceil(p_field*N) best, negative = ceil(n_field*N)
/// worst, neutral = the remainder. The three ranges partition the population.
EfoFields efo_fields(int population_size, const EfoParams& params);

EfoState efo_init(const SearchProblem& problem, int population, Rng& rng);

/// Sorted insertion; drops the worst. Returns false when the candidate is no
/// better than the current worst (population unchanged).
bool efo_insert(EfoState& state, Candidate candidate);

void efo_step(EfoState& state, const SearchProblem& problem,
              const EfoParams& params, Rng& rng);

class EfoOptimizer final : public Optimizer {
public:
    explicit EfoOptimizer(const EfoParams& params) : params_(params) {}

    void init(const SearchProblem& problem, int population, Rng& rng) override;
    void step(const SearchProblem& problem, int, int, Rng& rng) override {
        efo_step(state_, problem, params_, rng);
    }
    const Candidate& best() const override { return state_.population.front(); }

    const EfoState& state() const { return state_; }

private:
    EfoParams params_;
    EfoState state_;
};

} // namespace hyperik
