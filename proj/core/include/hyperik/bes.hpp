#pragma once

#include <vector>

#include "hyperik/optimizer.hpp"

namespace hyperik {

/// Bald Eagle Search. Each iteration runs three stages back to back:
/// select a search area around the best eagle, sweep it along a spiral,
/// then swoop onto the best solution. Every stage accepts a move only if
/// it improves that eagle, so the best cost never increases.
struct BesParams {
    double a_corner = 10.0;        // spiral corner multiplier
    double r_cycles = 1.5;         // number of search cycles
    double alpha_intensity = 2.0;  // position-change intensity
    double c1 = 2.0;               // swoop pull towards the center
    double c2 = 2.0;               // swoop pull towards the best
};

struct BesState {
    std::vector<Candidate> eagles;
    Candidate best;
    Eigen::VectorXd mean; // population centroid, recomputed each stage
};

/// Per-eagle polar coordinates used by the search and swoop stages.
/// x and y are the sin/cos projections normalized into [-1, 1];
/// the raw theta and r draws are kept for inspection.
struct BesPolar {
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> theta;
    std::vector<double> r;
};

BesState bes_init(const SearchProblem& problem, int population, Rng& rng);

/// Search-stage spiral: theta = a_corner*pi*rand, r = theta*r_cycles*rand.
/// If every raw projection is zero the normalized outputs are all zero.
BesPolar bes_spiral_polar(int count, const BesParams& params, Rng& rng);

/// Swoop-stage polar: theta = alpha_intensity*pi*rand, r = theta.
BesPolar bes_swoop_polar(int count, const BesParams& params, Rng& rng);

void bes_select_stage(BesState& state, const SearchProblem& problem,
                      const BesParams& params, Rng& rng);
void bes_search_stage(BesState& state, const SearchProblem& problem,
                      const BesParams& params, Rng& rng);
void bes_swoop_stage(BesState& state, const SearchProblem& problem,
                     const BesParams& params, Rng& rng);

/// select, then search, then swoop.
void bes_step(BesState& state, const SearchProblem& problem,
              const BesParams& params, Rng& rng);

class BesOptimizer final : public Optimizer {
public:
    explicit BesOptimizer(const BesParams& params) : params_(params) {}

    void init(const SearchProblem& problem, int population, Rng& rng) override {
        state_ = bes_init(problem, population, rng);
    }
    void step(const SearchProblem& problem, int, int, Rng& rng) override {
        bes_step(state_, problem, params_, rng);
    }
    const Candidate& best() const override { return state_.best; }

    const BesState& state() const { return state_; }

private:
    BesParams params_;
    BesState state_;
};

} // namespace hyperik
