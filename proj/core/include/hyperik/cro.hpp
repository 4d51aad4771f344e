#pragma once

#include <optional>
#include <vector>

#include "hyperik/optimizer.hpp"

namespace hyperik {

/// Coral Reefs Optimization on a reef of reef_rows x reef_cols cells, some
/// occupied and some free. Each step runs one reproductive cycle: broadcast
/// spawning (crossover) and brooding (mutation) produce larvae that compete
/// for cells, the healthiest corals duplicate themselves, and a fraction of
/// the least healthy corals faces depredation.
struct CroParams {
    int reef_rows = 1;
    int reef_cols = 20;          // rows*cols must equal the population
    double rho0 = 0.4;           // occupied fraction at initialization
    double f_broadcast = 0.9;    // fraction reproducing by broadcast spawning
    double f_asexual = 0.1;      // fraction duplicating asexually
    double f_depredation = 0.1;  // worst fraction subject to depredation
    double p_depredation = 0.1;  // per-coral depredation probability
    int larva_attempts = 3;      // settlement tries per larva
    double mutation_scale = 0.05; // brooding Gaussian sigma, fraction of range
};

struct ReefState {
    std::vector<std::optional<Candidate>> cells; // empty = free spot
};

ReefState cro_init(const SearchProblem& problem, const CroParams& params,
                   int population, Rng& rng);

void cro_step(ReefState& state, const SearchProblem& problem,
              const CroParams& params, Rng& rng);

/// Healthiest occupant (lowest cost). The reef always holds at least one.
const Candidate& cro_best(const ReefState& state);

int cro_occupied_count(const ReefState& state);

class CroOptimizer final : public Optimizer {
public:
    explicit CroOptimizer(const CroParams& params) : params_(params) {}

    void init(const SearchProblem& problem, int population, Rng& rng) override;
    void step(const SearchProblem& problem, int, int, Rng& rng) override {
        cro_step(state_, problem, params_, rng);
        const Candidate& reef_best = cro_best(state_);
        if (reef_best.cost < best_.cost) best_ = reef_best;
    }
    /// Best coral ever seen; depredation may remove it from the reef.
    const Candidate& best() const override { return best_; }

    const ReefState& state() const { return state_; }

private:
    CroParams params_;
    ReefState state_;
    Candidate best_;
};

} // namespace hyperik
