#pragma once

#include "hyperik/problem.hpp"

namespace hyperik {

/// One iteration-stepped population optimizer. init() samples the starting
/// population from the problem box; step() advances one iteration. best()
/// is the algorithm's own current best; the run protocol layers an elitist
/// best-so-far tracker on top, so algorithms are free to lose their best.
class Optimizer {
public:
    virtual ~Optimizer() = default;

    virtual void init(const SearchProblem& problem, int population, Rng& rng) = 0;
    virtual void step(const SearchProblem& problem, int iteration,
                      int total_iterations, Rng& rng) = 0;
    virtual const Candidate& best() const = 0;
};

} // namespace hyperik
