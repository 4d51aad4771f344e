#include "hyperik/cro.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hyperik/errors.hpp"

namespace hyperik {

namespace {

void shuffle_indices(std::vector<int>& indices, Rng& rng) {
    for (std::size_t i = indices.size(); i > 1; --i) {
        std::swap(indices[i - 1], indices[rng.index(i)]);
    }
}

std::vector<int> occupied_indices(const ReefState& state) {
    std::vector<int> occ;
    for (std::size_t i = 0; i < state.cells.size(); ++i) {
        if (state.cells[i].has_value()) occ.push_back(static_cast<int>(i));
    }
    return occ;
}

// Ascending by cost, ties broken by cell index for determinism.
void sort_by_health(std::vector<int>& occ, const ReefState& state) {
    std::sort(occ.begin(), occ.end(), [&state](int a, int b) {
        const double ca = state.cells[a]->cost;
        const double cb = state.cells[b]->cost;
        return ca != cb ? ca < cb : a < b;
    });
}

// A larva gets a fixed number of tries at random cells: it settles on a
// free cell, displaces a strictly less healthy occupant, and is discarded
// otherwise. Ties keep the incumbent.
void settle(ReefState& state, const Candidate& larva, int attempts, Rng& rng) {
    for (int a = 0; a < attempts; ++a) {
        const std::size_t cell = rng.index(state.cells.size());
        if (!state.cells[cell].has_value()) {
            state.cells[cell] = larva;
            return;
        }
        if (larva.cost < state.cells[cell]->cost) {
            state.cells[cell] = larva;
            return;
        }
    }
}

} // namespace

ReefState cro_init(const SearchProblem& problem, const CroParams& params,
                   int population, Rng& rng) {
    ReefState state;
    state.cells.resize(population);
    int occupied = static_cast<int>(std::llround(params.rho0 * population));
    occupied = std::clamp(occupied, 1, population);
    std::vector<int> order(population);
    std::iota(order.begin(), order.end(), 0);
    shuffle_indices(order, rng);
    for (int k = 0; k < occupied; ++k) {
        state.cells[order[k]] = sample_uniform(problem, rng);
    }
    return state;
}

void cro_step(ReefState& state, const SearchProblem& problem,
              const CroParams& params, Rng& rng) {
    const int dim = problem.dimension;

    // 1. Split occupants into broadcast spawners and brooders.
    std::vector<int> occ = occupied_indices(state);
    shuffle_indices(occ, rng);
    int n_broadcast = static_cast<int>(std::llround(params.f_broadcast * occ.size()));
    n_broadcast = std::clamp(n_broadcast, 0, static_cast<int>(occ.size()));
    if (n_broadcast % 2 != 0) --n_broadcast; // pairs; the odd one out broods

    std::vector<Candidate> larvae;
    for (int k = 0; k + 1 < n_broadcast; k += 2) {
        const Candidate& p1 = *state.cells[occ[k]];
        const Candidate& p2 = *state.cells[occ[k + 1]];
        const int cut = 1 + static_cast<int>(rng.index(dim - 1));
        Candidate larva;
        larva.position.resize(dim);
        larva.position.head(cut) = p1.position.head(cut);
        larva.position.tail(dim - cut) = p2.position.tail(dim - cut);
        larva.cost = problem.evaluate(larva.position);
        larvae.push_back(std::move(larva));
    }
    for (std::size_t k = n_broadcast; k < occ.size(); ++k) {
        const Candidate& parent = *state.cells[occ[k]];
        Candidate larva;
        larva.position.resize(dim);
        for (int d = 0; d < dim; ++d) {
            const double sigma =
                params.mutation_scale * (problem.upper[d] - problem.lower[d]);
            larva.position[d] = parent.position[d] + sigma * rng.normal();
        }
        larva.position = clamp(problem, std::move(larva.position));
        larva.cost = problem.evaluate(larva.position);
        larvae.push_back(std::move(larva));
    }

    // 2. Settlement.
    for (const Candidate& larva : larvae) {
        settle(state, larva, params.larva_attempts, rng);
    }

    // 3. Asexual duplication of the healthiest corals.
    occ = occupied_indices(state);
    sort_by_health(occ, state);
    const int n_dup = static_cast<int>(std::llround(params.f_asexual * occ.size()));
    for (int k = 0; k < n_dup; ++k) {
        const Candidate dup = *state.cells[occ[k]];
        settle(state, dup, params.larva_attempts, rng);
    }

    // 4. Depredation of the worst fraction.
    occ = occupied_indices(state);
    sort_by_health(occ, state);
    const int n_dep = static_cast<int>(std::llround(params.f_depredation * occ.size()));
    int alive = static_cast<int>(occ.size());
    for (int k = 0; k < n_dep; ++k) {
        if (alive <= 1) break;
        const int cell = occ[occ.size() - 1 - k]; // worst first
        if (rng.uniform01() < params.p_depredation) {
            state.cells[cell].reset();
            --alive;
        }
    }
}

const Candidate& cro_best(const ReefState& state) {
    const Candidate* best = nullptr;
    for (const auto& cell : state.cells) {
        if (cell.has_value() && (best == nullptr || cell->cost < best->cost)) {
            best = &*cell;
        }
    }
    return *best;
}

int cro_occupied_count(const ReefState& state) {
    int count = 0;
    for (const auto& cell : state.cells) count += cell.has_value() ? 1 : 0;
    return count;
}

void CroOptimizer::init(const SearchProblem& problem, int population, Rng& rng) {
    if (params_.reef_rows * params_.reef_cols != population) {
        throw ConfigError("cro: reef_rows*reef_cols must equal the population");
    }
    state_ = cro_init(problem, params_, population, rng);
    best_ = cro_best(state_);
}

} // namespace hyperik
