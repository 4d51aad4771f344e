#include "hyperik/bes.hpp"

#include <cmath>
#include <numbers>

namespace hyperik {

namespace {

void update_mean(BesState& state) {
    state.mean = Eigen::VectorXd::Zero(state.eagles.front().position.size());
    for (const Candidate& e : state.eagles) state.mean += e.position;
    state.mean /= static_cast<double>(state.eagles.size());
}

// Greedy acceptance: the eagle moves only if the candidate improves it.
void accept_if_better(BesState& state, std::size_t i, Eigen::VectorXd candidate,
                      const SearchProblem& problem) {
    const double cost = problem.evaluate(candidate);
    if (cost < state.eagles[i].cost) {
        state.eagles[i].position = std::move(candidate);
        state.eagles[i].cost = cost;
        if (cost < state.best.cost) state.best = state.eagles[i];
    }
}

BesPolar normalize_polar(std::vector<double> theta, std::vector<double> r) {
    const std::size_t n = theta.size();
    BesPolar polar;
    polar.theta = std::move(theta);
    polar.r = std::move(r);
    polar.x.resize(n);
    polar.y.resize(n);
    double max_x = 0.0;
    double max_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        polar.x[i] = polar.r[i] * std::sin(polar.theta[i]);
        polar.y[i] = polar.r[i] * std::cos(polar.theta[i]);
        max_x = std::max(max_x, std::abs(polar.x[i]));
        max_y = std::max(max_y, std::abs(polar.y[i]));
    }
    for (std::size_t i = 0; i < n; ++i) {
        polar.x[i] = max_x > 0.0 ? polar.x[i] / max_x : 0.0;
        polar.y[i] = max_y > 0.0 ? polar.y[i] / max_y : 0.0;
    }
    return polar;
}

} // namespace

BesState bes_init(const SearchProblem& problem, int population, Rng& rng) {
    BesState state;
    state.eagles.reserve(population);
    for (int i = 0; i < population; ++i) {
        state.eagles.push_back(sample_uniform(problem, rng));
        if (state.eagles.back().cost < state.best.cost) {
            state.best = state.eagles.back();
        }
    }
    update_mean(state);
    return state;
}

BesPolar bes_spiral_polar(int count, const BesParams& params, Rng& rng) {
    std::vector<double> theta(count);
    std::vector<double> r(count);
    for (int i = 0; i < count; ++i) {
        theta[i] = params.a_corner * std::numbers::pi * rng.uniform01();
        r[i] = theta[i] * params.r_cycles * rng.uniform01();
    }
    return normalize_polar(std::move(theta), std::move(r));
}

BesPolar bes_swoop_polar(int count, const BesParams& params, Rng& rng) {
    std::vector<double> theta(count);
    std::vector<double> r(count);
    for (int i = 0; i < count; ++i) {
        theta[i] = params.alpha_intensity * std::numbers::pi * rng.uniform01();
        r[i] = theta[i];
    }
    return normalize_polar(std::move(theta), std::move(r));
}

void bes_select_stage(BesState& state, const SearchProblem& problem,
                      const BesParams& params, Rng& rng) {
    update_mean(state);
    for (std::size_t i = 0; i < state.eagles.size(); ++i) {
        // One r per eagle, broadcast over the coordinates. Small draws give
        // candidates arbitrarily close to the best eagle, which is what lets
        // the population contract at every scale.
        const double r = rng.uniform01();
        Eigen::VectorXd candidate =
            state.best.position + params.alpha_intensity * r *
                                      (state.mean - state.eagles[i].position);
        accept_if_better(state, i, clamp(problem, std::move(candidate)), problem);
    }
}

void bes_search_stage(BesState& state, const SearchProblem& problem,
                      const BesParams& params, Rng& rng) {
    update_mean(state);
    const std::size_t n = state.eagles.size();
    const BesPolar polar = bes_spiral_polar(static_cast<int>(n), params, rng);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t next = (i + 1) % n;
        Eigen::VectorXd candidate =
            state.eagles[i].position +
            polar.y[i] * (state.eagles[i].position - state.eagles[next].position) +
            polar.x[i] * (state.eagles[i].position - state.mean);
        accept_if_better(state, i, clamp(problem, std::move(candidate)), problem);
    }
}

void bes_swoop_stage(BesState& state, const SearchProblem& problem,
                     const BesParams& params, Rng& rng) {
    update_mean(state);
    const std::size_t n = state.eagles.size();
    const BesPolar polar = bes_swoop_polar(static_cast<int>(n), params, rng);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = rng.uniform01();
        Eigen::VectorXd candidate =
            r * state.best.position +
            polar.x[i] * (state.eagles[i].position - params.c1 * state.mean) +
            polar.y[i] * (state.eagles[i].position - params.c2 * state.best.position);
        accept_if_better(state, i, clamp(problem, std::move(candidate)), problem);
    }
}

void bes_step(BesState& state, const SearchProblem& problem,
              const BesParams& params, Rng& rng) {
    bes_select_stage(state, problem, params, rng);
    bes_search_stage(state, problem, params, rng);
    bes_swoop_stage(state, problem, params, rng);
}

} // namespace hyperik
