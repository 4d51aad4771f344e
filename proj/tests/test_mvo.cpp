#include <doctest.h>

#include <algorithm>
#include <vector>

#include "hyperik/mvo.hpp"
#include "hyperik/runner.hpp"

using namespace hyperik;

namespace {

SearchProblem ik_117() {
    return make_ik_problem(RobotModel{}, Position{1, 1, 7});
}

} // namespace

TEST_CASE("wormhole schedules hit their endpoints and are monotone") {
    const MvoParams params;
    const auto [wep0, tdr0] = mvo_schedules(0, params);
    CHECK(wep0 == doctest::Approx(0.2));
    CHECK(tdr0 == doctest::Approx(1.0));
    const auto [wepL, tdrL] = mvo_schedules(params.max_iterations, params);
    CHECK(wepL == doctest::Approx(1.0));
    CHECK(tdrL == doctest::Approx(0.0));

    double prev_wep = -1.0, prev_tdr = 2.0;
    for (int t = 0; t <= params.max_iterations; t += 25) {
        const auto [wep, tdr] = mvo_schedules(t, params);
        CHECK(wep > prev_wep);
        CHECK(tdr < prev_tdr);
        prev_wep = wep;
        prev_tdr = tdr;
    }
}

TEST_CASE("identical universes without wormholes do not move") {
    const SearchProblem problem = ik_117();
    MvoParams params;
    params.wep_min = 0.0;
    params.wep_max = 0.0;
    Rng rng(5);
    MvoState state = mvo_init(problem, 8, rng);
    for (Candidate& u : state.universes) u = state.best_universe;
    const Eigen::VectorXd home = state.best_universe.position;
    mvo_step(state, problem, params, 100, rng);
    for (const Candidate& u : state.universes) {
        CHECK(u.position == home);
    }
}

TEST_CASE("zero travel distance pins every wormhole move onto the best") {
    const SearchProblem problem = ik_117();
    MvoParams params;
    params.wep_min = 1.0;
    params.wep_max = 1.0;
    Rng rng(6);
    MvoState state = mvo_init(problem, 8, rng);
    const Eigen::VectorXd best = state.best_universe.position;
    // At iteration L the travel distance rate is exactly zero.
    mvo_step(state, problem, params, params.max_iterations, rng);
    for (const Candidate& u : state.universes) {
        CHECK(u.position == best);
    }
}

TEST_CASE("best universe is monotone and universes stay in bounds") {
    const SearchProblem problem = ik_117();
    Rng rng(8);
    MvoState state = mvo_init(problem, 20, rng);
    double best = state.best_universe.cost;
    for (int it = 0; it < 200; ++it) {
        mvo_step(state, problem, MvoParams{}, it, rng);
        CHECK(state.best_universe.cost <= best);
        best = state.best_universe.cost;
        for (const Candidate& u : state.universes) {
            for (int d = 0; d < problem.dimension; ++d) {
                CHECK(u.position[d] >= problem.lower[d]);
                CHECK(u.position[d] <= problem.upper[d]);
            }
        }
    }
}

TEST_CASE("mvo reaches sub-1e-2 median error on the reference target") {
    const SearchProblem problem = ik_117();
    std::vector<double> errors;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        RunConfig rc;
        rc.seed = seed;
        errors.push_back(run(problem, rc, AlgorithmId::Mvo).final_best.cost);
    }
    std::sort(errors.begin(), errors.end());
    CHECK(0.5 * (errors[4] + errors[5]) <= 1e-2);
}
