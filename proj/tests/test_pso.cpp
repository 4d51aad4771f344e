#include <doctest.h>

#include <algorithm>
#include <vector>

#include "hyperik/pso.hpp"
#include "hyperik/runner.hpp"

using namespace hyperik;

namespace {

SearchProblem ik_117() {
    return make_ik_problem(RobotModel{}, Position{1, 1, 7});
}

} // namespace

TEST_CASE("inertia decays linearly from w_max to w_min") {
    const PsoParams params;
    CHECK(pso_inertia(params, 0, 500) == doctest::Approx(0.9));
    CHECK(pso_inertia(params, 499, 500) == doctest::Approx(0.4));
    CHECK(pso_inertia(params, 250, 501) == doctest::Approx(0.65));
    CHECK(pso_inertia(params, 0, 1) == doctest::Approx(0.9));
}

TEST_CASE("a swarm resting on its global best does not move") {
    const SearchProblem problem = ik_117();
    Rng rng(4);
    PsoState state = pso_init(problem, 6, rng);
    for (std::size_t i = 0; i < state.particles.size(); ++i) {
        state.particles[i] = state.global_best;
        state.personal_best[i] = state.global_best;
        state.velocities[i].setZero();
    }
    const Eigen::VectorXd before = state.global_best.position;
    pso_step(state, problem, PsoParams{}, 0, 500, rng);
    for (const Candidate& particle : state.particles) {
        CHECK(particle.position == before);
    }
    CHECK(state.global_best.position == before);
}

TEST_CASE("zero accelerations and unit inertia give ballistic paths") {
    const SearchProblem problem = ik_117();
    PsoParams params;
    params.c1 = 0.0;
    params.c2 = 0.0;
    params.w_min = 1.0;
    params.w_max = 1.0;
    Rng rng(12);
    PsoState state = pso_init(problem, 4, rng);
    for (auto& v : state.velocities) v.setConstant(0.01);
    const std::vector<Eigen::VectorXd> p0 = [&] {
        std::vector<Eigen::VectorXd> out;
        for (auto& c : state.particles) out.push_back(c.position);
        return out;
    }();
    pso_step(state, problem, params, 0, 500, rng);
    std::vector<Eigen::VectorXd> p1;
    for (auto& c : state.particles) p1.push_back(c.position);
    pso_step(state, problem, params, 1, 500, rng);
    for (std::size_t i = 0; i < state.particles.size(); ++i) {
        const Eigen::VectorXd step1 = p1[i] - p0[i];
        const Eigen::VectorXd step2 = state.particles[i].position - p1[i];
        CHECK((step1 - step2).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("positions stay in bounds and the global best is monotone") {
    const SearchProblem problem = ik_117();
    Rng rng(9);
    PsoState state = pso_init(problem, 20, rng);
    double last = state.global_best.cost;
    for (int it = 0; it < 100; ++it) {
        pso_step(state, problem, PsoParams{}, it, 100, rng);
        CHECK(state.global_best.cost <= last);
        last = state.global_best.cost;
        for (const Candidate& particle : state.particles) {
            for (int d = 0; d < problem.dimension; ++d) {
                CHECK(particle.position[d] >= problem.lower[d]);
                CHECK(particle.position[d] <= problem.upper[d]);
            }
        }
    }
}

TEST_CASE("pso reaches sub-1e-4 median error on the reference target") {
    const SearchProblem problem = ik_117();
    std::vector<double> errors;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        RunConfig rc;
        rc.seed = seed;
        errors.push_back(run(problem, rc, AlgorithmId::Pso).final_best.cost);
    }
    std::sort(errors.begin(), errors.end());
    CHECK(0.5 * (errors[4] + errors[5]) <= 1e-4);
}
