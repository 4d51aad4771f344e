#include <doctest.h>

#include <algorithm>
#include <vector>

#include "hyperik/nro.hpp"
#include "hyperik/runner.hpp"

using namespace hyperik;

namespace {

SearchProblem ik_117() {
    return make_ik_problem(RobotModel{}, Position{1, 1, 7});
}

std::vector<Eigen::VectorXd> positions(const NroState& state) {
    std::vector<Eigen::VectorXd> out;
    for (const Candidate& n : state.nuclei) out.push_back(n.position);
    return out;
}

} // namespace

TEST_CASE("zero fission probability makes the fission phase an identity") {
    const SearchProblem problem = ik_117();
    NroParams params;
    params.p_fi = 0.0;
    Rng rng(3);
    NroState state = nro_init(problem, 10, rng);
    const auto before = positions(state);
    nro_fission_phase(state, problem, params, 0, rng);
    CHECK(positions(state) == before);
}

TEST_CASE("zero scaling puts every fission product exactly at its center") {
    const SearchProblem problem = ik_117();
    NroParams params;
    params.p_fi = 1.0;
    params.p_beta = 0.0;
    params.scaling = 0.0;
    Rng rng(4);
    NroState state = nro_init(problem, 10, rng);
    const auto before = positions(state);
    const Eigen::VectorXd best = state.best_nucleus.position;
    nro_fission_phase(state, problem, params, 0, rng);
    for (std::size_t i = 0; i < state.nuclei.size(); ++i) {
        const Eigen::VectorXd midpoint = 0.5 * (before[i] + best);
        const bool stayed = state.nuclei[i].position == before[i];
        const bool at_midpoint =
            (state.nuclei[i].position - clamp(problem, midpoint))
                .cwiseAbs()
                .maxCoeff() < 1e-15;
        CHECK((stayed || at_midpoint));
    }
}

TEST_CASE("fusion needs at least three nuclei") {
    const SearchProblem problem = ik_117();
    Rng rng(5);
    NroState state = nro_init(problem, 2, rng);
    const auto before = positions(state);
    nro_fusion_phase(state, problem, NroParams{}, 3, rng);
    CHECK(positions(state) == before);
}

TEST_CASE("a population collapsed on the best nucleus is a fusion fixed point") {
    const SearchProblem problem = ik_117();
    Rng rng(6);
    NroState state = nro_init(problem, 8, rng);
    for (Candidate& n : state.nuclei) n = state.best_nucleus;
    const auto before = positions(state);
    nro_fusion_phase(state, problem, NroParams{}, 7, rng);
    CHECK(positions(state) == before);
}

TEST_CASE("one step is fission followed by fusion") {
    const SearchProblem problem = ik_117();
    Rng init_a(12), init_b(12);
    NroState composed = nro_init(problem, 10, init_a);
    NroState stepped = nro_init(problem, 10, init_b);
    Rng rng_a(50), rng_b(50);
    nro_fission_phase(composed, problem, NroParams{}, 5, rng_a);
    nro_fusion_phase(composed, problem, NroParams{}, 5, rng_a);
    nro_step(stepped, problem, NroParams{}, 5, rng_b);
    CHECK(positions(composed) == positions(stepped));
    CHECK(composed.best_nucleus.cost == stepped.best_nucleus.cost);
}

TEST_CASE("best nucleus is monotone and nuclei stay in bounds") {
    const SearchProblem problem = ik_117();
    Rng rng(9);
    NroState state = nro_init(problem, 20, rng);
    double best = state.best_nucleus.cost;
    for (int it = 0; it < 150; ++it) {
        nro_step(state, problem, NroParams{}, it, rng);
        CHECK(state.best_nucleus.cost <= best);
        best = state.best_nucleus.cost;
        for (const Candidate& n : state.nuclei) {
            for (int d = 0; d < problem.dimension; ++d) {
                CHECK(n.position[d] >= problem.lower[d]);
                CHECK(n.position[d] <= problem.upper[d]);
            }
        }
    }
}

TEST_CASE("nro reaches sub-1e-1 median error on the reference target") {
    const SearchProblem problem = ik_117();
    std::vector<double> errors;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        RunConfig rc;
        rc.seed = seed;
        errors.push_back(run(problem, rc, AlgorithmId::Nro).final_best.cost);
    }
    std::sort(errors.begin(), errors.end());
    CHECK(0.5 * (errors[4] + errors[5]) <= 1e-1);
}
