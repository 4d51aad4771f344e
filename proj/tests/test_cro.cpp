#include <doctest.h>

#include <algorithm>
#include <vector>

#include "hyperik/cro.hpp"
#include "hyperik/runner.hpp"

using namespace hyperik;

namespace {

SearchProblem ik_117() {
    return make_ik_problem(RobotModel{}, Position{1, 1, 7});
}

} // namespace

TEST_CASE("initialization occupies round(rho0 * cells) spots") {
    const SearchProblem problem = ik_117();
    CroParams params;

    Rng rng(1);
    const ReefState reef = cro_init(problem, params, 20, rng);
    CHECK(cro_occupied_count(reef) == 8);

    params.rho0 = 1.0;
    Rng rng2(1);
    CHECK(cro_occupied_count(cro_init(problem, params, 20, rng2)) == 20);

    params.rho0 = 0.4;
    Rng a(42), b(42);
    const ReefState ra = cro_init(problem, params, 20, a);
    const ReefState rb = cro_init(problem, params, 20, b);
    for (std::size_t i = 0; i < ra.cells.size(); ++i) {
        CHECK(ra.cells[i].has_value() == rb.cells[i].has_value());
        if (ra.cells[i].has_value()) {
            CHECK(ra.cells[i]->position == rb.cells[i]->position);
        }
    }
}

TEST_CASE("reef dimensions must match the population") {
    const SearchProblem problem = ik_117();
    RunConfig rc;
    rc.population = 30; // reef stays 1x20
    rc.iterations = 5;
    CHECK_THROWS_AS(run(problem, rc, AlgorithmId::Cro), ConfigError);
}

TEST_CASE("a reef of identical corals keeps its cost profile with zero mutation") {
    const SearchProblem problem = ik_117();
    CroParams params;
    params.mutation_scale = 0.0;
    params.p_depredation = 0.0;
    Rng rng(6);
    ReefState reef = cro_init(problem, params, 20, rng);
    const Candidate seed = cro_best(reef);
    for (auto& cell : reef.cells) {
        if (cell.has_value()) cell = seed;
    }
    for (int it = 0; it < 10; ++it) {
        cro_step(reef, problem, params, rng);
        for (const auto& cell : reef.cells) {
            if (cell.has_value()) CHECK(cell->cost == seed.cost);
        }
    }
}

TEST_CASE("settlement and depredation keep the reef sane") {
    const SearchProblem problem = ik_117();
    CroParams params;
    params.p_depredation = 1.0; // depredation fires every cycle
    Rng rng(3);
    ReefState reef = cro_init(problem, params, 20, rng);
    double best = cro_best(reef).cost;
    for (int it = 0; it < 80; ++it) {
        cro_step(reef, problem, params, rng);
        const int occupied = cro_occupied_count(reef);
        CHECK(occupied >= 1);
        CHECK(occupied <= 20);
        // The worst-fraction never includes the healthiest coral, so the
        // reef best cannot regress even with certain depredation.
        CHECK(cro_best(reef).cost <= best);
        best = cro_best(reef).cost;
        for (const auto& cell : reef.cells) {
            if (!cell.has_value()) continue;
            for (int d = 0; d < problem.dimension; ++d) {
                CHECK(cell->position[d] >= problem.lower[d]);
                CHECK(cell->position[d] <= problem.upper[d]);
            }
        }
    }
}

TEST_CASE("with depredation disabled the reef best is monotone") {
    const SearchProblem problem = ik_117();
    CroParams params;
    params.p_depredation = 0.0;
    Rng rng(11);
    ReefState reef = cro_init(problem, params, 20, rng);
    double best = cro_best(reef).cost;
    for (int it = 0; it < 50; ++it) {
        cro_step(reef, problem, params, rng);
        CHECK(cro_best(reef).cost <= best);
        best = cro_best(reef).cost;
    }
}

TEST_CASE("cro converges to about a tenth of a centimeter on the reference target") {
    const SearchProblem problem = ik_117();
    std::vector<double> errors;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        RunConfig rc;
        rc.seed = seed;
        errors.push_back(run(problem, rc, AlgorithmId::Cro).final_best.cost);
    }
    std::sort(errors.begin(), errors.end());
    CHECK(0.5 * (errors[4] + errors[5]) <= 1.0);
}
