#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hyperik/bes.hpp"
#include "hyperik/runner.hpp"

using namespace hyperik;

namespace {

constexpr double kPi = std::numbers::pi;

SearchProblem ik_117() {
    return make_ik_problem(RobotModel{}, Position{1, 1, 7});
}

// Unbounded quadratic bowl, handy for observing stage geometry unclamped.
SearchProblem wide_bowl(int dim) {
    SearchProblem p;
    p.dimension = dim;
    p.lower = Eigen::VectorXd::Constant(dim, -100.0);
    p.upper = Eigen::VectorXd::Constant(dim, 100.0);
    p.evaluate = [](const Eigen::VectorXd& q) { return q.squaredNorm(); };
    return p;
}

} // namespace

TEST_CASE("spiral polar coordinates are normalized into [-1, 1]") {
    const BesParams params;
    Rng rng(3);
    const BesPolar polar = bes_spiral_polar(20, params, rng);
    double max_x = 0.0, max_y = 0.0;
    for (int i = 0; i < 20; ++i) {
        CHECK(std::abs(polar.x[i]) <= 1.0);
        CHECK(std::abs(polar.y[i]) <= 1.0);
        CHECK(polar.theta[i] >= 0.0);
        CHECK(polar.theta[i] <= params.a_corner * kPi);
        CHECK(polar.r[i] <= polar.theta[i] * params.r_cycles);
        max_x = std::max(max_x, std::abs(polar.x[i]));
        max_y = std::max(max_y, std::abs(polar.y[i]));
    }
    CHECK(max_x == doctest::Approx(1.0));
    CHECK(max_y == doctest::Approx(1.0));

    Rng again(3);
    const BesPolar replay = bes_spiral_polar(20, params, again);
    CHECK(replay.x == polar.x);
    CHECK(replay.y == polar.y);
}

TEST_CASE("degenerate all-zero projections normalize to zero vectors") {
    BesParams params;
    params.a_corner = 0.0; // forces theta = 0, so every projection is zero
    Rng rng(1);
    const BesPolar polar = bes_spiral_polar(10, params, rng);
    for (int i = 0; i < 10; ++i) {
        CHECK(polar.x[i] == 0.0);
        CHECK(polar.y[i] == 0.0);
    }
}

TEST_CASE("swoop polar uses the movement intensity and r equal to theta") {
    const BesParams params;
    Rng rng(7);
    const BesPolar polar = bes_swoop_polar(20, params, rng);
    for (int i = 0; i < 20; ++i) {
        CHECK(polar.theta[i] >= 0.0);
        CHECK(polar.theta[i] <= params.alpha_intensity * kPi);
        CHECK(polar.r[i] == polar.theta[i]);
        CHECK(std::abs(polar.x[i]) <= 1.0);
        CHECK(std::abs(polar.y[i]) <= 1.0);
    }
}

TEST_CASE("select stage with zero intensity sends improvers onto the best") {
    const SearchProblem problem = wide_bowl(4);
    BesParams params;
    params.alpha_intensity = 0.0;
    BesState state;
    state.best = {Eigen::VectorXd::Zero(4), 0.0};
    for (int i = 0; i < 5; ++i) {
        Eigen::VectorXd far = Eigen::VectorXd::Constant(4, 2.0 + i);
        state.eagles.push_back({far, problem.evaluate(far)});
    }
    Rng rng(1);
    bes_select_stage(state, problem, params, rng);
    for (const Candidate& eagle : state.eagles) {
        CHECK(eagle.position == state.best.position);
    }
}

TEST_CASE("a fully collapsed population is a fixed point of select and search") {
    // Two eagles make the centroid bit-exact; larger populations round the
    // centroid by an ulp and the stages then polish the last bits.
    const SearchProblem problem = ik_117();
    Rng rng(5);
    BesState state = bes_init(problem, 2, rng);
    for (Candidate& eagle : state.eagles) eagle = state.best;

    const Eigen::VectorXd home = state.best.position;
    bes_select_stage(state, problem, BesParams{}, rng);
    for (const Candidate& e : state.eagles) CHECK(e.position == home);

    bes_search_stage(state, problem, BesParams{}, rng);
    for (const Candidate& e : state.eagles) CHECK(e.position == home);
}

TEST_CASE("search stage is defined for a single eagle") {
    const SearchProblem problem = ik_117();
    Rng rng(6);
    BesState state = bes_init(problem, 1, rng);
    const Eigen::VectorXd before = state.eagles[0].position;
    bes_search_stage(state, problem, BesParams{}, rng);
    CHECK(state.eagles[0].position == before);
}

TEST_CASE("swoop keeps collapsed eagles on the ray through the best") {
    const SearchProblem problem = wide_bowl(3);
    BesParams params;
    params.c1 = 0.0;
    params.c2 = 0.0;
    BesState state;
    Eigen::VectorXd best(3);
    best << 3.0, -2.0, 1.0;
    state.best = {best, problem.evaluate(best)};
    for (int i = 0; i < 6; ++i) state.eagles.push_back(state.best);
    Rng rng(21);
    bes_swoop_stage(state, problem, params, rng);
    for (const Candidate& eagle : state.eagles) {
        // Any accepted move must stay proportional to the best position.
        const double scale = eagle.position[0] / best[0];
        CHECK((eagle.position - scale * best).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("one step is select, then search, then swoop") {
    const SearchProblem problem = ik_117();
    Rng init_a(33), init_b(33);
    BesState composed = bes_init(problem, 12, init_a);
    BesState stepped = bes_init(problem, 12, init_b);

    Rng rng_a(77), rng_b(77);
    bes_select_stage(composed, problem, BesParams{}, rng_a);
    bes_search_stage(composed, problem, BesParams{}, rng_a);
    bes_swoop_stage(composed, problem, BesParams{}, rng_a);
    bes_step(stepped, problem, BesParams{}, rng_b);

    CHECK(composed.best.cost == stepped.best.cost);
    for (std::size_t i = 0; i < composed.eagles.size(); ++i) {
        CHECK(composed.eagles[i].position == stepped.eagles[i].position);
    }
}

TEST_CASE("best cost is monotone and eagles stay in bounds over a long run") {
    const SearchProblem problem = ik_117();
    Rng rng(2);
    BesState state = bes_init(problem, 20, rng);
    double last = state.best.cost;
    for (int it = 0; it < 500; ++it) {
        bes_step(state, problem, BesParams{}, rng);
        CHECK(state.best.cost <= last);
        last = state.best.cost;
    }
    for (const Candidate& eagle : state.eagles) {
        for (int d = 0; d < problem.dimension; ++d) {
            CHECK(eagle.position[d] >= problem.lower[d]);
            CHECK(eagle.position[d] <= problem.upper[d]);
        }
    }
}

TEST_CASE("bes drives the reference target to machine-zero error") {
    const SearchProblem problem = ik_117();
    for (std::uint64_t seed : {1, 2, 3}) {
        RunConfig rc;
        rc.seed = seed;
        CHECK(run(problem, rc, AlgorithmId::Bes).final_best.cost <= 1e-12);
    }
}

TEST_CASE("bes reaches the workspace boundary point exactly") {
    // (8,0,3) is reachable only by the fully extended pose, a single point
    // in joint space rather than a solution manifold.
    const SearchProblem problem = make_ik_problem(RobotModel{}, {8, 0, 3});
    RunConfig rc;
    rc.seed = 1;
    CHECK(run(problem, rc, AlgorithmId::Bes).final_best.cost <= 1e-12);
}
