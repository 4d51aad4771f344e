#include <benchmark/benchmark.h>

#include "hyperik/problem.hpp"

using namespace hyperik;

static void BM_DhTransform(benchmark::State& state) {
    RobotModel model;
    double theta = 0.3;
    for (auto _ : state) {
        Transform t = dh_transform(model.rows()[0], theta);
        benchmark::DoNotOptimize(t);
        theta += 1e-6;
    }
}
BENCHMARK(BM_DhTransform);

static void BM_ForwardKinematics(benchmark::State& state) {
    RobotModel model;
    Rng rng(1);
    SearchProblem problem = make_ik_problem(model, {1, 1, 7});
    Eigen::VectorXd q = sample_uniform(problem, rng).position;
    for (auto _ : state) {
        Position p = forward_kinematics(model, q);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_ForwardKinematics);

static void BM_Objective(benchmark::State& state) {
    RobotModel model;
    Rng rng(1);
    SearchProblem problem = make_ik_problem(model, {1, 1, 7});
    Eigen::VectorXd q = sample_uniform(problem, rng).position;
    for (auto _ : state) {
        benchmark::DoNotOptimize(problem.evaluate(q));
    }
}
BENCHMARK(BM_Objective);
