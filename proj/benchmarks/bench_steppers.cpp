#include <benchmark/benchmark.h>

#include "hyperik/bench.hpp"

using namespace hyperik;

namespace {

// One full iteration of each algorithm at the standard population of 20.
void run_steps(benchmark::State& state, AlgorithmId id) {
    SearchProblem problem = make_ik_problem(RobotModel{}, {1, 1, 7});
    AlgorithmParams params;
    Rng rng(1);
    auto optimizer = make_optimizer(id, params);
    optimizer->init(problem, 20, rng);
    int iteration = 0;
    for (auto _ : state) {
        optimizer->step(problem, iteration % 500, 500, rng);
        ++iteration;
    }
    benchmark::DoNotOptimize(optimizer->best().cost);
}

void run_full(benchmark::State& state, AlgorithmId id) {
    SearchProblem problem = make_ik_problem(RobotModel{}, {1, 1, 7});
    RunConfig rc;
    std::uint64_t seed = 1;
    for (auto _ : state) {
        rc.seed = seed++;
        benchmark::DoNotOptimize(run(problem, rc, id).final_best.cost);
    }
}

} // namespace

#define STEPPER_BENCH(name, id)                                      \
    static void BM_Step_##name(benchmark::State& state) {            \
        run_steps(state, AlgorithmId::id);                           \
    }                                                                \
    BENCHMARK(BM_Step_##name)

STEPPER_BENCH(pso, Pso);
STEPPER_BENCH(cro, Cro);
STEPPER_BENCH(bes, Bes);
STEPPER_BENCH(efo, Efo);
STEPPER_BENCH(mvo, Mvo);
STEPPER_BENCH(nro, Nro);

static void BM_FullRun_bes(benchmark::State& state) {
    run_full(state, AlgorithmId::Bes);
}
BENCHMARK(BM_FullRun_bes)->Unit(benchmark::kMillisecond);

static void BM_FullRun_pso(benchmark::State& state) {
    run_full(state, AlgorithmId::Pso);
}
BENCHMARK(BM_FullRun_pso)->Unit(benchmark::kMillisecond);
