#include "semifree/action_file.hpp"
#include "semifree/classifier.hpp"

#include <benchmark/benchmark.h>

using namespace semifree;

static void BM_Enumerate(benchmark::State& state)
{
    RuledSurface s(state.range(0) ? Bundle::Nontrivial : Bundle::Trivial, 1);
    EnumerationOptions opt;
    opt.bound = state.range(1);
    opt.max_walls = 3;
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_configurations(s, opt));
}
BENCHMARK(BM_Enumerate)->Args({0, 3})->Args({0, 5})->Args({1, 3})->Unit(benchmark::kMillisecond);

static void BM_ValidateExample(benchmark::State& state)
{
    ActionData data = load_action_file(std::string(SEMIFREE_DATA_DIR) + "/example_7_2.act");
    for (auto _ : state)
        benchmark::DoNotOptimize(validate_action_data(data));
}
BENCHMARK(BM_ValidateExample);

static void BM_SolveDuals(benchmark::State& state)
{
    RuledSurface s(Bundle::Trivial, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_duals(s, 4, {7, 3}, state.range(0)));
}
BENCHMARK(BM_SolveDuals)->Arg(10)->Arg(40);

BENCHMARK_MAIN();
