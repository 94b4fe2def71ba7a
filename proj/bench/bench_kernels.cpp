// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "rewire/net.hpp"

namespace {

using namespace rewire;

// Left comb of n bottoms: every tensor is switched on the source side of an
// identity whose source is (I*I*...*I)'.
Shape bottom_comb(int n)
{
    ShapeBuilder b;
    b.unit();
    for (int i = 1; i < n; ++i) {
        b.unit();
        b.tensor();
    }
    return b.build();
}

Shape unit_power(int n) { return bottom_comb(n); }

Linking comb_identity(int n) { return identity(bottom_comb(n)); }

void BM_switchings(benchmark::State& state, Execution exec)
{
    const auto g = switching_graph(comb_identity(static_cast<int>(state.range(0)) + 1));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_switchings(g, 64, exec).all_trees);
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << g.switched.size()));
}

void BM_check_all(benchmark::State& state, Execution exec)
{
    std::vector<Linking> batch;
    for (int i = 0; i < state.range(0); ++i)
        batch.push_back(comb_identity(64 + i % 32));
    for (auto _ : state)
        benchmark::DoNotOptimize(check_all(batch, exec).size());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_class_search(benchmark::State& state, Execution exec)
{
    const int n = static_cast<int>(state.range(0));
    const Shape s = unit_power(n);
    const Linking f = identity(s);
    // reversed unit edges: far from the identity in the class graph
    Linking g(s, s);
    for (int i = 0; i < n; ++i)
        g.set(src(static_cast<std::uint32_t>(i)), tgt(static_cast<std::uint32_t>(n - 1 - i)));
    SearchOptions options;
    options.exec = exec;
    for (auto _ : state)
        benchmark::DoNotOptimize(equivalent(f, g, options).explored);
}

}  // namespace

BENCHMARK_CAPTURE(BM_switchings, serial, Execution::Serial)->Arg(12)->Arg(16);
BENCHMARK_CAPTURE(BM_switchings, parallel, Execution::Parallel)->Arg(12)->Arg(16);
BENCHMARK_CAPTURE(BM_check_all, serial, Execution::Serial)->Arg(512);
BENCHMARK_CAPTURE(BM_check_all, parallel, Execution::Parallel)->Arg(512);
BENCHMARK_CAPTURE(BM_class_search, serial, Execution::Serial)->Arg(4);
BENCHMARK_CAPTURE(BM_class_search, parallel, Execution::Parallel)->Arg(4);

BENCHMARK_MAIN();
