#include <benchmark/benchmark.h>

#include <random>

#include "edskit/eds.hpp"
#include "edskit/fixtures.hpp"
#include "edskit/harness.hpp"
#include "edskit/kernel.hpp"
#include "edskit/profile.hpp"
#include "edskit/reductions.hpp"

using namespace edskit;
namespace fx = edskit::fixtures;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) b.add_edge(u, v);
    return b.build();
}

void BM_Meds(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    Graph g = random_graph(n, 0.25, 7);
    for (auto _ : st) benchmark::DoNotOptimize(meds(g).size);
}
BENCHMARK(BM_Meds)->DenseRange(10, 22, 4);

void BM_ProfileWorkedExample(benchmark::State& st) {
    Graph h = fx::worked_example();
    for (auto _ : st) benchmark::DoNotOptimize(profile_graph(h).d);
}
BENCHMARK(BM_ProfileWorkedExample);

void BM_Atlas(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(atlas(n).size());
}
BENCHMARK(BM_Atlas)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_Kernelize(benchmark::State& st, Graph h, bool fast) {
    const int x = static_cast<int>(st.range(0));
    ModInstance inst = gen_random_instance({h}, x, 2 * x * x, 0.02, 11);
    KernelOptions opt;
    opt.p5_fast_path = fast;
    for (auto _ : st) benchmark::DoNotOptimize(kernelize(inst, opt).n_after);
    st.counters["n_before"] = inst.graph.n();
}
BENCHMARK_CAPTURE(BM_Kernelize, p5_fast, fx::path(5), true)->RangeMultiplier(2)->Range(4, 32);
BENCHMARK_CAPTURE(BM_Kernelize, p5_basic, fx::path(5), false)->RangeMultiplier(2)->Range(4, 32);
BENCHMARK_CAPTURE(BM_Kernelize, k34e_general, fx::k34e(), true)->RangeMultiplier(2)->Range(4, 16);

}  // namespace
BENCHMARK_MAIN();
