#include <benchmark/benchmark.h>

#include <numbers>

#include "swbesov/besov.hpp"
#include "swbesov/evolve_sw.hpp"
#include "swbesov/laws.hpp"
#include "swbesov/partition.hpp"
#include "swbesov/random_fields.hpp"

using namespace swbesov;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void BM_RoundTrip(benchmark::State& st) {
    auto g = make_grid(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), kTwoPi);
    Field f = random_field(g, 1, 1, {.band = 8});
    for (auto _ : st) {
        auto v = f.physical_all();
        benchmark::DoNotOptimize(Field::from_physical(g, v));
    }
}
BENCHMARK(BM_RoundTrip)->Args({1, 256})->Args({2, 128})->Args({2, 256})->Args({3, 64});

void BM_BlockNorms(benchmark::State& st) {
    auto g = make_grid(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), kTwoPi);
    auto P = build_partition(g);
    Field f = random_field(g, 1, 2, {.band = g->dealias_cutoff()});
    for (auto _ : st) benchmark::DoNotOptimize(block_norms(f, 2.0, P));
}
BENCHMARK(BM_BlockNorms)->Args({2, 128})->Args({2, 256})->Args({3, 64});

struct SwData {
    GridPtr g;
    PhysicalLaws laws;
    FriedrichsLevel level;
    Field q, u;
    explicit SwData(int n)
        : g(make_grid(2, n, kTwoPi)), laws(PhysicalLaws::shallow_water(g, 0.1)), level(make_friedrichs(g, 0)),
          q(random_field(g, 1, 3, {.band = 6})), u(random_field(g, 2, 4, {.band = 6})) {
        q *= 0.01 / sup_norm(q);
        u *= 0.01 / sup_norm(u);
    }
};

void BM_NonlinearRhs(benchmark::State& st) {
    SwData d(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(nonlinear_rhs(d.q, d.u, d.laws, d.level));
}
BENCHMARK(BM_NonlinearRhs)->Arg(64)->Arg(128)->Arg(256);

void BM_EvolveSteps(benchmark::State& st) {
    SwData d(static_cast<int>(st.range(0)));
    EvolveOptions o;
    o.T = 0.2;
    o.dt = 0.02;
    o.store = false;
    for (auto _ : st) benchmark::DoNotOptimize(evolve_sw(d.q, d.u, d.laws, d.level, o).steps);
    st.SetItemsProcessed(st.iterations() * 10);
}
BENCHMARK(BM_EvolveSteps)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
