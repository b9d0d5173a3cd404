#include <benchmark/benchmark.h>

#include <random>

#include "lcheb/discrete.hpp"
#include "lcheb/interp.hpp"
#include "lcheb/nodes.hpp"
#include "lcheb/spectral.hpp"

using namespace lcheb;

namespace {

GridFunction rand_grid(const NodeSet& ns) {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(ns.size());
    for (auto& x : v) x = dist(rng);
    return GridFunction(ns, std::move(v));
}

void BM_enumerate(benchmark::State& state) {
    ParamVec pv({state.range(0), state.range(0) + 1}, {0, 0});
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_index_set(pv));
}
BENCHMARK(BM_enumerate)->Arg(16)->Arg(64)->Arg(256);

void BM_coefficients_direct(benchmark::State& state) {
    ParamVec pv({state.range(0), state.range(0) + 1}, {0, 0});
    NodeSet ns(pv);
    SpectralBasis sb(pv);
    auto h = rand_grid(ns);
    for (auto _ : state) benchmark::DoNotOptimize(coefficients_direct(ns, sb, h));
}
BENCHMARK(BM_coefficients_direct)->Arg(8)->Arg(16)->Arg(32);

void BM_coefficients_dct(benchmark::State& state) {
    ParamVec pv({state.range(0), state.range(0) + 1}, {0, 0});
    NodeSet ns(pv);
    SpectralBasis sb(pv);
    auto h = rand_grid(ns);
    for (auto _ : state) benchmark::DoNotOptimize(coefficients_dct(ns, sb, h));
}
BENCHMARK(BM_coefficients_dct)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_evaluate_grid(benchmark::State& state) {
    ParamVec pv({state.range(0), state.range(0) + 1}, {0, 0});
    NodeSet ns(pv);
    SpectralBasis sb(pv);
    auto cc = interpolate(ns, sb, rand_grid(ns), Space::averaged);
    for (auto _ : state) benchmark::DoNotOptimize(cc.evaluate_box_grid());
}
BENCHMARK(BM_evaluate_grid)->Arg(16)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
