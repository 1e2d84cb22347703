// Serial reference vs OpenMP kernels. Run with --benchmark_filter to pick one.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "ftabfs/lbgen.hpp"
#include "ftabfs/mult_multi.hpp"
#include "ftabfs/mult_single.hpp"
#include "ftabfs/oracle.hpp"
#include "ftabfs/runtime.hpp"

using namespace ftabfs;

namespace {

constexpr double kLimit = 1e12;

Graph instance(int n) { return gen_family("gnp", n, 6.0 / n, 7); }

void BM_verify_serial(benchmark::State& state) {
    Graph g = instance(static_cast<int>(state.range(0)));
    EdgeMask h = build_mult3(g, 0).mask(g.m());
    for (auto _ : state) benchmark::DoNotOptimize(verify_structure_serial(g, h, 0, 3, 0, 1, kLimit));
}

void BM_verify_parallel(benchmark::State& state) {
    Graph g = instance(static_cast<int>(state.range(0)));
    EdgeMask h = build_mult3(g, 0).mask(g.m());
    set_threads(omp_get_num_procs());
    for (auto _ : state) benchmark::DoNotOptimize(verify_structure(g, h, 0, 3, 0, 1, kLimit));
}

void BM_fbfs_serial(benchmark::State& state) {
    Graph g = instance(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fbfs_serial(g, 0, 2, kLimit));
}

void BM_fbfs_parallel(benchmark::State& state) {
    Graph g = instance(static_cast<int>(state.range(0)));
    set_threads(omp_get_num_procs());
    for (auto _ : state) benchmark::DoNotOptimize(fbfs(g, 0, 2, kLimit));
}

}  // namespace

BENCHMARK(BM_verify_serial)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_parallel)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fbfs_serial)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fbfs_parallel)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
