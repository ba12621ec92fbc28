// Serial reference kernels against their OpenMP versions.
//   ./bench_parallel --benchmark_counters_tabular=true

#include <benchmark/benchmark.h>
#include <omp.h>

#include <algorithm>

#include "elres/elres.hpp"

using namespace elres;

namespace {

const LameParams kUnit{1.0, 1.0};

SweepSpec sweep_spec() {
    SweepSpec s;
    s.matrix = kUnit;
    s.src = {5, 1.0, 0.0};
    s.fixed = 2.08e-9;
    s.lo = -2.05;
    s.hi = -1.85;
    s.steps = 401;
    return s;
}

CoreShellConfig calr_cfg() { return recipe_config({0.8, 1.0}, kUnit, kUnit, 5.0, 25); }

FieldModel field_model() {
    CoreShellConfig c = calr_cfg();
    c.p_tune = 0.0159575;
    const SourceModes src{{25, 1.0, 0.0}, {10, 0.5, 0.0}};
    std::vector<CalrModeResult> sols;
    for (const auto& s : src) sols.push_back(solve_calr_mode(c, s));
    return calr_field_model(c, src, sols);
}

// Arg 0 runs the serial reference; Arg n > 0 runs OpenMP with n threads.
template <class Serial, class Parallel>
void run(benchmark::State& st, Serial serial, Parallel parallel) {
    const int threads = int(st.range(0));
    if (threads > 0) omp_set_num_threads(threads);
    for (auto _ : st) {
        if (threads == 0)
            benchmark::DoNotOptimize(serial());
        else
            benchmark::DoNotOptimize(parallel());
    }
    st.counters["threads"] = threads;
}

void BM_Sweep(benchmark::State& st) {
    const SweepSpec s = sweep_spec();
    run(st, [&] { return sweep_serial(s); }, [&] { return sweep(s); });
}

void BM_DetScan(benchmark::State& st) {
    const CoreShellConfig c = calr_cfg();
    run(st, [&] { return det_scan_serial(c, -0.16, 0.16, 641); }, [&] { return det_scan(c, -0.16, 0.16, 641); });
}

void BM_FieldGrid(benchmark::State& st) {
    const FieldModel m = field_model();
    const auto pts = cartesian_grid(-1.5, 1.5, -1.5, 1.5, 81, 81);
    run(st, [&] { return eval_total_field_serial(m, pts); }, [&] { return eval_total_field(m, pts); });
}

void thread_args(benchmark::internal::Benchmark* b) {
    b->Arg(0);
    const int hw = std::max(4, omp_get_num_procs());
    for (int t = 1; t <= hw; t *= 2) b->Arg(t);
    b->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_Sweep)->Apply(thread_args);
BENCHMARK(BM_DetScan)->Apply(thread_args);
BENCHMARK(BM_FieldGrid)->Apply(thread_args);

BENCHMARK_MAIN();
