// OpenMP kernels against the serial reference.

#include <benchmark/benchmark.h>

#include "qannulus/kernels.hpp"

using namespace qannulus;

namespace {

ModeOperatorSpec spec(long n) { return {n, BetaFunction::canonical(), WeightParams::make(2, 1, 3)}; }

template <auto F>
void hs_window(benchmark::State& st) {
    const ModeOperatorSpec s = spec(5);
    for (auto _ : st) benchmark::DoNotOptimize(F(s, {2.0, 1.0}, st.range(0)).total);
    st.SetComplexityN(st.range(0));
}

template <auto F>
void q_block(benchmark::State& st) {
    const ModeOperatorSpec s = spec(-3);
    for (auto _ : st) benchmark::DoNotOptimize(F(s, kernels::SiteRange::symmetric(st.range(0))).data());
}

template <auto F>
void d_block(benchmark::State& st) {
    const ModeOperatorSpec s = spec(2);
    for (auto _ : st) benchmark::DoNotOptimize(F(s, kernels::SiteRange::symmetric(st.range(0))).data());
}

template <auto F>
void kernel_sweep(benchmark::State& st) {
    const ModeOperatorSpec s = spec(0);
    for (auto _ : st) benchmark::DoNotOptimize(F(s, -3, 3, st.range(0)).size());
}

}  // namespace

BENCHMARK(hs_window<kernels::hs_window>)->Name("hs_window/omp")->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(hs_window<kernels::serial::hs_window>)->Name("hs_window/serial")->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(q_block<kernels::q_block>)->Name("q_block/omp")->Arg(40)->Arg(80)->Arg(200);
BENCHMARK(q_block<kernels::serial::q_block>)->Name("q_block/serial")->Arg(40)->Arg(80)->Arg(200);
BENCHMARK(d_block<kernels::d_block>)->Name("d_block/omp")->Arg(80)->Arg(400);
BENCHMARK(d_block<kernels::serial::d_block>)->Name("d_block/serial")->Arg(80)->Arg(400);
BENCHMARK(kernel_sweep<kernels::kernel_sweep>)->Name("kernel_sweep/omp")->Arg(20)->Arg(60);
BENCHMARK(kernel_sweep<kernels::serial::kernel_sweep>)->Name("kernel_sweep/serial")->Arg(20)->Arg(60);

BENCHMARK_MAIN();
