#include <benchmark/benchmark.h>

#include "ellcon/apparent.hpp"
#include "ellcon/maps.hpp"
#include "ellcon/sampling.hpp"

using namespace ellcon;

namespace {

MPoly dense_in(std::initializer_list<Var> vs, int deg, std::uint64_t seed) {
    auto g = trial_rng(seed, 0);
    MPoly p(1);
    for (Var v : vs) {
        MPoly f;
        for (int k = 0; k <= deg; ++k) f += MPoly::var(v, k).scaled(random_nonzero_rat(g));
        p *= f;
    }
    return p;
}

void BM_mul_serial(benchmark::State& st) {
    int d = static_cast<int>(st.range(0));
    MPoly a = dense_in({Var::ul, Var::ut, Var::lam}, d, 1), b = dense_in({Var::ul, Var::ut, Var::t}, d, 2);
    for (auto _ : st) benchmark::DoNotOptimize(mul_serial(a, b));
    st.counters["terms"] = static_cast<double>(a.size() * b.size());
}

void BM_mul_parallel(benchmark::State& st) {
    int d = static_cast<int>(st.range(0));
    MPoly a = dense_in({Var::ul, Var::ut, Var::lam}, d, 1), b = dense_in({Var::ul, Var::ut, Var::t}, d, 2);
    for (auto _ : st) benchmark::DoNotOptimize(mul_parallel(a, b));
    st.counters["terms"] = static_cast<double>(a.size() * b.size());
}

void BM_tpsi_symbolic(benchmark::State& st) {
    Params P = Params::symbolic();
    for (auto _ : st) benchmark::DoNotOptimize(t_psi_derived(P, U_l(), U_t()).equals(t_psi_closed(P, U_l(), U_t())));
}

void BM_fiber_count(benchmark::State& st) {
    Params P = Params::at(2, 3, Rat(1, 5));
    std::uint64_t s = 0;
    for (auto _ : st) benchmark::DoNotOptimize(fiber_count_random(P, s++).count);
}

}  // namespace

BENCHMARK(BM_mul_serial)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mul_parallel)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_tpsi_symbolic)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fiber_count)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
