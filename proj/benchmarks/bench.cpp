#include <benchmark/benchmark.h>

#include "class16/classgroup.hpp"
#include "class16/contfrac.hpp"
#include "class16/dedekind.hpp"
#include "class16/pell.hpp"
#include "class16/quadirr.hpp"
#include "class16/verifier.hpp"

using namespace class16;

namespace {

void BM_NegCF(benchmark::State& state) {
    Int p(state.range(0));
    for (auto _ : state) {
        auto cf = contfrac::neg_cf(QuadIrr::sqrt_of(p));
        benchmark::DoNotOptimize(cf.period.size());
    }
}
BENCHMARK(BM_NegCF)->Arg(79)->Arg(439)->Arg(43063);

void BM_MOfP(benchmark::State& state) {
    Int p(state.range(0));
    for (auto _ : state) {
        Rat m = contfrac::m_of_p(p);
        benchmark::DoNotOptimize(m.get_num());
    }
}
BENCHMARK(BM_MOfP)->Arg(439)->Arg(43063);

void BM_DedekindFast(benchmark::State& state) {
    Int h(987654321), k(state.range(0));
    for (auto _ : state) {
        Rat s = dedekind::dedekind_sum(h, k);
        benchmark::DoNotOptimize(s.get_num());
    }
}
BENCHMARK(BM_DedekindFast)->Arg(1000003)->Arg(1000000007);

void BM_DedekindNaive(benchmark::State& state) {
    Int h(12345), k(state.range(0));
    for (auto _ : state) {
        Rat s = dedekind::dedekind_sum_naive(h, k);
        benchmark::DoNotOptimize(s.get_num());
    }
}
BENCHMARK(BM_DedekindNaive)->Arg(10007)->Arg(100003);

void BM_FundamentalPell(benchmark::State& state) {
    Int p(state.range(0));
    for (auto _ : state) {
        auto sol = pell::fundamental_pell(p);
        benchmark::DoNotOptimize(sol.d.get_mpz_t());
    }
}
BENCHMARK(BM_FundamentalPell)->Arg(79)->Arg(991)->Arg(43063);

void BM_ClassGroup(benchmark::State& state) {
    Int p(state.range(0));
    for (auto _ : state) {
        auto g = classgroup::enumerate_wide_classes(p);
        benchmark::DoNotOptimize(g.size());
    }
}
BENCHMARK(BM_ClassGroup)->Arg(439)->Arg(43063);

void BM_VerifyMain(benchmark::State& state) {
    Int p(state.range(0));
    for (auto _ : state) {
        auto r = verifier::verify_main(p);
        benchmark::DoNotOptimize(r.checks.all());
    }
}
BENCHMARK(BM_VerifyMain)->Arg(79)->Arg(439)->Arg(43063);

}  // namespace

BENCHMARK_MAIN();
