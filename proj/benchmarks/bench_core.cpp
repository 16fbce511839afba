#include <benchmark/benchmark.h>

#include <djkm/extension.hpp>
#include <djkm/pfamilies.hpp>

using namespace djkm;

static const CurveSpec kSpec = CurveSpec::djkm();
static const SimpleLieAlgebra kSl2 = SimpleLieAlgebra::sl2();

static void BM_ReduceUdt(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(reduce_u_dt(k, kSpec));
}
BENCHMARK(BM_ReduceUdt)->Arg(8)->Arg(24)->Arg(48)->Arg(-24);

static void BM_Cocycle(benchmark::State& state) {
    RingElem f = RingElem::monomial(5, 1, RatFuncC(1));
    RingElem g = RingElem::monomial(-7, 1, RatFuncC(1));
    for (auto _ : state) benchmark::DoNotOptimize(cocycle(f, g, kSpec));
}
BENCHMARK(BM_Cocycle);

static void BM_PFamilyRecursion(benchmark::State& state) {
    int kmax = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pfamily_recursion(-3, kmax));
}
BENCHMARK(BM_PFamilyRecursion)->Arg(20)->Arg(40)->Arg(80);

static void BM_PFamilySeries(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pfamily_series(-4, n));
}
BENCHMARK(BM_PFamilySeries)->Arg(32)->Arg(64);

static void BM_BracketKassel(benchmark::State& state) {
    ExtElement a = ExtElement::loop(0, RingElem::monomial(5, 1, RatFuncC(1)));
    ExtElement b = ExtElement::loop(2, RingElem::monomial(-4, 1, RatFuncC(1)));
    for (auto _ : state) benchmark::DoNotOptimize(bracket_kassel(a, b, kSl2, kSpec));
}
BENCHMARK(BM_BracketKassel);

static void BM_BracketClosed(benchmark::State& state) {
    ExtElement a = ExtElement::loop(0, RingElem::monomial(5, 1, RatFuncC(1)));
    ExtElement b = ExtElement::loop(2, RingElem::monomial(-4, 1, RatFuncC(1)));
    for (auto _ : state) benchmark::DoNotOptimize(bracket_closed(a, b, kSl2, kSpec));
}
BENCHMARK(BM_BracketClosed);

static void BM_VerifyJacobi(benchmark::State& state) {
    int window = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify(kSl2, window, {"jacobi"}, kSpec));
}
BENCHMARK(BM_VerifyJacobi)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
