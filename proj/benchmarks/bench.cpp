#include <benchmark/benchmark.h>

#include "tautring/quotient.hpp"
#include "tautring/symmetry.hpp"
#include "tautring/vrecursion.hpp"

using namespace tautring;

static void BM_quotient_build(benchmark::State& state) {
  const Presentation pres = build_presentation(1, 3);
  for (auto _ : state) {
    Quotient q(pres);
    q.extend(4);
    benchmark::DoNotOptimize(q.dim(4));
  }
}
BENCHMARK(BM_quotient_build)->Unit(benchmark::kMillisecond);

static void BM_recursion_step(benchmark::State& state) {
  VRecursion rec(get_ctx(3), SubsetsMode::Strict, PairCount::Ordered);
  const VData seed = rec.seed();
  for (auto _ : state) {
    VData next = rec.step(seed);
    benchmark::DoNotOptimize(next.top.t.size());
  }
}
BENCHMARK(BM_recursion_step)->Unit(benchmark::kMillisecond);

static void BM_reynolds_nf(benchmark::State& state) {
  Quotient q(build_presentation(1, 3));
  q.extend(4);
  const Ctx& ctx = q.ctx();
  const Poly x = Poly::var(ctx.amb_F(0), ctx.namb()) * Poly::var(ctx.amb_D(1), ctx.namb());
  for (auto _ : state) {
    const Poly r = q.nf(reynolds(ctx, x));
    benchmark::DoNotOptimize(r.t.size());
  }
}
BENCHMARK(BM_reynolds_nf)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
