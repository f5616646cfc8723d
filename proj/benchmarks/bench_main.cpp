#include "brokenstick/fractal.hpp"
#include "brokenstick/montecarlo.hpp"
#include "brokenstick/probability.hpp"
#include "brokenstick/render.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace brokenstick;

void BM_BaryArea(benchmark::State& state) {
    const Tri t{BaryPoint(Rat(1, 2), Rat(1, 3), Rat(1, 6)),
                BaryPoint(Rat(1, 4), Rat(1, 4), Rat(1, 2)),
                BaryPoint(Rat(1, 8), Rat(3, 4), Rat(1, 8))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(bary_area(t));
    }
}
BENCHMARK(BM_BaryArea);

void BM_Build(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build(level));
    }
}
BENCHMARK(BM_Build)->Arg(4)->Arg(12)->Arg(24);

void BM_Audit(benchmark::State& state) {
    const FractalApprox a = build(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(audit(a));
    }
}
BENCHMARK(BM_Audit)->Arg(12);

void BM_ClassifyPoint(benchmark::State& state) {
    const FractalApprox a = build(12);
    const BaryPoint p(Rat(11, 64), Rat(13, 64), Rat(40, 64));
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_point(a, p));
    }
}
BENCHMARK(BM_ClassifyPoint);

void BM_SamplePhysical(benchmark::State& state) {
    Rng rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_physical(rng));
    }
}
BENCHMARK(BM_SamplePhysical);

void BM_FractalDraw(benchmark::State& state) {
    const FractalApprox a = build(12);
    const FractalSampler sampler(a);
    Rng rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sampler.sample(rng));
    }
}
BENCHMARK(BM_FractalDraw);

void BM_Estimate(benchmark::State& state) {
    const Sampler sampler = Sampler::physical();
    const Predicate predicate = Predicate::triangle();
    const long long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_probability(sampler, predicate, n, 1));
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Estimate)->Arg(1 << 16)->Arg(1 << 20);

void BM_ProbabilityReport(benchmark::State& state) {
    const AuditReport a = audit(build(12));
    for (auto _ : state) {
        benchmark::DoNotOptimize(probability_report(Mode::Measured, 12, &a));
    }
}
BENCHMARK(BM_ProbabilityReport);

void BM_RenderSvg(benchmark::State& state) {
    const FractalApprox a = build(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(render_svg(a));
    }
}
BENCHMARK(BM_RenderSvg)->Arg(3)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
