#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include <schurproc/asympt.hpp>
#include <schurproc/kernel.hpp>
#include <schurproc/mcmc.hpp>
#include <schurproc/process.hpp>
#include <schurproc/schur.hpp>

using namespace schurproc;

namespace {

void BM_SkewSchur(benchmark::State& state) {
    Partition lam({8, 6, 4, 2}), mu({4, 2});
    Specialization s(Orientation::plus);
    s.add({FactorKind::geom_pole, 0.3});
    s.add({FactorKind::geom_pole, 0.09});
    s.add({FactorKind::lin_zero, 0.2});
    for (auto _ : state) benchmark::DoNotOptimize(skew_schur(lam, mu, s));
}
BENCHMARK(BM_SkewSchur);

void BM_TransitionWeight(benchmark::State& state) {
    Partition mu({5, 3, 1}), lam({6, 4, 2});
    SpecPair phi;
    phi.plus.add({FactorKind::geom_pole, 0.3});
    phi.minus.add({FactorKind::geom_pole, 0.2});
    for (auto _ : state)
        benchmark::DoNotOptimize(transition_weight(mu, lam, phi));
}
BENCHMARK(BM_TransitionWeight);

void BM_Qdilog(benchmark::State& state) {
    std::complex<double> z(0.7, 0.4);
    double q = std::exp(-0.05);
    for (auto _ : state) benchmark::DoNotOptimize(qdilog(z, q));
}
BENCHMARK(BM_Qdilog);

void BM_Kernel3D(benchmark::State& state) {
    double q = std::exp(-state.range(0) / 100.0);
    QuadratureSpec quad;
    quad.tol = 1e-8;
    TilePoint a{0, 1}, b{2, 3};
    for (auto _ : state) benchmark::DoNotOptimize(kernel_3d(a, b, q, quad));
}
BENCHMARK(BM_Kernel3D)->Arg(30)->Arg(10)->Arg(5);

void BM_KernelEntry(benchmark::State& state) {
    auto p = mq_params(0.3, 20);
    QuadratureSpec quad;
    quad.tol = 1e-8;
    KernelQuery kq{1, 3, 0, 1};
    for (auto _ : state) benchmark::DoNotOptimize(kernel_entry(p, kq, quad));
}
BENCHMARK(BM_KernelEntry);

void BM_BulkCorrelation(benchmark::State& state) {
    std::vector<TilePoint> offsets = {{0, 0}, {1, 1}, {2, -2}};
    BulkPoint b{0.5, 0.2};
    for (auto _ : state)
        benchmark::DoNotOptimize(bulk_correlation(offsets, b, 1e-8));
}
BENCHMARK(BM_BulkCorrelation);

void BM_LimitShape(benchmark::State& state) {
    BulkPoint b{0.8, -0.3};
    for (auto _ : state) benchmark::DoNotOptimize(limit_shape(b, 1e-8));
}
BENCHMARK(BM_LimitShape);

void BM_SamplerSteps(benchmark::State& state) {
    BoxSampler s(std::exp(-0.1), 60, 60, 60, 1);
    for (auto _ : state) s.step();
    benchmark::DoNotOptimize(s.volume());
}
BENCHMARK(BM_SamplerSteps);

void BM_Enumerate(benchmark::State& state) {
    auto p = mq_params(0.1, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        long long count = 0;
        for_each_config(p, state.range(0),
                        [&](const std::vector<Partition>&, int, double) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_Enumerate)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
