#include <benchmark/benchmark.h>

#include "dsg/gaussian.hpp"
#include "dsg/spectral.hpp"
#include "dsg/statics.hpp"

namespace {

void BM_SolveKink(benchmark::State& state) {
    const dsg::ModelParams params{501, double(state.range(0)), 0.6};
    for (auto _ : state) {
        auto kink = dsg::solve_kink(params);
        benchmark::DoNotOptimize(kink.phi.data());
    }
}
BENCHMARK(BM_SolveKink)->Arg(10000)->Arg(100000)->Arg(1000000);

void BM_Eigendecompose(benchmark::State& state) {
    const int n_sites = int(state.range(0));
    const auto h = dsg::build_hessian(
        dsg::vacuum_configuration({n_sites, 1e4, 0.6}));
    for (auto _ : state) {
        auto modes = dsg::eigendecompose(h);
        benchmark::DoNotOptimize(modes.omega.data());
    }
}
BENCHMARK(BM_Eigendecompose)->Arg(101)->Arg(501);

void BM_Covariance(benchmark::State& state) {
    const auto modes = dsg::eigendecompose(
        dsg::build_hessian(dsg::vacuum_configuration({501, 1e4, 0.6})));
    for (auto _ : state) {
        auto cov = dsg::covariance(modes);
        benchmark::DoNotOptimize(cov.xpos.data());
    }
}
BENCHMARK(BM_Covariance);

void BM_SubblockSpectrum(benchmark::State& state) {
    const auto modes = dsg::eigendecompose(
        dsg::build_hessian(dsg::vacuum_configuration({501, 1e4, 0.6})));
    const auto cov = dsg::covariance(modes);
    const int ell = int(state.range(0));
    for (auto _ : state) {
        auto spectrum = dsg::symplectic_eigenvalues(cov, ell);
        benchmark::DoNotOptimize(spectrum.lambdas.data());
    }
}
BENCHMARK(BM_SubblockSpectrum)->Arg(125)->Arg(250)->Arg(501);

void BM_EntropyScan(benchmark::State& state) {
    const int n_sites = int(state.range(0));
    const auto modes = dsg::eigendecompose(
        dsg::build_hessian(dsg::vacuum_configuration({n_sites, 1e4, 0.6})));
    std::vector<int> lengths(n_sites);
    for (int i = 0; i < n_sites; ++i) lengths[i] = i + 1;
    for (auto _ : state) {
        auto scan = dsg::entropy_scan(modes, lengths, dsg::Sector::Vacuum);
        benchmark::DoNotOptimize(scan.entropy.data());
    }
}
BENCHMARK(BM_EntropyScan)->Arg(101)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
