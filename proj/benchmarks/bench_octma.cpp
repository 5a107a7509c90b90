#include <benchmark/benchmark.h>

#include "octma/ma_solver.hpp"
#include "octma/suites.hpp"
#include "octma/syzygy.hpp"

using namespace octma;

namespace {

void BM_OctonionMultiply(benchmark::State& state) {
    Rng rng(1, "bench.octonion");
    const OctonionQ a = random_octonion(rng);
    const OctonionQ b = random_octonion(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_OctonionMultiply);

void BM_OctonionMultiplyDouble(benchmark::State& state) {
    Rng rng(1, "bench.octonion.d");
    OctonionD a, b;
    for (int k = 0; k < 8; ++k) {
        a[k] = rng.uniform(-1.0, 1.0);
        b[k] = rng.uniform(-1.0, 1.0);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_OctonionMultiplyDouble);

void BM_MixedDet(benchmark::State& state) {
    Rng rng(1, "bench.mixed_det");
    const HermMatrix2<double> A = random_pd_herm_d(rng);
    const HermMatrix2<double> B = random_herm_d(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mixed_det(A, B));
    }
}
BENCHMARK(BM_MixedDet);

// Module Groebner basis of a small random submodule of A^3.
void BM_ModuleGroebner(benchmark::State& state) {
    Rng rng(7, "bench.groebner");
    std::vector<ModVec> gens;
    for (int i = 0; i < 3; ++i) {
        ModVec v(3);
        for (int j = 0; j < 3; ++j) v.e[j] = random_poly(rng, 2, 3);
        gens.push_back(v);
    }
    for (auto _ : state) {
        ModuleGB gb(gens);
        benchmark::DoNotOptimize(gb.basis().size());
    }
}
BENCHMARK(BM_ModuleGroebner)->Unit(benchmark::kMillisecond);

// Full syzygy kernel of the ten quadrics (the acceptance workload).
void BM_SyzygyKernel(benchmark::State& state) {
    const std::vector<Poly16> q = ten_quadrics();
    for (auto _ : state) {
        const SyzygyBasis k = syzygy_kernel(q);
        benchmark::DoNotOptimize(k.gens.size());
    }
}
BENCHMARK(BM_SyzygyKernel)->Unit(benchmark::kSecond)->Iterations(1);

// One manufactured Newton solve on a single active coordinate.
void BM_NewtonSolve(benchmark::State& state) {
    const TorusHermField g0(HermMatrix2<double>::identity());
    SolverConfig cfg;
    cfg.active_coords = {0};
    cfg.max_freq = static_cast<int>(state.range(0));
    Freq k{};
    k[0] = 1;
    const Manufactured man = manufacture(TrigPoly::cosine(k, 0.01), g0, cfg);
    for (auto _ : state) {
        const SolveReport rep = newton_solve(man.f_projected, g0, cfg);
        benchmark::DoNotOptimize(rep.final_residual);
    }
}
BENCHMARK(BM_NewtonSolve)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
