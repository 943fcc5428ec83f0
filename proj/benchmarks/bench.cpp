#include "vkm/dimacs.hpp"
#include "vkm/encode.hpp"
#include "vkm/finger_moves.hpp"
#include "vkm/gf2.hpp"
#include "vkm/kuhnel.hpp"
#include "vkm/representative.hpp"
#include "vkm/sat_solver.hpp"
#include "vkm/solve.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace vkm;

static void CrossingCochain(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SimplicialComplex K = simplex_skeleton(n, 1);
    Placement P = default_placement(K.n_vertices(), 1);
    for (auto _ : state) {
        SkewCochain theta = vk_representative(K, 1, P);
        benchmark::DoNotOptimize(theta);
    }
}
BENCHMARK(CrossingCochain)->DenseRange(4, 7);

static void CrossingCochainMiddleDim(benchmark::State& state) {
    SimplicialComplex K = simplex_skeleton(6, 2);
    Placement P = default_placement(K.n_vertices(), 2);
    for (auto _ : state) {
        SkewCochain theta = vk_representative(K, 2, P);
        benchmark::DoNotOptimize(theta);
    }
}
BENCHMARK(CrossingCochainMiddleDim);

static void SpanMembership(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Ring ring = state.range(1) ? Ring::Z : Ring::Z2;
    SimplicialComplex K = simplex_skeleton(n, 1);
    Representative rep = compute_representative(K, 1, 0);
    SkewCochain xi = ring == Ring::Z ? rep.theta : reduce_ring(rep.theta);
    SpanTester tester(K, 1, ring);
    for (auto _ : state) {
        auto w = tester.test(xi);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(SpanMembership)->Args({5, 0})->Args({6, 0})->Args({5, 1})->Args({6, 1});

static void DeformationSolveEnumerated(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SimplicialComplex K = simplex_skeleton(n, 1);
    Representative rep = compute_representative(K, 1, 0);
    QuadraticSystem sys =
        build_system(K, 1, identity_form(1, Ring::Z2, 1), reduce_ring(rep.theta));
    for (auto _ : state) {
        SolveReport r = solve_z2(sys, {}, SolveStrategy::Enumerate);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(DeformationSolveEnumerated)->DenseRange(4, 6);

static void DeformationSolveSat(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SimplicialComplex K = simplex_skeleton(n, 1);
    Representative rep = compute_representative(K, 1, 0);
    QuadraticSystem sys =
        build_system(K, 1, identity_form(1, Ring::Z2, 1), reduce_ring(rep.theta));
    for (auto _ : state) {
        SolveReport r = solve_z2(sys, {}, SolveStrategy::Sat);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(DeformationSolveSat)->DenseRange(4, 6);

static void AdmissibilityProbe(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    IntersectionForm form = identity_form(1, Ring::Z2, 1);
    for (auto _ : state) {
        KuhnelEncoding enc = encode_conditions(1, n, form, true);
        SatResult r = SatSolver(enc.inst).solve();
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(AdmissibilityProbe)->DenseRange(4, 6);

static void Gf2Elimination(benchmark::State& state) {
    const size_t rows = static_cast<size_t>(state.range(0));
    const size_t cols = 2 * rows;
    std::mt19937_64 rng(42);
    Gf2Matrix A(rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c)
            A.set(r, c, rng() & 1);
    for (auto _ : state) {
        Gf2Eliminator elim(A);
        benchmark::DoNotOptimize(elim.rank());
    }
}
BENCHMARK(Gf2Elimination)->RangeMultiplier(2)->Range(64, 512);

static void DimacsEmit(benchmark::State& state) {
    SimplicialComplex K = simplex_skeleton(5, 1);
    Representative rep = compute_representative(K, 1, 0);
    SystemEncoding enc = encode_system(
        build_system(K, 1, identity_form(1, Ring::Z2, 1), reduce_ring(rep.theta)), true);
    for (auto _ : state) {
        std::string text = emit_dimacs_xor(enc.inst, enc.notes);
        benchmark::DoNotOptimize(text);
    }
}
BENCHMARK(DimacsEmit);

int main(int argc, char** argv) {
    ::benchmark::Initialize(&argc, argv);
    if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    ::benchmark::RunSpecifiedBenchmarks();
    ::benchmark::Shutdown();
    return 0;
}
