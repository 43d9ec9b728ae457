#include <benchmark/benchmark.h>

#include "s7lab/clifford.hpp"
#include "s7lab/heat_invariants.hpp"
#include "s7lab/sampling.hpp"
#include "s7lab/spectral.hpp"
#include "s7lab/sr_structure.hpp"
#include "s7lab/tangent_group.hpp"

using namespace s7lab;

static void BM_Anticommutation(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_anticommutation(canonical_system()));
}
BENCHMARK(BM_Anticommutation);

static void BM_StructureConstants(benchmark::State& state) {
    Rng rng(1);
    const SpherePoint z(random_unit<8>(rng));
    for (auto _ : state) benchmark::DoNotOptimize(structure_constants(z));
}
BENCHMARK(BM_StructureConstants);

static void BM_CanonicalCoordsRoundTrip(benchmark::State& state) {
    Rng rng(2);
    const SpherePoint z(random_unit<8>(rng));
    const Vec7 u = random_unit<7>(rng) * 2.0;
    for (auto _ : state) benchmark::DoNotOptimize(canonical_coords(z, canonical_coords_inverse(z, u)));
}
BENCHMARK(BM_CanonicalCoordsRoundTrip);

static void BM_FirstHeatInvariant(benchmark::State& state) {
    Rng rng(3);
    const SpherePoint z(random_unit<8>(rng));
    for (auto _ : state) benchmark::DoNotOptimize(c0_T(z));
}
BENCHMARK(BM_FirstHeatInvariant)->Unit(benchmark::kMicrosecond);

static void BM_HeatKernelOffDiagonal(benchmark::State& state) {
    const TangentGroupSpec spec = make_tangent_group(SpherePoint::north_pole());
    QuadratureConfig quad;
    quad.spherical_order = static_cast<int>(state.range(0));
    const HeatKernelQuery q{spec, 1.0, {}, {Vec4(0.5, 0.2, 0, 0), Vec3(0.3, 0, 0)}};
    for (auto _ : state) benchmark::DoNotOptimize(bgg_heat_kernel(q, quad));
}
BENCHMARK(BM_HeatKernelOffDiagonal)->Arg(8)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_HarmonicBasis(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(harmonic_basis(k));
}
BENCHMARK(BM_HarmonicBasis)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Spectrum(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const OperatorKind kind = state.range(1) == 0 ? OperatorKind::TrivializableSumSquares
                                                  : OperatorKind::QuaternionicSublaplacian;
    for (auto _ : state) benchmark::DoNotOptimize(spectrum({kind}, k));
}
BENCHMARK(BM_Spectrum)->ArgsProduct({{2, 3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
