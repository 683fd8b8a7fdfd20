#include <benchmark/benchmark.h>

#include <random>

#include "cdim/homology.hpp"
#include "cdim/mv.hpp"

namespace {

using namespace cdim;

void BM_Rp2BoundaryRank(benchmark::State& state) {
    SimplicialComplex rp2 = rp2_six_vertex();
    IntMatrix d2 = boundary_matrix(rp2, 2);
    const FieldSpec field(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(matrix_rank(d2, field));
    }
}
BENCHMARK(BM_Rp2BoundaryRank)->Arg(0)->Arg(2);

void BM_SphereBetti(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SimplicialComplex sphere = sphere_boundary(n);
    std::vector<int> degrees;
    for (int s = -1; s <= n - 2; ++s) degrees.push_back(s);
    const FieldSpec gf2(2);
    for (auto _ : state) {
        BettiProfile profile = reduced_betti(sphere, gf2, degrees);
        benchmark::DoNotOptimize(profile.reduced.size());
    }
}
BENCHMARK(BM_SphereBetti)->Arg(5)->Arg(7)->Arg(9);

void BM_PhiCokernel(benchmark::State& state) {
    SimplicialComplex rp2 = rp2_six_vertex();
    PhiMap phi = phi_map(rp2, 2);
    const FieldSpec field(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(phi_cokernel_dim(phi, field));
    }
}
BENCHMARK(BM_PhiCokernel)->Arg(0)->Arg(2);

void BM_RandomComplexRank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    SimplicialComplex complex(n, 3);
    for (int dim = 0; dim <= 3; ++dim) {
        for (Simplex& tuple : enumerate_subsets(n, dim + 1)) {
            bool ok = true;
            for (std::size_t omit = 0; omit < tuple.size() && ok && dim > 0; ++omit) {
                Simplex face;
                for (std::size_t i = 0; i < tuple.size(); ++i)
                    if (i != omit) face.push_back(tuple[i]);
                ok = complex.contains(face);
            }
            if (ok && coin(rng) < 0.7) complex.insert(std::move(tuple));
        }
    }
    IntMatrix d3 = boundary_matrix(complex, 3);
    const FieldSpec rationals(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(matrix_rank(d3, rationals));
    }
}
BENCHMARK(BM_RandomComplexRank)->Arg(8)->Arg(10)->Arg(12);

} // namespace

BENCHMARK_MAIN();
