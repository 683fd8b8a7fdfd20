#include <benchmark/benchmark.h>

#include "cdim/analysis.hpp"

namespace {

using namespace cdim;

RingPtr ring6(std::uint64_t characteristic) {
    std::vector<std::string> names;
    for (int i = 1; i <= 6; ++i) names.push_back("X" + std::to_string(i));
    return make_ring(FieldSpec(characteristic), names);
}

void BM_BuchbergerRealizationSum(benchmark::State& state) {
    const std::uint64_t characteristic = static_cast<std::uint64_t>(state.range(0));
    RingPtr ring = ring6(characteristic);
    FieldElement a = FieldElement::from_integer(FieldSpec(characteristic), 2);
    std::vector<Ideal> primes = example_hl(a, ring);
    std::vector<Polynomial> gens;
    for (int j : {0, 1, 3}) // I1 + I2 + I4
        for (const Polynomial& g : primes[static_cast<std::size_t>(j)].generators())
            gens.push_back(g);
    for (auto _ : state) {
        GroebnerBasis gb = buchberger(ring, gens, MonomialOrder::grevlex());
        benchmark::DoNotOptimize(gb.elements().size());
    }
}
BENCHMARK(BM_BuchbergerRealizationSum)->Arg(7)->Arg(0);

void BM_IdealIntersection(benchmark::State& state) {
    RingPtr ring = ring6(7);
    FieldElement a = FieldElement::from_integer(FieldSpec(7), 2);
    std::vector<Ideal> primes = example_hl(a, ring);
    for (auto _ : state) {
        Ideal meet = ideal_intersection(primes[0], primes[3]);
        benchmark::DoNotOptimize(meet.generators().size());
    }
}
BENCHMARK(BM_IdealIntersection);

void BM_BuildDeltaRealization(benchmark::State& state) {
    RingPtr ring = ring6(7);
    FieldElement a = FieldElement::from_integer(FieldSpec(7), 2);
    std::vector<Ideal> primes = example_hl(a, ring);
    for (auto _ : state) {
        SimplicialComplex delta = build_delta(primes, std::nullopt, 3);
        benchmark::DoNotOptimize(delta.total_count());
    }
}
BENCHMARK(BM_BuildDeltaRealization);

void BM_FullAnalysisRealization(benchmark::State& state) {
    RingPtr ring = ring6(7);
    FieldElement a = FieldElement::from_integer(FieldSpec(7), 2);
    std::vector<Ideal> primes = example_hl(a, ring);
    const std::vector<FieldSpec> chars{FieldSpec(0), FieldSpec(2), FieldSpec(7)};
    for (auto _ : state) {
        AnalysisReport report = analyze(primes, std::nullopt, chars);
        benchmark::DoNotOptimize(report.verdicts.size());
    }
}
BENCHMARK(BM_FullAnalysisRealization);

} // namespace
