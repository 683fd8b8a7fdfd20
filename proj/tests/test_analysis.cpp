#include <doctest.h>

#include <random>

#include "cdim/report.hpp"
#include "test_helpers.hpp"

using namespace cdim;
using cdim::test::test_ring;

namespace {

Ideal coordinate_ideal(const RingPtr& ring, std::initializer_list<int> vars) {
    std::vector<Polynomial> gens;
    for (int v : vars) gens.push_back(Polynomial::variable(ring, v - 1));
    return Ideal(ring, std::move(gens));
}

std::vector<Ideal> realization_gf7() {
    RingPtr ring = test_ring(FieldSpec(7), 6);
    return example_hl(FieldElement::from_integer(FieldSpec(7), 2), ring);
}

std::vector<Ideal> random_height_c_arrangement(std::mt19937_64& rng, const RingPtr& ring,
                                               int n_primes, int height) {
    std::vector<Ideal> primes;
    for (int j = 0; j < n_primes; ++j) {
        std::vector<Polynomial> gens;
        for (int g = 0; g < height; ++g) {
            Polynomial f = test::random_homogeneous(rng, ring, 1, ring->n_vars());
            while (f.is_zero()) f = test::random_homogeneous(rng, ring, 1, ring->n_vars());
            gens.push_back(std::move(f));
        }
        primes.emplace_back(ring, std::move(gens));
    }
    return primes;
}

} // namespace

TEST_SUITE("analysis") {

TEST_CASE("validation of the realization") {
    std::vector<Ideal> ideals = realization_gf7();
    ValidationResult validation = validate_hypotheses(ideals, std::nullopt);
    CHECK(validation.c == 2);
    CHECK(validation.d == 6);
    CHECK(validation.t == 2);
    CHECK(validation.v == 3);
    CHECK(validation.all_linear);
    CHECK(validation.caveats.empty());
}

TEST_CASE("validation rejects m itself, containments, and tiny d") {
    RingPtr r6 = test_ring(FieldSpec(0), 6);
    std::vector<Ideal> with_m{coordinate_ideal(r6, {1, 2}),
                              coordinate_ideal(r6, {1, 2, 3, 4, 5, 6})};
    CHECK_THROWS_WITH_AS(validate_hypotheses(with_m, std::nullopt),
                         doctest::Contains("height = d"), HypothesisError);

    std::vector<Ideal> nested{coordinate_ideal(r6, {1}), coordinate_ideal(r6, {1, 2})};
    CHECK_THROWS_AS(validate_hypotheses(nested, std::nullopt), HypothesisError);

    RingPtr r1 = test_ring(FieldSpec(0), 1);
    CHECK_THROWS_AS(
        validate_hypotheses({Ideal(r1, {Polynomial::variable(r1, 0)})}, std::nullopt),
        HypothesisError);
}

TEST_CASE("nonlinear inputs carry caveat flags") {
    RingPtr r4 = test_ring(FieldSpec(0), 4);
    Polynomial x1 = Polynomial::variable(r4, 0);
    Polynomial x2 = Polynomial::variable(r4, 1);
    Polynomial x3 = Polynomial::variable(r4, 2);
    Polynomial x4 = Polynomial::variable(r4, 3);
    // (X1, X2) and the quadric cone (X3^2 - X1*X4), incomparable ideals.
    std::vector<Ideal> mixed{Ideal(r4, {x1, x2}), Ideal(r4, {x3 * x3 - x1 * x4})};
    ValidationResult validation = validate_hypotheses(mixed, std::nullopt);
    CHECK_FALSE(validation.all_linear);
    REQUIRE(validation.caveats.size() == 2);
    CHECK(validation.caveats[0].find("ideal(s) 2") != std::string::npos);
}

TEST_CASE("the realization parameters are constrained") {
    RingPtr gf7 = test_ring(FieldSpec(7), 6);
    auto a = [&](long long v) { return FieldElement::from_integer(FieldSpec(7), v); };
    CHECK_THROWS_AS(example_hl(a(0), gf7), HypothesisError);
    CHECK_THROWS_AS(example_hl(a(1), gf7), HypothesisError);
    CHECK_THROWS_AS(example_hl(a(6), gf7), HypothesisError); // -1 in GF(7)
    CHECK_NOTHROW(example_hl(a(2), gf7));

    // a = 2 makes a^2+a-1 vanish exactly in characteristic 5.
    RingPtr gf5 = test_ring(FieldSpec(5), 6);
    CHECK_THROWS_AS(example_hl(FieldElement::from_integer(FieldSpec(5), 2), gf5),
                    HypothesisError);
}

TEST_CASE("realization generators at a = 2") {
    std::vector<Ideal> ideals = realization_gf7();
    RingPtr ring = ideals.front().ring();
    auto X = [&](int i) { return Polynomial::variable(ring, i - 1); };
    auto c = [&](long long v) { return FieldElement::from_integer(FieldSpec(7), v); };
    // I4 = (X1+X3+X6, 3 X1 + X4 + 4 X6): 1/(a^2+a-1) = 3 and 1/a = 4 in GF(7).
    REQUIRE(ideals[3].generators().size() == 2);
    CHECK(ideals[3].generators()[0] == X(1) + X(3) + X(6));
    CHECK(ideals[3].generators()[1] == X(1).scale(c(3)) + X(4) + X(6).scale(c(4)));

    RingPtr rq = test_ring(FieldSpec(0), 6);
    std::vector<Ideal> rational = example_hl(FieldElement::from_integer(FieldSpec(0), 2), rq);
    auto q = [&](long n, long d) {
        return FieldElement::from_rational(mpz_class(n), mpz_class(d));
    };
    auto Y = [&](int i) { return Polynomial::variable(rq, i - 1); };
    CHECK(rational[3].generators()[1] == Y(1).scale(q(1, 5)) + Y(4) + Y(6).scale(q(1, 2)));
}

TEST_CASE("analyze the realization across characteristics") {
    std::vector<Ideal> ideals = realization_gf7();
    AnalysisReport report = analyze(
        ideals, std::nullopt, {FieldSpec(0), FieldSpec(2), FieldSpec(7)});
    CHECK(report.t == 2);
    CHECK(report.v == 3);
    CHECK(report.n_primes == 6);
    CHECK(report.delta_counts == std::vector<std::size_t>{6, 15, 10, 0});
    REQUIRE(report.verdicts.size() == 3);

    const CharacteristicVerdict& char0 = report.verdicts[0];
    CHECK(char0.characteristic == 0);
    CHECK(char0.w == 0);
    CHECK(char0.cd_statement == "cd <= 3");

    const CharacteristicVerdict& char2 = report.verdicts[1];
    CHECK(char2.characteristic == 2);
    CHECK(char2.w == 1);
    CHECK(char2.phi_coker == 1);
    CHECK(char2.conclusion == "H^4_I ≅ (H^6_m)^1");
    CHECK(char2.cd_statement == "cd = 4");
    CHECK(char2.cd_attained);

    const CharacteristicVerdict& char7 = report.verdicts[2];
    CHECK(char7.w == 0);
    CHECK_FALSE(char7.cd_attained);

    CHECK(report.bounds.faltings == 4);
    CHECK(report.bounds.hl == 3);
}

TEST_CASE("analyze the two-planes classic") {
    RingPtr r4 = test_ring(FieldSpec(0), 4);
    std::vector<Ideal> planes{coordinate_ideal(r4, {1, 2}), coordinate_ideal(r4, {3, 4})};
    AnalysisReport report =
        analyze(planes, std::nullopt, {FieldSpec(0), FieldSpec(2), FieldSpec(5)});
    CHECK(report.t == 1);
    CHECK(report.v == 2);
    for (const CharacteristicVerdict& verdict : report.verdicts) {
        CHECK(verdict.w == 1);
        CHECK(verdict.conclusion == "H^3_I ≅ (H^4_m)^1");
        CHECK(verdict.cd_statement == "cd = 3");
    }
}

TEST_CASE("multi-base analysis") {
    RingPtr r6 = test_ring(FieldSpec(0), 6);
    std::vector<Ideal> planes{coordinate_ideal(r6, {1, 2}), coordinate_ideal(r6, {3, 4})};
    Ideal base = coordinate_ideal(r6, {5, 6});

    MultiPrimeVerdict verdict =
        analyze_multi_base(planes, {base}, {FieldSpec(0), FieldSpec(2)});
    REQUIRE(verdict.per_base.size() == 1);
    const AnalysisReport& report = verdict.per_base.front();
    CHECK(report.d == 4);
    CHECK(report.t == 1);
    CHECK(report.delta_counts == std::vector<std::size_t>{2, 0, 0});
    // Brute-force m-primarity of I1 + I2 + P: six independent linear forms.
    CHECK(test::linear_sum_m_primary({planes[0], planes[1], base}));
    CHECK_FALSE(test::linear_sum_m_primary({planes[0], base}));
    for (const CharacteristicVerdict& cv : report.verdicts) CHECK(cv.w == 1);
    CHECK_FALSE(verdict.overall_cd_le_v.at(0));

    // A second base of the same dimension whose Delta keeps the edge: the
    // conjunction flips per characteristic only if every base vanishes.
    Ideal far_base = coordinate_ideal(r6, {1, 2}); // contains prime 1: sum never m-primary
    MultiPrimeVerdict mixed =
        analyze_multi_base(planes, {base, far_base}, {FieldSpec(0)});
    CHECK(mixed.per_base.size() == 2);
    CHECK_FALSE(mixed.overall_cd_le_v.at(0));

    Ideal wrong_dim = coordinate_ideal(r6, {5});
    CHECK_THROWS_AS(analyze_multi_base(planes, {base, wrong_dim}, {FieldSpec(0)}),
                    UsageError);
}

TEST_CASE("single base reduces to the plain analysis") {
    RingPtr r6 = test_ring(FieldSpec(0), 6);
    std::vector<Ideal> planes{coordinate_ideal(r6, {1, 2}), coordinate_ideal(r6, {3, 4})};
    AnalysisReport plain = analyze(planes, std::nullopt, {FieldSpec(0)});
    MultiPrimeVerdict zero_base = analyze_multi_base(planes, {Ideal(r6, {})}, {FieldSpec(0)});
    CHECK(zero_base.per_base.front().d == 6);
    CHECK(zero_base.per_base.front().verdicts[0].w == plain.verdicts[0].w);
    CHECK(zero_base.v == plain.v);
}

TEST_CASE("corollary property: c dividing d-1 forces w = 0") {
    std::mt19937_64 rng(4141);
    RingPtr ring = test_ring(FieldSpec(7), 7);
    int checked = 0;
    for (int iter = 0; iter < 30 && checked < 12; ++iter) {
        std::vector<Ideal> primes = random_height_c_arrangement(rng, ring, 4, 3);
        ValidationResult validation;
        try {
            validation = validate_hypotheses(primes, std::nullopt);
        } catch (const HypothesisError&) {
            continue;
        }
        if (validation.c != 3) continue; // want c | (d-1) with d = 7
        ++checked;
        AnalysisReport report =
            analyze(primes, std::nullopt, {FieldSpec(0), FieldSpec(2), FieldSpec(7)});
        SimplicialComplex delta = build_delta(primes, std::nullopt, validation.t + 1);
        CHECK(delta.has_full_skeleton(validation.t));
        for (const CharacteristicVerdict& verdict : report.verdicts) CHECK(verdict.w == 0);
    }
    CHECK(checked > 0);
}

TEST_CASE("search: zero trials, injected regression, determinism") {
    SearchParams params;
    params.trials = 0;
    params.characteristics = {FieldSpec(0), FieldSpec(2)};
    SearchResult empty = search_char_dependence(params);
    CHECK(empty.findings.empty());
    CHECK(empty.completed == 0);

    // The realization is the known characteristic-dependent configuration.
    auto finding = evaluate_arrangement(realization_gf7(),
                                        {FieldSpec(0), FieldSpec(2), FieldSpec(7)});
    REQUIRE(finding.has_value());
    CHECK(finding->w.at(0) == 0);
    CHECK(finding->w.at(2) == 1);
    CHECK(finding->w.at(7) == 0);

    // Uniform configurations produce no finding.
    RingPtr r4 = test_ring(FieldSpec(0), 4);
    auto none = evaluate_arrangement(
        {coordinate_ideal(r4, {1, 2}), coordinate_ideal(r4, {3, 4})},
        {FieldSpec(0), FieldSpec(2)});
    CHECK_FALSE(none.has_value());

    params.trials = 6;
    params.seed = 12345;
    params.n_vars = 5;
    params.height = 2;
    params.n_primes = 3;
    params.base_field = FieldSpec(7);
    SearchResult a = search_char_dependence(params);
    SearchResult b = search_char_dependence(params);
    CHECK(a.completed == b.completed);
    CHECK(a.skipped == b.skipped);
    CHECK(emit_search_report(a, params, ReportFormat::machine) ==
          emit_search_report(b, params, ReportFormat::machine));
}

TEST_CASE("search below the d/c threshold never finds anything") {
    SearchParams params;
    params.n_vars = 7;
    params.height = 2;
    params.n_primes = 3; // 3 < 7/2
    params.trials = 25;
    params.seed = 99;
    params.base_field = FieldSpec(7);
    params.characteristics = {FieldSpec(0), FieldSpec(2), FieldSpec(3)};
    SearchResult result = search_char_dependence(params);
    CHECK(result.findings.empty());
    CHECK(result.completed + result.skipped == params.trials);
}

TEST_CASE("reports are byte-stable") {
    std::vector<Ideal> ideals = realization_gf7();
    std::vector<FieldSpec> chars{FieldSpec(0), FieldSpec(2), FieldSpec(7)};
    AnalysisReport r1 = analyze(ideals, std::nullopt, chars);
    AnalysisReport r2 = analyze(ideals, std::nullopt, chars);
    CHECK(emit_report(r1, ReportFormat::machine, "fnv1a64:0") ==
          emit_report(r2, ReportFormat::machine, "fnv1a64:0"));
    CHECK(emit_report(r1, ReportFormat::text, "fnv1a64:0") ==
          emit_report(r2, ReportFormat::text, "fnv1a64:0"));
}

} // TEST_SUITE
