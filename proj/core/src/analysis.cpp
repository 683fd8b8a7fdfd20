#include "cdim/analysis.hpp"

#include <algorithm>

#include "parallel.hpp"

namespace cdim {

namespace {

std::string join_indices(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    return out;
}

std::string render_ideal(const Ideal& ideal) {
    std::string out = "(";
    for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
        if (i) out += ", ";
        out += ideal.generators()[i].to_string();
    }
    return out + ")";
}

} // namespace

ValidationResult validate_hypotheses(const std::vector<Ideal>& primes,
                                     const std::optional<Ideal>& base) {
    if (primes.empty()) throw UsageError("no prime ideals given");
    const RingPtr& ring = primes.front().ring();
    for (const Ideal& ideal : primes)
        if (!same_ring(ideal.ring(), ring)) throw UsageError("primes from different rings");

    ValidationResult result;
    HeightProfile profile = height_profile(primes);
    result.dimensions = profile.dimensions;
    result.heights = profile.heights;
    result.c = profile.c;

    result.d = ring->n_vars();
    if (base) {
        if (!same_ring(base->ring(), ring)) throw UsageError("base prime from a different ring");
        std::optional<int> base_dim = krull_dimension(*base);
        if (!base_dim)
            throw HypothesisError(HypothesisKind::UnitIdeal, "the base ideal is the unit ideal");
        result.d = *base_dim;
    }

    if (result.d < 2)
        throw HypothesisError(HypothesisKind::ParameterConstraint,
                              "the theorems need d >= 2, got d = " + std::to_string(result.d));
    if (result.c >= result.d) {
        std::vector<int> offenders;
        for (std::size_t i = 0; i < result.heights.size(); ++i)
            if (result.heights[i] >= result.d) offenders.push_back(static_cast<int>(i) + 1);
        throw HypothesisError(HypothesisKind::HeightEqualsDimension,
                              "height = d for ideal(s) " + join_indices(offenders) +
                                  ": every height must be < d = " + std::to_string(result.d));
    }

    auto violations = check_irredundant(primes);
    if (!violations.empty()) {
        std::string detail;
        for (const auto& [i, j] : violations) {
            if (!detail.empty()) detail += ", ";
            detail += std::to_string(i) + " is contained in " + std::to_string(j);
        }
        throw HypothesisError(HypothesisKind::RedundantPrime,
                              "the listed primes are not irredundant: " + detail);
    }

    std::vector<int> nonlinear;
    for (std::size_t i = 0; i < primes.size(); ++i)
        if (!primes[i].is_linear()) nonlinear.push_back(static_cast<int>(i) + 1);
    result.all_linear = nonlinear.empty();
    if (!nonlinear.empty()) {
        result.caveats.push_back("primality user-asserted for nonlinear ideal(s) " +
                                 join_indices(nonlinear));
        result.caveats.push_back(
            "geometric irreducibility assumed, not verified, for nonlinear input");
    }
    if (base && !base->is_linear()) {
        result.caveats.push_back("base prime is nonlinear: primality and geometric "
                                 "irreducibility user-asserted");
        result.all_linear = false;
    }

    result.t = (result.d - 2) / result.c;
    result.v = result.d - 1 - result.t;
    return result;
}

AnalysisReport analyze(const std::vector<Ideal>& primes, const std::optional<Ideal>& base,
                       const std::vector<FieldSpec>& characteristics,
                       std::optional<int> dim_cap_request) {
    if (characteristics.empty()) throw UsageError("no coefficient characteristics requested");
    ValidationResult validation = validate_hypotheses(primes, base);

    AnalysisReport report;
    report.ring = primes.front().ring();
    report.n_vars = report.ring->n_vars();
    report.d = validation.d;
    report.c = validation.c;
    report.n_primes = static_cast<int>(primes.size());
    report.t = validation.t;
    report.v = validation.v;
    report.heights = validation.heights;
    report.caveats = validation.caveats;
    if (base) report.base_label = render_ideal(*base);

    report.dim_cap = std::max(validation.t + 1, dim_cap_request.value_or(0));
    SimplicialComplex delta = build_delta(primes, base, report.dim_cap);

    // Validated hypotheses force the full (t-1)-skeleton: a sum of t primes
    // of height <= c has height <= tc <= d-2 < d and cannot be m-primary.
    if (!delta.has_full_skeleton(validation.t - 1))
        throw InternalError("Delta is missing part of its (t-1)-skeleton");

    for (int dim = 0; dim <= report.dim_cap; ++dim) report.delta_counts.push_back(delta.count(dim));
    auto layers = non_simplex_layers(delta, {validation.t, validation.t + 1});
    report.lambda_t = layers[0].tuples;
    report.lambda_t1 = layers[1].tuples;

    std::vector<FieldSpec> chars;
    for (const FieldSpec& f : characteristics) chars.push_back(f);
    std::sort(chars.begin(), chars.end(),
              [](const FieldSpec& a, const FieldSpec& b) {
                  return a.characteristic() < b.characteristic();
              });
    chars.erase(std::unique(chars.begin(), chars.end()), chars.end());

    const PhiMap phi = phi_map(delta, validation.t);
    report.verdicts.resize(chars.size());
    internal::parallel_for(chars.size(), [&](std::size_t i) {
        const FieldSpec& field = chars[i];
        BettiProfile profile =
            betti_profile(delta, field, {validation.t - 1}, {validation.t});
        CharacteristicVerdict verdict;
        verdict.characteristic = field.characteristic();
        verdict.w = profile.reduced.at(validation.t - 1);
        verdict.phi_coker = phi_cokernel_dim(phi, field);
        verdict.relative = profile.relative.at(validation.t);
        report.verdicts[i] = std::move(verdict);
    });

    for (CharacteristicVerdict& verdict : report.verdicts) {
        if (verdict.w != verdict.phi_coker || verdict.w != verdict.relative)
            throw InternalError(
                "oracle disagreement at characteristic " + std::to_string(verdict.characteristic) +
                ": homology " + std::to_string(verdict.w) + ", MV cokernel " +
                std::to_string(verdict.phi_coker) + ", pair " + std::to_string(verdict.relative));
        const std::string hv = "H^" + std::to_string(report.v + 1) + "_I";
        const std::string hm = "H^" + std::to_string(report.d) + "_m";
        if (verdict.w == 0) {
            verdict.conclusion = hv + " = 0";
            verdict.cd_statement = "cd <= " + std::to_string(report.v);
            verdict.cd_attained = false;
        } else {
            if ((report.d - 1) % report.c == 0)
                throw InternalError("w > 0 although c divides d-1, which forces w = 0");
            verdict.conclusion = hv + " ≅ (" + hm + ")^" + std::to_string(verdict.w);
            verdict.cd_statement = "cd = " + std::to_string(report.v + 1);
            verdict.cd_attained = true;
        }
    }

    // Consistency with the small-number-of-primes corollary: fewer than d/c
    // primes force the full simplex and hence w = 0.
    if (report.n_primes * report.c < report.d)
        for (const CharacteristicVerdict& verdict : report.verdicts)
            if (verdict.w != 0)
                throw InternalError("w != 0 although n < d/c forces the full simplex");

    report.bounds.faltings = bound_faltings(report.d, report.c);
    report.bounds.hl = bound_hl(report.d, report.c);
    for (int p = 0; p <= 3; ++p) {
        report.bounds.sum_table.emplace_back(p, bound_sum(report.d, report.c, p));
        if (report.d > (p + 1) * report.c)
            report.bounds.main_table.emplace_back(p, bound_main(report.d, report.c, p));
    }
    return report;
}

MultiPrimeVerdict analyze_multi_base(const std::vector<Ideal>& primes,
                                     const std::vector<Ideal>& bases,
                                     const std::vector<FieldSpec>& characteristics,
                                     std::optional<int> dim_cap_request) {
    if (bases.empty()) throw UsageError("no base primes given");
    std::vector<int> dims;
    for (const Ideal& base : bases) {
        std::optional<int> dim = krull_dimension(base);
        if (!dim)
            throw HypothesisError(HypothesisKind::UnitIdeal, "a base ideal is the unit ideal");
        dims.push_back(*dim);
    }
    for (int dim : dims)
        if (dim != dims.front())
            throw UsageError("base primes must share one dimension d; got " +
                             std::to_string(dims.front()) + " and " + std::to_string(dim));

    MultiPrimeVerdict verdict;
    for (const Ideal& base : bases)
        verdict.per_base.push_back(analyze(primes, base, characteristics, dim_cap_request));
    verdict.v = verdict.per_base.front().v;
    for (const CharacteristicVerdict& cv : verdict.per_base.front().verdicts)
        verdict.overall_cd_le_v[cv.characteristic] = true;
    for (const AnalysisReport& report : verdict.per_base)
        for (const CharacteristicVerdict& cv : report.verdicts)
            if (cv.w != 0) verdict.overall_cd_le_v[cv.characteristic] = false;
    return verdict;
}

std::vector<Ideal> example_hl(const FieldElement& a, const RingPtr& ring) {
    if (ring->n_vars() != 6) throw UsageError("the realization lives in six variables");
    if (a.field() != ring->field()) throw UsageError("parameter a from a different field");
    const FieldSpec& field = ring->field();
    const FieldElement one = FieldElement::one(field);
    const FieldElement minus_one = field_neg(one);
    if (a.is_zero())
        throw HypothesisError(HypothesisKind::ParameterConstraint, "a must differ from 0");
    if (a == one)
        throw HypothesisError(HypothesisKind::ParameterConstraint, "a must differ from 1");
    if (a == minus_one)
        throw HypothesisError(HypothesisKind::ParameterConstraint, "a must differ from -1");
    const FieldElement disc = a * a + a - one;
    if (disc.is_zero())
        throw HypothesisError(HypothesisKind::ParameterConstraint, "a^2 + a - 1 must be nonzero");

    auto X = [&](int i) { return Polynomial::variable(ring, i - 1); };
    auto times = [&](const FieldElement& c, const Polynomial& f) { return f.scale(c); };
    const FieldElement inv_disc = field_inverse(disc);
    const FieldElement inv_a = field_inverse(a);

    std::vector<Ideal> ideals;
    ideals.emplace_back(ring, std::vector<Polynomial>{X(1), X(2)});
    ideals.emplace_back(ring, std::vector<Polynomial>{X(3), X(4)});
    ideals.emplace_back(ring, std::vector<Polynomial>{X(5), X(6)});
    ideals.emplace_back(ring, std::vector<Polynomial>{
                                  X(1) + X(3) + X(6),
                                  times(inv_disc, X(1)) + X(4) + times(inv_a, X(6))});
    ideals.emplace_back(ring, std::vector<Polynomial>{X(1) + X(3) + X(5),
                                                      X(2) + times(a, X(3)) + X(5)});
    ideals.emplace_back(ring, std::vector<Polynomial>{
                                  X(2) + X(4) + X(5),
                                  times(inv_a, X(2)) + times(a, X(4)) + X(6)});
    return ideals;
}

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::optional<SearchFinding> evaluate_arrangement(const std::vector<Ideal>& primes,
                                                  const std::vector<FieldSpec>& characteristics) {
    AnalysisReport report = analyze(primes, std::nullopt, characteristics);
    SearchFinding finding;
    for (const CharacteristicVerdict& verdict : report.verdicts)
        finding.w[verdict.characteristic] = verdict.w;
    bool uniform = true;
    for (const auto& [chr, w] : finding.w)
        if (w != finding.w.begin()->second) uniform = false;
    if (uniform) return std::nullopt;
    for (const Ideal& ideal : primes) finding.ideals.push_back(render_ideal(ideal));
    return finding;
}

namespace {

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() { return state = mix_seed(state); }
};

} // namespace

SearchResult search_char_dependence(const SearchParams& params) {
    if (params.n_vars < 2 || params.height < 1 || params.n_primes < 1 || params.trials < 0)
        throw UsageError("search parameters must be positive");
    if (params.characteristics.empty()) throw UsageError("no coefficient characteristics requested");

    std::vector<std::string> names;
    for (int i = 1; i <= params.n_vars; ++i) names.push_back("X" + std::to_string(i));
    RingPtr ring = make_ring(params.base_field, names);
    const FieldSpec& field = params.base_field;

    auto random_form = [&](SplitMix64& rng) {
        std::vector<Term> terms;
        for (int i = 0; i < params.n_vars; ++i) {
            FieldElement c = field.is_rational()
                                 ? FieldElement::from_integer(
                                       field, static_cast<long long>(rng.next() % 19) - 9)
                                 : FieldElement::from_residue(field,
                                                              rng.next() % field.characteristic());
            if (!c.is_zero())
                terms.push_back(Term{Monomial::variable(params.n_vars, i), std::move(c)});
        }
        return Polynomial::from_terms(ring, MonomialOrder::grevlex(), std::move(terms));
    };

    struct Slot {
        std::optional<SearchFinding> finding;
        bool skipped = false;
    };
    std::vector<Slot> slots(static_cast<std::size_t>(params.trials));

    internal::parallel_for(slots.size(), [&](std::size_t trial) {
        const std::uint64_t trial_seed = mix_seed(params.seed ^ (trial + 1));
        SplitMix64 rng{trial_seed};
        std::vector<Ideal> primes;
        for (int j = 0; j < params.n_primes; ++j) {
            std::vector<Polynomial> gens;
            for (int g = 0; g < params.height; ++g) {
                Polynomial f = random_form(rng);
                for (int attempt = 0; f.is_zero() && attempt < 128; ++attempt) f = random_form(rng);
                gens.push_back(std::move(f));
            }
            primes.emplace_back(ring, std::move(gens));
        }
        try {
            Slot slot;
            slot.finding = evaluate_arrangement(primes, params.characteristics);
            if (slot.finding) {
                slot.finding->trial = static_cast<int>(trial);
                slot.finding->seed = trial_seed;
            }
            slots[trial] = std::move(slot);
        } catch (const HypothesisError&) {
            slots[trial].skipped = true;
        }
    });

    SearchResult result;
    for (Slot& slot : slots) {
        if (slot.skipped) {
            ++result.skipped;
            continue;
        }
        ++result.completed;
        if (slot.finding) result.findings.push_back(std::move(*slot.finding));
    }
    return result;
}

} // namespace cdim
