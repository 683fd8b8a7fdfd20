#include "cdim/ideal.hpp"

#include <algorithm>
#include <bit>

namespace cdim {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (Polynomial& g : generators) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ring(), ring_)) throw UsageError("generator from a different ring");
        if (!g.is_homogeneous())
            throw HypothesisError(HypothesisKind::InhomogeneousGenerator,
                                  "inhomogeneous generator: " + g.to_string());
        bool duplicate = false;
        for (const Polynomial& h : generators_)
            if (h == g) {
                duplicate = true;
                break;
            }
        if (!duplicate) generators_.push_back(std::move(g));
    }
}

const GroebnerBasis& Ideal::basis(const MonomialOrder& order) const {
    const std::pair<int, int> key{static_cast<int>(order.kind()), order.block()};
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->bases.find(key);
    if (it == cache_->bases.end()) {
        auto computed = std::make_unique<const GroebnerBasis>(buchberger(ring_, generators_, order));
        it = cache_->bases.emplace(key, std::move(computed)).first;
    }
    return *it->second;
}

bool Ideal::is_linear() const {
    for (const Polynomial& g : generators_)
        if (g.total_degree() != 1) return false;
    return true;
}

Ideal ideal_sum(const std::vector<Ideal>& parts) {
    if (parts.empty()) throw UsageError("ideal_sum of an empty list");
    const RingPtr& ring = parts.front().ring();
    std::vector<Polynomial> gens;
    for (const Ideal& part : parts) {
        if (!same_ring(part.ring(), ring)) throw UsageError("ideal_sum: ring context mismatch");
        for (const Polynomial& g : part.generators()) gens.push_back(g);
    }
    return Ideal(ring, std::move(gens));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw UsageError("ideal_intersection: ring context mismatch");
    const RingPtr& ring = a.ring();
    const int n = ring->n_vars();

    // Extended ring [t, X_1..X_n] with a fresh name for the auxiliary t.
    std::string aux = "t";
    while (ring->variable_index(aux) >= 0) aux += "_";
    std::vector<std::string> names{aux};
    names.insert(names.end(), ring->variable_names().begin(), ring->variable_names().end());
    RingPtr ext = make_ring(ring->field(), std::move(names));

    const MonomialOrder elim = MonomialOrder::elimination(1);
    auto lift = [&](const Polynomial& f) {
        std::vector<Term> terms;
        for (const Term& t : f.terms()) {
            std::vector<std::uint32_t> e(static_cast<std::size_t>(n + 1), 0);
            for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i + 1)] = t.monomial.exponent(i);
            terms.push_back(Term{Monomial(std::move(e)), t.coefficient});
        }
        return Polynomial::from_terms(ext, elim, std::move(terms));
    };

    const Polynomial t_var = Polynomial::variable(ext, 0, elim);
    const Polynomial one_minus_t =
        Polynomial::constant(ext, FieldElement::one(ring->field()), elim) - t_var;

    std::vector<Polynomial> gens;
    for (const Polynomial& g : a.generators()) gens.push_back(t_var * lift(g));
    for (const Polynomial& g : b.generators()) gens.push_back(one_minus_t * lift(g));

    GroebnerBasis gb = buchberger(ext, gens, elim);

    std::vector<Polynomial> kept;
    for (const Polynomial& g : gb.elements()) {
        bool t_free = true;
        for (const Term& term : g.terms())
            if (term.monomial.exponent(0) > 0) {
                t_free = false;
                break;
            }
        if (!t_free) continue;
        std::vector<Term> terms;
        for (const Term& term : g.terms()) {
            std::vector<std::uint32_t> e(static_cast<std::size_t>(n), 0);
            for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = term.monomial.exponent(i + 1);
            terms.push_back(Term{Monomial(std::move(e)), term.coefficient});
        }
        kept.push_back(Polynomial::from_terms(ring, MonomialOrder::grevlex(), std::move(terms)));
    }

    for (const Polynomial& g : kept)
        if (!ideal_membership(g, a.basis()) || !ideal_membership(g, b.basis()))
            throw InternalError("intersection generator fails membership re-verification");

    return Ideal(ring, std::move(kept));
}

namespace {

// Smallest number of variables hitting every support mask (branch and bound
// on a smallest uncovered mask).
int min_hitting_set(const std::vector<std::uint64_t>& masks, std::uint64_t chosen, int depth,
                    int best) {
    if (depth >= best) return best;
    const std::uint64_t* target = nullptr;
    int target_bits = 65;
    for (const std::uint64_t& m : masks) {
        if (m & chosen) continue;
        int bits = std::popcount(m);
        if (bits < target_bits) {
            target_bits = bits;
            target = &m;
        }
    }
    if (!target) return depth;
    std::uint64_t m = *target;
    while (m) {
        std::uint64_t bit = m & (~m + 1);
        m ^= bit;
        best = std::min(best, min_hitting_set(masks, chosen | bit, depth + 1, best));
    }
    return best;
}

} // namespace

std::optional<int> krull_dimension(const Ideal& a) {
    const GroebnerBasis& gb = a.basis();
    if (gb.is_unit_ideal()) return std::nullopt;
    const int n = a.ring()->n_vars();
    if (n > 64) throw UsageError("krull_dimension supports at most 64 variables");
    std::vector<std::uint64_t> masks;
    masks.reserve(gb.elements().size());
    for (const Polynomial& g : gb.elements())
        masks.push_back(g.leading_term().monomial.support_mask());
    return n - min_hitting_set(masks, 0, 0, n);
}

bool is_m_primary(const Ideal& a) {
    std::optional<int> dim = krull_dimension(a);
    return !dim.has_value() || *dim == 0;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    return same_ring(a.ring(), b.ring()) && a.basis() == b.basis();
}

HeightProfile height_profile(const std::vector<Ideal>& primes) {
    if (primes.empty()) throw UsageError("height_profile of an empty list");
    HeightProfile profile;
    const int n = primes.front().ring()->n_vars();
    profile.min_dim = n;
    for (const Ideal& ideal : primes) {
        if (!same_ring(ideal.ring(), primes.front().ring()))
            throw UsageError("height_profile: ring context mismatch");
        std::optional<int> dim = krull_dimension(ideal);
        if (!dim)
            throw HypothesisError(HypothesisKind::UnitIdeal,
                                  "the unit ideal is not a proper prime");
        profile.dimensions.push_back(*dim);
        profile.heights.push_back(n - *dim);
        profile.c = std::max(profile.c, n - *dim);
        profile.min_dim = std::min(profile.min_dim, *dim);
    }
    return profile;
}

std::vector<std::pair<int, int>> check_irredundant(const std::vector<Ideal>& primes) {
    std::vector<std::pair<int, int>> violations;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = 0; j < primes.size(); ++j) {
            if (i == j) continue;
            bool contained = true;
            for (const Polynomial& g : primes[i].generators())
                if (!ideal_membership(g, primes[j].basis())) {
                    contained = false;
                    break;
                }
            if (contained)
                violations.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
        }
    }
    return violations;
}

} // namespace cdim
