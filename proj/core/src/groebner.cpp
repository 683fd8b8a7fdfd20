#include "cdim/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace cdim {

bool GroebnerBasis::is_unit_ideal() const {
    return elements_.size() == 1 && elements_[0].terms().size() == 1 &&
           elements_[0].leading_term().monomial.is_one();
}

Polynomial content_normalize(const Polynomial& f) {
    if (f.is_zero()) return f;
    if (!f.ring()->field().is_rational())
        return f.scale(field_inverse(f.leading_term().coefficient));
    mpz_class den_lcm = 1;
    for (const Term& t : f.terms())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                t.coefficient.rational().get_den().get_mpz_t());
    mpz_class num_gcd = 0;
    for (const Term& t : f.terms()) {
        mpz_class scaled = t.coefficient.rational().get_num() *
                           (den_lcm / t.coefficient.rational().get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    mpq_class factor(den_lcm, num_gcd);
    if (f.leading_term().coefficient.rational() < 0) factor = -factor;
    return f.scale(FieldElement::from_rational(factor));
}

namespace {

Polynomial make_monic(const Polynomial& f) {
    if (f.is_zero() || f.leading_term().coefficient.is_one()) return f;
    return f.scale(field_inverse(f.leading_term().coefficient));
}

std::size_t first_choice(std::size_t) { return 0; }

Polynomial reduce_once(const Polynomial& p, const Polynomial& g) {
    // One reduction step of the current leading term by g (g monic or not).
    const Term& lt = p.leading_term();
    const Term& gt = g.leading_term();
    FieldElement c = lt.coefficient * field_inverse(gt.coefficient);
    return p - g.times(lt.monomial.divide_by(gt.monomial), c);
}

Polynomial division_remainder(const Polynomial& f, const std::vector<Polynomial>& reducers,
                              const MonomialOrder& order, const ReducerChoice& choose) {
    Polynomial p = f.with_order(order);
    std::vector<Term> remainder;
    std::vector<std::size_t> candidates;
    while (!p.is_zero()) {
        const Term& lt = p.leading_term();
        candidates.clear();
        for (std::size_t i = 0; i < reducers.size(); ++i)
            if (!reducers[i].is_zero() &&
                reducers[i].leading_term().monomial.divides(lt.monomial))
                candidates.push_back(i);
        if (candidates.empty()) {
            remainder.push_back(lt);
            p = p - Polynomial::from_terms(p.ring(), order, {lt});
        } else {
            std::size_t pick = choose(candidates.size());
            if (pick >= candidates.size()) throw UsageError("reducer choice out of range");
            p = reduce_once(p, reducers[candidates[pick]]);
        }
    }
    return Polynomial::from_terms(f.ring(), order, std::move(remainder));
}

} // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    require_same_ring(f, g);
    const Polynomial fo = f.with_order(order);
    const Polynomial go = g.with_order(order);
    const Term& ft = fo.leading_term();
    const Term& gt = go.leading_term();
    Monomial l = Monomial::lcm(ft.monomial, gt.monomial);
    return fo.times(l.divide_by(ft.monomial), field_inverse(ft.coefficient)) -
           go.times(l.divide_by(gt.monomial), field_inverse(gt.coefficient));
}

GroebnerBasis buchberger(RingPtr ring, const std::vector<Polynomial>& generators,
                         const MonomialOrder& order) {
    if (!ring) throw UsageError("buchberger: empty ring context");
    std::vector<Polynomial> basis;
    for (const Polynomial& g : generators) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ring(), ring)) throw UsageError("buchberger: ring context mismatch");
        basis.push_back(content_normalize(g.with_order(order)));
    }

    // Pending pairs keyed by (lcm degree, i, j): the normal strategy pops the
    // smallest key, which is also what makes runs byte-stable.
    std::set<std::tuple<std::uint64_t, std::size_t, std::size_t>> pending;
    auto lcm_of = [&](std::size_t i, std::size_t j) {
        return Monomial::lcm(basis[i].leading_term().monomial,
                             basis[j].leading_term().monomial);
    };
    auto push_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pending.insert({lcm_of(i, j).total_degree(), i, j});
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs_with(j);

    auto in_pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return pending.count({lcm_of(a, b).total_degree(), a, b}) > 0;
    };

    while (!pending.empty()) {
        auto [deg, i, j] = *pending.begin();
        pending.erase(pending.begin());

        const Monomial& lmi = basis[i].leading_term().monomial;
        const Monomial& lmj = basis[j].leading_term().monomial;
        const Monomial l = Monomial::lcm(lmi, lmj);
        // Product criterion: coprime leading monomials.
        if (l == lmi * lmj) continue;
        // Chain criterion: some k divides the lcm and both companion pairs
        // were already handled.
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (basis[k].leading_term().monomial.divides(l) && !in_pending(i, k) &&
                !in_pending(j, k))
                chained = true;
        }
        if (chained) continue;

        Polynomial s = s_polynomial(basis[i], basis[j], order);
        Polynomial r = division_remainder(s, basis, order, first_choice);
        if (!r.is_zero()) {
            basis.push_back(content_normalize(r));
            push_pairs_with(basis.size() - 1);
        }
    }

    // Minimalize: drop elements whose leading monomial another one divides
    // (the first element wins among equal leading monomials).
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& lmi = basis[i].leading_term().monomial;
        bool keep = true;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Monomial& lmj = basis[j].leading_term().monomial;
            if (!lmj.divides(lmi)) continue;
            if (lmi != lmj || j < i) {
                keep = false;
                break;
            }
        }
        if (keep) minimal.push_back(basis[i]);
    }

    // Tail-reduce until stable, then make monic. Minimality keeps every
    // leading term irreducible, so only tails change here.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial r = division_remainder(minimal[i], others, order, first_choice);
            if (r.is_zero())
                throw InternalError("tail reduction killed a minimal basis element");
            if (r != minimal[i]) {
                changed = true;
                minimal[i] = content_normalize(r);
            }
        }
    }
    for (Polynomial& g : minimal) g = make_monic(g);
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_term().monomial, b.leading_term().monomial);
    });
    return GroebnerBasis(std::move(ring), order, std::move(minimal));
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order) {
    if (generators.empty()) throw UsageError("buchberger: empty ring context");
    return buchberger(generators.front().ring(), generators, order);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
    return normal_form(f, basis, first_choice);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis,
                       const ReducerChoice& choose) {
    if (!same_ring(f.ring(), basis.ring()))
        throw UsageError("normal_form: ring context mismatch");
    return division_remainder(f, basis.elements(), basis.order(), choose);
}

bool ideal_membership(const Polynomial& f, const GroebnerBasis& basis) {
    return normal_form(f, basis).is_zero();
}

} // namespace cdim
