#include "cdim/polynomial.hpp"

#include <algorithm>
#include <map>

namespace cdim {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw UsageError("ring context mismatch: " + a.ring()->to_string() + " vs " +
                         b.ring()->to_string());
}

Polynomial Polynomial::zero(RingPtr ring, MonomialOrder order) {
    return Polynomial(std::move(ring), order, {});
}

Polynomial Polynomial::constant(RingPtr ring, FieldElement value, MonomialOrder order) {
    if (value.field() != ring->field()) throw UsageError("coefficient field mismatch");
    std::vector<Term> terms;
    if (!value.is_zero()) terms.push_back(Term{Monomial::one(ring->n_vars()), std::move(value)});
    return Polynomial(std::move(ring), order, std::move(terms));
}

Polynomial Polynomial::variable(RingPtr ring, int index, MonomialOrder order) {
    if (index < 0 || index >= ring->n_vars()) throw UsageError("variable index out of range");
    std::vector<Term> terms{
        Term{Monomial::variable(ring->n_vars(), index), FieldElement::one(ring->field())}};
    return Polynomial(std::move(ring), order, std::move(terms));
}

Polynomial Polynomial::from_terms(RingPtr ring, MonomialOrder order, std::vector<Term> terms) {
    for (const Term& t : terms) {
        if (t.monomial.n_vars() != ring->n_vars()) throw UsageError("monomial arity mismatch");
        if (t.coefficient.field() != ring->field()) throw UsageError("coefficient field mismatch");
    }
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return order.greater(a.monomial, b.monomial);
    });
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (Term& t : terms) {
        if (!merged.empty() && merged.back().monomial == t.monomial) {
            merged.back().coefficient = merged.back().coefficient + t.coefficient;
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](const Term& t) { return t.coefficient.is_zero(); });
    return Polynomial(std::move(ring), order, std::move(merged));
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return terms_.front();
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
    if (order == order_) return *this;
    return from_terms(ring_, order, terms_);
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const std::uint64_t d = terms_.front().monomial.total_degree();
    for (const Term& t : terms_)
        if (t.monomial.total_degree() != d) return false;
    return true;
}

std::uint64_t Polynomial::total_degree() const {
    return leading_term().monomial.total_degree();
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    require_same_ring(*this, other);
    std::vector<Term> terms = terms_;
    const Polynomial rhs = other.with_order(order_);
    terms.insert(terms.end(), rhs.terms_.begin(), rhs.terms_.end());
    return from_terms(ring_, order_, std::move(terms));
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator-() const {
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const Term& t : terms_) terms.push_back(Term{t.monomial, field_neg(t.coefficient)});
    return Polynomial(ring_, order_, std::move(terms));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_same_ring(*this, other);
    std::vector<Term> terms;
    terms.reserve(terms_.size() * other.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : other.terms_)
            terms.push_back(Term{a.monomial * b.monomial, a.coefficient * b.coefficient});
    return from_terms(ring_, order_, std::move(terms));
}

Polynomial Polynomial::times(const Monomial& m, const FieldElement& c) const {
    if (c.is_zero()) return zero(ring_, order_);
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const Term& t : terms_) terms.push_back(Term{t.monomial * m, t.coefficient * c});
    // Multiplicativity of the order keeps strict sortedness intact.
    return Polynomial(ring_, order_, std::move(terms));
}

Polynomial Polynomial::scale(const FieldElement& c) const {
    return times(Monomial::one(ring_->n_vars()), c);
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (!same_ring(ring_, other.ring_)) return false;
    if (order_ == other.order_) return terms_.size() == other.terms_.size() &&
        std::equal(terms_.begin(), terms_.end(), other.terms_.begin(),
                   [](const Term& a, const Term& b) {
                       return a.monomial == b.monomial && a.coefficient == b.coefficient;
                   });
    return *this == other.with_order(order_);
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    const auto& names = ring_->variable_names();
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        FieldElement c = t.coefficient;
        std::string sep;
        if (i > 0) {
            // Pull the sign out of rational coefficients for readability.
            if (c.field().is_rational() && c.rational() < 0) {
                sep = " - ";
                c = field_neg(c);
            } else {
                sep = " + ";
            }
        }
        std::string body;
        if (t.monomial.is_one()) {
            body = c.to_string();
        } else if (c.is_one()) {
            body = t.monomial.to_string(names);
        } else {
            body = c.to_string() + "*" + t.monomial.to_string(names);
        }
        out += sep + body;
    }
    return out;
}

Term leading_term(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) throw DomainError("leading term of the zero polynomial");
    if (order == f.order()) return f.leading_term();
    const Term* best = &f.terms().front();
    for (const Term& t : f.terms())
        if (order.greater(t.monomial, best->monomial)) best = &t;
    return *best;
}

} // namespace cdim
