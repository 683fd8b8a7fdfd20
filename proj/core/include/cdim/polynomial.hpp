#ifndef CDIM_POLYNOMIAL_HPP
#define CDIM_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "cdim/monomial.hpp"
#include "cdim/ring.hpp"

namespace cdim {

struct Term {
    Monomial monomial;
    FieldElement coefficient;
};

/// Sparse multivariate polynomial. Terms are nonzero, duplicate-free and
/// strictly decreasing under the polynomial's stored monomial order.
class Polynomial {
public:
    static Polynomial zero(RingPtr ring, MonomialOrder order = MonomialOrder::grevlex());
    static Polynomial constant(RingPtr ring, FieldElement value,
                               MonomialOrder order = MonomialOrder::grevlex());
    static Polynomial variable(RingPtr ring, int index,
                               MonomialOrder order = MonomialOrder::grevlex());
    /// Normalizing constructor: merges duplicates, drops zeros, sorts.
    static Polynomial from_terms(RingPtr ring, MonomialOrder order, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// pre: nonzero; throws DomainError on the zero polynomial.
    const Term& leading_term() const;

    /// Same polynomial re-sorted under a different order.
    Polynomial with_order(const MonomialOrder& order) const;

    /// True iff all terms share one total degree; the zero polynomial is
    /// vacuously homogeneous.
    bool is_homogeneous() const;
    /// Total degree of the leading term; pre: nonzero.
    std::uint64_t total_degree() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-() const;
    /// Multiplication by a single term.
    Polynomial times(const Monomial& m, const FieldElement& c) const;
    Polynomial scale(const FieldElement& c) const;

    /// Equality of the underlying polynomial, independent of stored order.
    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    Polynomial(RingPtr ring, MonomialOrder order, std::vector<Term> terms)
        : ring_(std::move(ring)), order_(order), terms_(std::move(terms)) {}

    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

/// Maximal term of f under an arbitrary order (rescans if the order differs
/// from f's stored one). pre: f != 0.
Term leading_term(const Polynomial& f, const MonomialOrder& order);

void require_same_ring(const Polynomial& a, const Polynomial& b);

} // namespace cdim

#endif
