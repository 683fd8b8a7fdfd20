#ifndef CDIM_GROEBNER_HPP
#define CDIM_GROEBNER_HPP

#include <functional>
#include <vector>

#include "cdim/polynomial.hpp"

namespace cdim {

/// Reduced Groebner basis: every element monic, no term of any element
/// divisible by the leading monomial of another, elements sorted by leading
/// monomial ascending. The monic reduced basis of an ideal is unique, so
/// equality of ideals is equality of these objects.
class GroebnerBasis {
public:
    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial>& elements() const { return elements_; }
    bool is_zero_ideal() const { return elements_.empty(); }
    /// True iff 1 belongs to the ideal.
    bool is_unit_ideal() const;

    bool operator==(const GroebnerBasis& other) const {
        return same_ring(ring_, other.ring_) && order_ == other.order_ &&
               elements_ == other.elements_;
    }

private:
    friend GroebnerBasis buchberger(RingPtr, const std::vector<Polynomial>&, const MonomialOrder&);

    GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> elements)
        : ring_(std::move(ring)), order_(order), elements_(std::move(elements)) {}

    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Polynomial> elements_;
};

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree first) and the product and chain pair criteria. Zero generators
/// are discarded; the zero ideal yields an empty basis. Deterministic for a
/// fixed input ordering.
GroebnerBasis buchberger(RingPtr ring, const std::vector<Polynomial>& generators,
                         const MonomialOrder& order);
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order);

/// Picks which of n eligible reducers to use; confluence of reduction by a
/// Groebner basis makes the remainder independent of this choice.
using ReducerChoice = std::function<std::size_t(std::size_t n_candidates)>;

/// Unique remainder of f modulo the basis: no term of the result is
/// divisible by any basis leading monomial and f - result lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis,
                       const ReducerChoice& choose);

bool ideal_membership(const Polynomial& f, const GroebnerBasis& basis);

/// S(f,g) = (lcm/lt f)·f - (lcm/lt g)·g; pre: both nonzero, shared context.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Scaling normalization used throughout basis construction: monic over
/// GF(p); over Q, integer content 1 with positive leading coefficient.
Polynomial content_normalize(const Polynomial& f);

} // namespace cdim

#endif
