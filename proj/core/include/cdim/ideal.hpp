#ifndef CDIM_IDEAL_HPP
#define CDIM_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "cdim/groebner.hpp"

namespace cdim {

/// Homogeneous ideal in a fixed ring context, with reduced Groebner bases
/// cached per monomial order. Immutable after construction; the cache is
/// guarded so concurrent readers only ever observe finished bases.
class Ideal {
public:
    /// Drops zero generators; rejects inhomogeneous ones.
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return generators_; }

    const GroebnerBasis& basis(const MonomialOrder& order = MonomialOrder::grevlex()) const;

    /// Every generator is a linear form. Linear ideals are certified prime
    /// and geometrically irreducible; everything else is user-asserted.
    bool is_linear() const;

private:
    struct Cache {
        std::mutex mutex;
        std::map<std::pair<int, int>, std::unique_ptr<const GroebnerBasis>> bases;
    };

    RingPtr ring_;
    std::vector<Polynomial> generators_;
    std::shared_ptr<Cache> cache_;
};

/// Concatenated, deduplicated generators; no basis computed eagerly.
Ideal ideal_sum(const std::vector<Ideal>& parts);

/// a ∩ b via the auxiliary-variable construction: adjoin t, intersect
/// t·a + (1-t)·b with the t-free subring under an elimination order. Every
/// returned generator is re-verified to lie in both inputs.
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

/// Krull dimension of R/a, read combinatorially off the grevlex leading-term
/// ideal (largest variable subset meeting no leading support). nullopt for
/// the unit ideal, whose variety is empty.
std::optional<int> krull_dimension(const Ideal& a);

/// dim(R/a) == 0, with the unit ideal counted as m-primary-and-more.
bool is_m_primary(const Ideal& a);

/// Equality as ideals: identical reduced grevlex bases.
bool ideal_equal(const Ideal& a, const Ideal& b);

struct HeightProfile {
    std::vector<int> dimensions; // dim(R/I_j)
    std::vector<int> heights;    // n_vars - dimension
    int c = 0;                   // max height
    int min_dim = 0;
};

/// Per-ideal dimensions and heights; throws HypothesisError on a unit ideal.
HeightProfile height_profile(const std::vector<Ideal>& primes);

/// Ordered pairs (i, j), 1-based, with I_i ⊆ I_j. Empty means the list is a
/// valid family of pairwise incomparable primes.
std::vector<std::pair<int, int>> check_irredundant(const std::vector<Ideal>& primes);

} // namespace cdim

#endif
