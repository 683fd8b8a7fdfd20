#ifndef CDIM_MV_HPP
#define CDIM_MV_HPP

#include "cdim/homology.hpp"

namespace cdim {

/// The degree-d row map of the Mayer-Vietoris E_1 page, with each local
/// cohomology summand collapsed to one coefficient-field dimension: a signed
/// incidence matrix from the (t+2)-subsets with m-primary sum to the
/// (t+1)-subsets with m-primary sum. Its cokernel dimension is the
/// multiplicity w.
struct PhiMap {
    int t = 0;
    std::vector<Simplex> target_index; // Lambda_t
    std::vector<Simplex> source_index; // Lambda_{t+1}
    IntMatrix matrix;                  // |Lambda_t| x |Lambda_{t+1}|, entries in {-1,0,1}
};

/// pre: dim_cap >= t + 1.
PhiMap phi_map(const SimplicialComplex& complex, int t);

/// |Lambda_t| - rank over the coefficient field.
int phi_cokernel_dim(const PhiMap& phi, const FieldSpec& field);

/// Vanishing bound for an ideal whose minimal primes have height at most c:
/// d - [(d-1)/c]. pre: d >= 0, c >= 1.
int bound_faltings(int d, int c);

/// Bound for a sum of p+1 such ideals: d - [(d-1)/c] + p. pre: d, c >= 1, p >= 0.
int bound_sum(int d, int c, int p);

/// Bound for a geometrically irreducible ideal: d - 1 - [(d-2)/c].
/// pre: d >= 2, c >= 1.
int bound_hl(int d, int c);

/// Bound for a sum of p+1 geometrically irreducible ideals:
/// d - 1 - [(d-2)/c] + p, defined only when d > (p+1)c; the restriction
/// cannot be dropped and violating it is a hypothesis error.
int bound_main(int d, int c, int p);

} // namespace cdim

#endif
