#ifndef CDIM_HOMOLOGY_HPP
#define CDIM_HOMOLOGY_HPP

#include <cstdint>
#include <map>

#include "cdim/field.hpp"
#include "cdim/simplicial_complex.hpp"

namespace cdim {

/// Small dense integer matrix, row-major. Boundary and incidence matrices
/// only ever hold -1/0/+1 but ranks are defined for any integer entries.
struct IntMatrix {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<long long> entries;

    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : n_rows(rows), n_cols(cols), entries(rows * cols, 0) {}

    long long& at(std::size_t r, std::size_t c) { return entries[r * n_cols + c]; }
    long long at(std::size_t r, std::size_t c) const { return entries[r * n_cols + c]; }
};

/// Exact rank over the given coefficient field: fraction-free (Bareiss)
/// elimination on arbitrary-precision integers over Q, straightforward
/// row reduction over GF(p).
int matrix_rank(const IntMatrix& m, const FieldSpec& field);

/// Simplicial boundary in degree s: rows are (s-1)-simplices, columns are
/// s-simplices, entry (-1)^j when the row omits the column's j-th vertex.
/// For s == 0 the single row is the empty simplex (the augmentation).
IntMatrix boundary_matrix(const SimplicialComplex& complex, int s);

/// Same sign convention between consecutive non-simplex layers: columns are
/// the (s+1)-subsets absent from the complex, rows the s-subsets absent from
/// it. This is the boundary of the relative chain complex of (S, Delta) and
/// the degree-d row differential of the Mayer-Vietoris E_1 page.
IntMatrix non_simplex_incidence(const SimplicialComplex& complex, int s);

struct BettiProfile {
    std::uint64_t characteristic = 0;
    std::map<int, int> reduced;  // degree -> dim of reduced homology
    std::map<int, int> relative; // degree -> dim of pair homology, when computed
};

/// Reduced Betti numbers dim ker d_s - rank d_{s+1} for the requested
/// degrees (each must satisfy s <= dim_cap - 1 so the next boundary is
/// materialized; s = -1 is allowed and is 1 exactly for the empty complex).
BettiProfile reduced_betti(const SimplicialComplex& complex, const FieldSpec& field,
                           const std::vector<int>& degrees);

/// dim H_t(S, Delta) where S is the full simplex on the complex's vertices;
/// chains are free on the simplices of S absent from Delta. pre: t >= 0 and
/// t + 1 <= dim_cap.
int relative_betti_pair(const SimplicialComplex& complex, const FieldSpec& field, int t);

/// Profile with both maps filled: reduced homology in reduced_degrees, pair
/// homology in relative_degrees.
BettiProfile betti_profile(const SimplicialComplex& complex, const FieldSpec& field,
                           const std::vector<int>& reduced_degrees,
                           const std::vector<int>& relative_degrees);

} // namespace cdim

#endif
