#include "cdim/homology.hpp"

#include <algorithm>

#include <gmpxx.h>

namespace cdim {

namespace {

int rank_bareiss(const IntMatrix& m) {
    const std::size_t rows = m.n_rows, cols = m.n_cols;
    std::vector<mpz_class> a(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) a[i] = static_cast<long>(m.entries[i]);
    auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * cols + c]; };

    int rank = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows; ++r)
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        if (pivot != static_cast<std::size_t>(rank))
            for (std::size_t c = 0; c < cols; ++c)
                std::swap(at(pivot, c), at(static_cast<std::size_t>(rank), c));
        const std::size_t pr = static_cast<std::size_t>(rank);
        for (std::size_t r = pr + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                mpz_class v = at(pr, col) * at(r, c) - at(r, col) * at(pr, c);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                at(r, c) = std::move(v);
            }
            at(r, col) = 0;
        }
        prev = at(pr, col);
        ++rank;
    }
    return rank;
}

int rank_mod_p(const IntMatrix& m, std::uint64_t p) {
    const std::size_t rows = m.n_rows, cols = m.n_cols;
    std::vector<std::uint64_t> a(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
        long long v = m.entries[i] % static_cast<long long>(p);
        if (v < 0) v += static_cast<long long>(p);
        a[i] = static_cast<std::uint64_t>(v);
    }
    auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return a[r * cols + c]; };
    auto mul = [&](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::uint64_t>((unsigned __int128)(x) * y % p);
    };
    auto inv = [&](std::uint64_t x) {
        // Fermat inverse; p is prime and x != 0.
        std::uint64_t acc = 1, base = x, e = p - 2;
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    };

    int rank = 0;
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows; ++r)
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        const std::size_t pr = static_cast<std::size_t>(rank);
        if (pivot != pr)
            for (std::size_t c = 0; c < cols; ++c) std::swap(at(pivot, c), at(pr, c));
        const std::uint64_t scale = inv(at(pr, col));
        for (std::size_t c = col; c < cols; ++c) at(pr, c) = mul(at(pr, c), scale);
        for (std::size_t r = pr + 1; r < rows; ++r) {
            const std::uint64_t f = at(r, col);
            if (f == 0) continue;
            for (std::size_t c = col; c < cols; ++c) {
                std::uint64_t sub = mul(f, at(pr, c));
                at(r, c) = at(r, c) >= sub ? at(r, c) - sub : at(r, c) + p - sub;
            }
        }
        ++rank;
    }
    return rank;
}

// Signed incidence with an arbitrary row predicate: the column simplex's
// j-th face gets (-1)^j if the predicate admits the face as a row.
IntMatrix signed_incidence(const std::vector<Simplex>& rows, const std::vector<Simplex>& cols) {
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Simplex& s = cols[c];
        Simplex face;
        face.reserve(s.size());
        for (std::size_t omit = 0; omit < s.size(); ++omit) {
            face.clear();
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != omit) face.push_back(s[i]);
            auto it = std::lower_bound(rows.begin(), rows.end(), face);
            if (it != rows.end() && *it == face)
                m.at(static_cast<std::size_t>(it - rows.begin()), c) = (omit % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

} // namespace

int matrix_rank(const IntMatrix& m, const FieldSpec& field) {
    if (m.n_rows == 0 || m.n_cols == 0) return 0;
    return field.is_rational() ? rank_bareiss(m) : rank_mod_p(m, field.characteristic());
}

IntMatrix boundary_matrix(const SimplicialComplex& complex, int s) {
    if (s < 0 || s > complex.dim_cap())
        throw UsageError("boundary degree outside the materialized cap");
    if (s == 0) {
        // Augmentation onto the empty simplex.
        IntMatrix m(1, complex.count(0));
        for (std::size_t c = 0; c < m.n_cols; ++c) m.at(0, c) = 1;
        return m;
    }
    return signed_incidence(complex.layer(s - 1), complex.layer(s));
}

IntMatrix non_simplex_incidence(const SimplicialComplex& complex, int s) {
    if (s < 1 || s > complex.dim_cap())
        throw UsageError("incidence degree outside the materialized cap");
    auto layers = non_simplex_layers(complex, {s - 1, s});
    return signed_incidence(layers[0].tuples, layers[1].tuples);
}

BettiProfile reduced_betti(const SimplicialComplex& complex, const FieldSpec& field,
                           const std::vector<int>& degrees) {
    BettiProfile profile;
    profile.characteristic = field.characteristic();
    for (int s : degrees) {
        if (s < -1)
            throw UsageError("reduced homology degree below -1");
        if (s + 1 > complex.dim_cap())
            throw UsageError("degree " + std::to_string(s) + " needs dim_cap >= " +
                             std::to_string(s + 1) + ", complex has " +
                             std::to_string(complex.dim_cap()));
        const std::size_t chain_dim = s == -1 ? 1 : complex.count(s);
        const int rank_out = s == -1 ? 0 : matrix_rank(boundary_matrix(complex, s), field);
        const int rank_in = matrix_rank(boundary_matrix(complex, s + 1), field);
        profile.reduced[s] = static_cast<int>(chain_dim) - rank_out - rank_in;
    }
    return profile;
}

BettiProfile betti_profile(const SimplicialComplex& complex, const FieldSpec& field,
                           const std::vector<int>& reduced_degrees,
                           const std::vector<int>& relative_degrees) {
    BettiProfile profile = reduced_betti(complex, field, reduced_degrees);
    for (int t : relative_degrees)
        profile.relative[t] = relative_betti_pair(complex, field, t);
    return profile;
}

int relative_betti_pair(const SimplicialComplex& complex, const FieldSpec& field, int t) {
    if (t < 0) throw UsageError("relative homology degree must be non-negative");
    if (t + 1 > complex.dim_cap())
        throw UsageError("relative degree " + std::to_string(t) + " needs dim_cap >= " +
                         std::to_string(t + 1) + ", complex has " +
                         std::to_string(complex.dim_cap()));
    auto layers = non_simplex_layers(complex, t == 0 ? std::vector<int>{t, t + 1}
                                                     : std::vector<int>{t - 1, t, t + 1});
    const std::vector<Simplex>& lam_t = t == 0 ? layers[0].tuples : layers[1].tuples;
    const std::vector<Simplex>& lam_t1 = t == 0 ? layers[1].tuples : layers[2].tuples;

    int rank_out = 0;
    if (t > 0) rank_out = matrix_rank(signed_incidence(layers[0].tuples, lam_t), field);
    const int rank_in = matrix_rank(signed_incidence(lam_t, lam_t1), field);
    return static_cast<int>(lam_t.size()) - rank_out - rank_in;
}

} // namespace cdim
