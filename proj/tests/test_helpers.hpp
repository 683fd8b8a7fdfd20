#ifndef CDIM_TEST_HELPERS_HPP
#define CDIM_TEST_HELPERS_HPP

// Test-only oracles, deliberately independent of the library's computation
// paths: rational-pivot elimination instead of Bareiss, extended-Euclid
// inverses instead of Fermat powers, and a pure linear-algebra m-primarity
// test for arrangements of linear forms.

#include <random>
#include <vector>

#include <gmpxx.h>

#include "cdim/analysis.hpp"

namespace cdim::test {

inline int naive_rank_rational(const IntMatrix& m) {
    std::vector<mpq_class> a(m.entries.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<long>(m.entries[i]);
    auto at = [&](std::size_t r, std::size_t c) -> mpq_class& { return a[r * m.n_cols + c]; };
    int rank = 0;
    for (std::size_t col = 0; col < m.n_cols && static_cast<std::size_t>(rank) < m.n_rows; ++col) {
        std::size_t pivot = m.n_rows;
        for (std::size_t r = static_cast<std::size_t>(rank); r < m.n_rows; ++r)
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot == m.n_rows) continue;
        for (std::size_t c = 0; c < m.n_cols; ++c)
            std::swap(at(pivot, c), at(static_cast<std::size_t>(rank), c));
        const std::size_t pr = static_cast<std::size_t>(rank);
        for (std::size_t r = pr + 1; r < m.n_rows; ++r) {
            if (at(r, col) == 0) continue;
            mpq_class f = at(r, col) / at(pr, col);
            for (std::size_t c = col; c < m.n_cols; ++c) at(r, c) -= f * at(pr, c);
        }
        ++rank;
    }
    return rank;
}

inline long long euclid_inverse(long long a, long long p) {
    long long t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return t < 0 ? t + p : t;
}

inline int naive_rank_mod_p(const IntMatrix& m, long long p) {
    std::vector<long long> a(m.entries.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = m.entries[i] % p;
        if (a[i] < 0) a[i] += p;
    }
    auto at = [&](std::size_t r, std::size_t c) -> long long& { return a[r * m.n_cols + c]; };
    auto mul = [&](long long x, long long y) {
        return static_cast<long long>((unsigned __int128)(x) * static_cast<unsigned long long>(y) %
                                      static_cast<unsigned long long>(p));
    };
    int rank = 0;
    for (std::size_t col = 0; col < m.n_cols && static_cast<std::size_t>(rank) < m.n_rows; ++col) {
        std::size_t pivot = m.n_rows;
        for (std::size_t r = static_cast<std::size_t>(rank); r < m.n_rows; ++r)
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot == m.n_rows) continue;
        for (std::size_t c = 0; c < m.n_cols; ++c)
            std::swap(at(pivot, c), at(static_cast<std::size_t>(rank), c));
        const std::size_t pr = static_cast<std::size_t>(rank);
        const long long inv = euclid_inverse(at(pr, col), p);
        for (std::size_t r = pr + 1; r < m.n_rows; ++r) {
            if (at(r, col) == 0) continue;
            const long long f = mul(at(r, col), inv);
            for (std::size_t c = col; c < m.n_cols; ++c) {
                at(r, c) = (at(r, c) - mul(f, at(pr, c))) % p;
                if (at(r, c) < 0) at(r, c) += p;
            }
        }
        ++rank;
    }
    return rank;
}

inline int naive_rank(const IntMatrix& m, const FieldSpec& field) {
    if (m.n_rows == 0 || m.n_cols == 0) return 0;
    return field.is_rational() ? naive_rank_rational(m)
                               : naive_rank_mod_p(m, static_cast<long long>(field.characteristic()));
}

/// Coefficient rows of a family of linear forms, denominators cleared.
inline IntMatrix linear_coefficient_matrix(const std::vector<Polynomial>& forms, int n_vars) {
    IntMatrix m(forms.size(), static_cast<std::size_t>(n_vars));
    for (std::size_t r = 0; r < forms.size(); ++r) {
        const Polynomial& f = forms[r];
        if (f.ring()->field().is_rational()) {
            mpz_class den = 1;
            for (const Term& t : f.terms())
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                        t.coefficient.rational().get_den().get_mpz_t());
            for (const Term& t : f.terms()) {
                int var = -1;
                for (int i = 0; i < n_vars; ++i)
                    if (t.monomial.exponent(i) == 1) var = i;
                mpz_class v = t.coefficient.rational().get_num() *
                              (den / t.coefficient.rational().get_den());
                m.at(r, static_cast<std::size_t>(var)) = static_cast<long long>(v.get_si());
            }
        } else {
            for (const Term& t : f.terms()) {
                int var = -1;
                for (int i = 0; i < n_vars; ++i)
                    if (t.monomial.exponent(i) == 1) var = i;
                m.at(r, static_cast<std::size_t>(var)) =
                    static_cast<long long>(t.coefficient.residue());
            }
        }
    }
    return m;
}

/// m-primarity of a sum of linear ideals by pure linear algebra: the forms
/// span the dual space exactly when the coefficient matrix has full rank.
inline bool linear_sum_m_primary(const std::vector<Ideal>& parts) {
    std::vector<Polynomial> forms;
    for (const Ideal& ideal : parts)
        for (const Polynomial& g : ideal.generators()) forms.push_back(g);
    const int n = parts.front().ring()->n_vars();
    return naive_rank(linear_coefficient_matrix(forms, n), parts.front().ring()->field()) == n;
}

inline IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.n_rows, b.n_cols);
    for (std::size_t i = 0; i < a.n_rows; ++i)
        for (std::size_t k = 0; k < a.n_cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.n_cols; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

inline bool is_zero_matrix(const IntMatrix& m) {
    for (long long v : m.entries)
        if (v != 0) return false;
    return true;
}

/// Random downward-closed complex on n vertices, materialized to max_dim+1.
inline SimplicialComplex random_complex(std::mt19937_64& rng, int n, int max_dim,
                                        double keep_probability) {
    SimplicialComplex complex(n, max_dim + 1);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int dim = 0; dim <= max_dim; ++dim) {
        for (Simplex& tuple : enumerate_subsets(n, dim + 1)) {
            bool facets_present = true;
            if (dim > 0) {
                for (std::size_t omit = 0; omit < tuple.size() && facets_present; ++omit) {
                    Simplex face;
                    for (std::size_t i = 0; i < tuple.size(); ++i)
                        if (i != omit) face.push_back(tuple[i]);
                    facets_present = complex.contains(face);
                }
            }
            if (facets_present && coin(rng) < keep_probability) complex.insert(std::move(tuple));
        }
    }
    return complex;
}

/// Random complex that contains its full (t-1)-skeleton, materialized far
/// enough for the Phi map at t.
inline SimplicialComplex random_complex_with_skeleton(std::mt19937_64& rng, int n, int t,
                                                      double keep_probability) {
    SimplicialComplex complex(n, t + 1);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int dim = 0; dim <= t - 1; ++dim)
        for (Simplex& tuple : enumerate_subsets(n, dim + 1)) complex.insert(std::move(tuple));
    for (int dim = t; dim <= t + 1; ++dim) {
        for (Simplex& tuple : enumerate_subsets(n, dim + 1)) {
            bool facets_present = true;
            for (std::size_t omit = 0; omit < tuple.size() && facets_present; ++omit) {
                Simplex face;
                for (std::size_t i = 0; i < tuple.size(); ++i)
                    if (i != omit) face.push_back(tuple[i]);
                facets_present = complex.contains(face);
            }
            if (facets_present && coin(rng) < keep_probability) complex.insert(std::move(tuple));
        }
    }
    return complex;
}

/// Random homogeneous polynomial with small coefficients.
inline Polynomial random_homogeneous(std::mt19937_64& rng, const RingPtr& ring, int degree,
                                     int max_terms) {
    const int n = ring->n_vars();
    std::uniform_int_distribution<int> var(0, n - 1);
    std::uniform_int_distribution<int> coeff(1, 6);
    std::uniform_int_distribution<int> n_terms(1, max_terms);
    std::vector<Term> terms;
    const int count = n_terms(rng);
    for (int i = 0; i < count; ++i) {
        std::vector<std::uint32_t> e(static_cast<std::size_t>(n), 0);
        for (int d = 0; d < degree; ++d) ++e[static_cast<std::size_t>(var(rng))];
        terms.push_back(Term{Monomial(std::move(e)),
                             FieldElement::from_integer(ring->field(), coeff(rng))});
    }
    return Polynomial::from_terms(ring, MonomialOrder::grevlex(), std::move(terms));
}

inline RingPtr test_ring(const FieldSpec& field, int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
    return make_ring(field, names);
}

} // namespace cdim::test

#endif
