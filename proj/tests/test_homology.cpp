#include <doctest.h>

#include <random>

#include "test_helpers.hpp"

using namespace cdim;

namespace {

const std::vector<FieldSpec> kFields{FieldSpec(0), FieldSpec(2), FieldSpec(3), FieldSpec(5),
                                     FieldSpec(7)};

// Reduced Euler characteristic two ways: from face counts and from homology.
void check_euler_identity(const SimplicialComplex& complex) {
    const int top = complex.max_nonempty_dimension();
    SimplicialComplex padded = complex.dim_cap() > top ? complex : complex.with_cap(top + 1);
    long long from_counts = -1;
    for (int s = 0; s <= top; ++s)
        from_counts += (s % 2 == 0 ? 1LL : -1LL) * static_cast<long long>(padded.count(s));
    std::vector<int> degrees;
    for (int s = -1; s <= top; ++s) degrees.push_back(s);
    for (const FieldSpec& field : kFields) {
        BettiProfile profile = reduced_betti(padded, field, degrees);
        long long from_homology = 0;
        for (int s = -1; s <= top; ++s)
            from_homology += (((s % 2) + 2) % 2 == 0 ? 1LL : -1LL) * profile.reduced.at(s);
        CHECK(from_counts == from_homology);
    }
}

void check_boundary_squares_to_zero(const SimplicialComplex& complex) {
    for (int s = 1; s <= complex.dim_cap(); ++s) {
        IntMatrix outer = boundary_matrix(complex, s);
        IntMatrix inner = boundary_matrix(complex, s - 1);
        CHECK(test::is_zero_matrix(test::int_multiply(inner, outer)));
    }
}

} // namespace

TEST_SUITE("homology") {

TEST_CASE("rank of identity and zero matrices") {
    IntMatrix id(3, 3);
    for (std::size_t i = 0; i < 3; ++i) id.at(i, i) = 1;
    IntMatrix zero(4, 5);
    for (const FieldSpec& field : kFields) {
        CHECK(matrix_rank(id, field) == 3);
        CHECK(matrix_rank(zero, field) == 0);
    }
    CHECK(matrix_rank(IntMatrix(0, 0), FieldSpec(0)) == 0);
}

TEST_CASE("projective plane boundary ranks") {
    SimplicialComplex rp2 = rp2_six_vertex();
    IntMatrix d2 = boundary_matrix(rp2, 2);
    REQUIRE(d2.n_rows == 15);
    REQUIRE(d2.n_cols == 10);
    // Frozen from the homology of the projective plane by rank-nullity:
    // betti_1 = (15 - 5) - rank over each field.
    CHECK(matrix_rank(d2, FieldSpec(0)) == 10);
    CHECK(matrix_rank(d2, FieldSpec(2)) == 9);
    CHECK(test::naive_rank(d2, FieldSpec(0)) == 10);
    CHECK(test::naive_rank(d2, FieldSpec(2)) == 9);
}

TEST_CASE("bareiss and modular ranks agree with the naive eliminations") {
    std::mt19937_64 rng(60221023);
    std::uniform_int_distribution<int> dim(1, 8);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int iter = 0; iter < 200; ++iter) {
        IntMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
        for (long long& v : m.entries) v = entry(rng);
        for (const FieldSpec& field : kFields)
            CHECK(matrix_rank(m, field) == test::naive_rank(m, field));
        // Rank is invariant under transposition.
        IntMatrix mt(m.n_cols, m.n_rows);
        for (std::size_t r = 0; r < m.n_rows; ++r)
            for (std::size_t c = 0; c < m.n_cols; ++c) mt.at(c, r) = m.at(r, c);
        CHECK(matrix_rank(m, FieldSpec(0)) == matrix_rank(mt, FieldSpec(0)));
    }
}

TEST_CASE("full simplices have vanishing reduced homology") {
    for (int n = 1; n <= 8; ++n) {
        SimplicialComplex full = full_simplex(n).with_cap(n);
        std::vector<int> degrees;
        for (int s = -1; s <= n - 1; ++s) degrees.push_back(s);
        for (const FieldSpec& field : {FieldSpec(0), FieldSpec(2), FieldSpec(7)}) {
            BettiProfile profile = reduced_betti(full, field, degrees);
            for (int s : degrees) CHECK(profile.reduced.at(s) == 0);
        }
    }
}

TEST_CASE("sphere boundaries concentrate homology in degree n-2") {
    for (int n = 2; n <= 8; ++n) {
        SimplicialComplex sphere = sphere_boundary(n);
        std::vector<int> degrees;
        for (int s = -1; s <= n - 2; ++s) degrees.push_back(s);
        for (const FieldSpec& field : {FieldSpec(0), FieldSpec(2), FieldSpec(7)}) {
            BettiProfile profile = reduced_betti(sphere, field, degrees);
            for (int s : degrees) CHECK(profile.reduced.at(s) == (s == n - 2 ? 1 : 0));
        }
    }
}

TEST_CASE("projective plane betti profile") {
    SimplicialComplex rp2 = rp2_six_vertex();
    BettiProfile gf2 = reduced_betti(rp2, FieldSpec(2), {0, 1, 2});
    CHECK(gf2.reduced.at(0) == 0);
    CHECK(gf2.reduced.at(1) == 1);
    CHECK(gf2.reduced.at(2) == 1);
    for (const FieldSpec& field : {FieldSpec(0), FieldSpec(7)}) {
        BettiProfile other = reduced_betti(rp2, field, {0, 1, 2});
        CHECK(other.reduced.at(0) == 0);
        CHECK(other.reduced.at(1) == 0);
        CHECK(other.reduced.at(2) == 0);
    }
}

TEST_CASE("empty and discrete complexes") {
    SimplicialComplex empty(0, 0);
    CHECK(reduced_betti(empty, FieldSpec(0), {-1}).reduced.at(-1) == 1);

    SimplicialComplex two_points(2, 2);
    two_points.insert({1});
    two_points.insert({2});
    CHECK(reduced_betti(two_points, FieldSpec(0), {-1, 0}).reduced.at(-1) == 0);
    CHECK(reduced_betti(two_points, FieldSpec(0), {-1, 0}).reduced.at(0) == 1);
    CHECK(relative_betti_pair(two_points, FieldSpec(0), 1) == 1);
}

TEST_CASE("degree outside the materialized range is a usage error") {
    SimplicialComplex rp2 = rp2_six_vertex(); // cap 5
    CHECK_THROWS_AS(reduced_betti(rp2, FieldSpec(0), {5}), UsageError);
    CHECK_THROWS_AS(reduced_betti(rp2, FieldSpec(0), {-2}), UsageError);
    CHECK_THROWS_AS(relative_betti_pair(rp2, FieldSpec(0), 5), UsageError);
}

TEST_CASE("relative homology of the pair (S, Delta)") {
    CHECK(relative_betti_pair(full_simplex(4), FieldSpec(0), 1) == 0);
    CHECK(relative_betti_pair(full_simplex(4), FieldSpec(0), 2) == 0);
    SimplicialComplex rp2 = rp2_six_vertex();
    CHECK(relative_betti_pair(rp2, FieldSpec(2), 2) == 1);
    CHECK(relative_betti_pair(rp2, FieldSpec(0), 2) == 0);
}

TEST_CASE("combined profile fills both maps") {
    SimplicialComplex rp2 = rp2_six_vertex();
    BettiProfile profile = betti_profile(rp2, FieldSpec(2), {0, 1, 2}, {2, 3});
    CHECK(profile.reduced.at(1) == 1);
    CHECK(profile.relative.at(2) == 1);
    CHECK(profile.relative.at(3) == profile.reduced.at(2));
    CHECK(profile.reduced.count(3) == 0); // not computed, absent rather than zero
}

TEST_CASE("boundary composition and euler identity on stock complexes") {
    for (int n = 2; n <= 6; ++n) {
        check_boundary_squares_to_zero(full_simplex(n));
        check_boundary_squares_to_zero(sphere_boundary(n));
        check_euler_identity(full_simplex(n));
        check_euler_identity(sphere_boundary(n));
    }
    check_boundary_squares_to_zero(rp2_six_vertex());
    check_euler_identity(rp2_six_vertex());
}

TEST_CASE("pair long exact sequence on random complexes") {
    std::mt19937_64 rng(271828);
    std::uniform_int_distribution<int> n_dist(2, 7);
    std::uniform_int_distribution<int> dim_dist(1, 3);
    std::uniform_real_distribution<double> prob(0.2, 0.9);
    for (int iter = 0; iter < 120; ++iter) {
        const int n = n_dist(rng);
        const int max_dim = std::min(dim_dist(rng), n - 1);
        SimplicialComplex complex = test::random_complex(rng, n, max_dim, prob(rng));
        check_boundary_squares_to_zero(complex);
        check_euler_identity(complex);
        for (int t = 0; t <= max_dim; ++t) {
            for (const FieldSpec& field : kFields) {
                CHECK(relative_betti_pair(complex, field, t) ==
                      reduced_betti(complex, field, {t - 1}).reduced.at(t - 1));
            }
        }
    }
}

} // TEST_SUITE
