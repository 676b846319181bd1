#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grasscode/subspace.hpp"
#include "support/oracles.hpp"

using namespace grasscode;

TEST_CASE("gaussian binomial against canonical-form enumeration") {
    CHECK(gaussian_binomial(5, 0, 2) == 1);
    CHECK(gaussian_binomial(2, 1, 2) == 3);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(2, 3, 2) == 0);
    CHECK_THROWS_AS(gaussian_binomial(-1, 0, 2), std::invalid_argument);

    for (unsigned q : {2u, 3u, 4u})
        for (unsigned n = 0; n <= 6; ++n)
            for (unsigned k = 0; k <= n; ++k) {
                CHECK(gaussian_binomial(n, k, q) == BigInt(oracles::count_subspaces(n, k, q)));
            }
}

TEST_CASE("gaussian binomial symmetry") {
    for (unsigned q : {2u, 3u, 5u})
        for (int n = 0; n <= 10; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(gaussian_binomial(n, k, q) == gaussian_binomial(n, n - k, q));
}

TEST_CASE("pascal identity residual vanishes") {
    CHECK(pascal_identity_residual(4, 2, 2) == 0);
    CHECK(pascal_identity_residual(2, 1, 2) == 0);
    CHECK(pascal_identity_residual(3, 1, 3) == 0);
    for (unsigned q : {2u, 3u, 4u, 5u})
        for (int n = 2; n <= 12; ++n)
            for (int k = 1; k < n; ++k) CHECK(pascal_identity_residual(n, k, q) == 0);
}

TEST_CASE("sphere sizes match the exhaustive rank census") {
    CHECK(sphere_size(2, 2, 2, 0) == 1);
    CHECK(sphere_size(2, 2, 2, 1) == 9);
    CHECK(sphere_size(3, 2, 2, 2) == 42);
    CHECK(sphere_size(3, 2, 2, 3) == 0);  // t > min(m,n)

    for (unsigned m = 1; m <= 3; ++m)
        for (unsigned n = 1; n <= 3; ++n) {
            auto census = oracles::rank_census_gf2(m, n);
            for (unsigned t = 0; t <= std::min(m, n); ++t) {
                const std::uint64_t expected = census.count(t) ? census.at(t) : 0;
                CHECK(sphere_size(n, m, 2, t) == BigInt(expected));
            }
        }
}

TEST_CASE("sphere sizes sum to the full matrix count") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            BigInt total = 0;
            for (int t = 0; t <= std::min(m, n); ++t) total += sphere_size(n, m, 2, t);
            CHECK(total == big_pow(2, std::uint64_t(m) * std::uint64_t(n)));
        }
}

TEST_CASE("ball volumes") {
    CHECK(ball_volume(2, 2, 2, 0) == 1);
    CHECK(ball_volume(2, 2, 2, 1) == 10);
    CHECK(ball_volume(2, 2, 2, 2) == 16);
}

TEST_CASE("Gilbert-Varshamov radius") {
    CHECK(gv_radius(3, 3, 2, 2) == 0);  // k = n: threshold 1
    CHECK(gv_radius(2, 1, 2, 2) == 1);
    CHECK(gv_radius(3, 1, 2, 2) == 1);
    // the full-radius ball always reaches q^(m(n-k)), so the largest radius
    // is a hard upper answer
    CHECK(gv_radius(30, 0, 1, 2) == 1);
    CHECK_THROWS_AS(gv_radius(3, 4, 2, 2), std::invalid_argument);
}

TEST_CASE("single-iteration decoding probability") {
    CHECK(prange_success_probability(12, 5, 0) == 1);
    CHECK(prange_success_probability(10, 5, 2) == BigRat(2, 9));
    CHECK(prange_success_probability(4, 2, 1) == BigRat(1, 2));
    CHECK(prange_success_probability(10, 5, 6) == 0);  // t > n-k
}

TEST_CASE("subspace distance on worked examples") {
    FieldSpec gf2 = FieldSpec::gf2();
    SubspaceBasis u(4, FqMatrix(2, 4, {1, 0, 0, 0, 0, 1, 0, 0}, gf2));
    SubspaceBasis v(4, FqMatrix(2, 4, {0, 1, 0, 0, 0, 0, 1, 0}, gf2));
    CHECK(subspace_distance(u, u) == 0);
    CHECK(subspace_distance(u, v) == 2);

    SubspaceBasis l1(2, FqMatrix(1, 2, {1, 0}, gf2));
    SubspaceBasis l2(2, FqMatrix(1, 2, {0, 1}, gf2));
    CHECK(subspace_distance(l1, l2) == 2);

    SubspaceBasis w(3, FqMatrix(1, 3, {1, 1, 1}, gf2));
    CHECK_THROWS_AS(subspace_distance(l1, w), std::invalid_argument);
    CHECK_THROWS_AS(SubspaceBasis(2, FqMatrix(2, 2, {1, 1, 1, 1}, gf2)), std::invalid_argument);
}

TEST_CASE("subspace distance satisfies the metric axioms exhaustively") {
    // all subspaces of GF(2)^4 of dimension <= 2, via canonical row spaces
    std::vector<SubspaceBasis> spaces;
    FieldSpec gf2 = FieldSpec::gf2();
    // dimension 1: all 15 nonzero vectors give 15 lines with repetitions; dedupe by rref
    std::vector<FqMatrix> seen;
    auto add_space = [&](const FqMatrix& m) {
        auto r = rref(m);
        if (r.rank != m.rows()) return;
        FqMatrix canon = r.reduced;
        for (const auto& s : seen)
            if (s == canon) return;
        seen.push_back(canon);
        spaces.emplace_back(4, canon);
    };
    for (unsigned v = 1; v < 16; ++v) {
        FqMatrix m(1, 4, gf2);
        for (unsigned b = 0; b < 4; ++b) m.at(0, b) = (v >> b) & 1;
        add_space(m);
    }
    for (unsigned v1 = 1; v1 < 16; ++v1)
        for (unsigned v2 = v1 + 1; v2 < 16; ++v2) {
            FqMatrix m(2, 4, gf2);
            for (unsigned b = 0; b < 4; ++b) {
                m.at(0, b) = (v1 >> b) & 1;
                m.at(1, b) = (v2 >> b) & 1;
            }
            add_space(m);
        }
    CHECK(spaces.size() == 15 + 35);

    for (const auto& a : spaces)
        for (const auto& b : spaces) {
            const std::size_t dab = subspace_distance(a, b);
            CHECK(dab == subspace_distance(b, a));
            CHECK((dab == 0) == (a.vectors == b.vectors));
        }
    for (std::size_t i = 0; i < spaces.size(); ++i)
        for (std::size_t j = 0; j < spaces.size(); ++j)
            for (std::size_t l = 0; l < spaces.size(); ++l) {
                CHECK(subspace_distance(spaces[i], spaces[l]) <=
                      subspace_distance(spaces[i], spaces[j]) +
                          subspace_distance(spaces[j], spaces[l]));
            }
}

TEST_CASE("log2 of large rationals") {
    BigInt big = big_pow(2, 1000);
    CHECK(log2_of(big) == doctest::Approx(1000.0));
    CHECK(log2_of(BigRat(1, 128)) == doctest::Approx(-7.0));
}
