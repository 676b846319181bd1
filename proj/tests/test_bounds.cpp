#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grasscode/bounds.hpp"

using namespace grasscode;

namespace {
BoundQuery q(std::string id, std::map<std::string, std::int64_t> params,
             std::optional<BigRat> x = std::nullopt) {
    BoundQuery query;
    query.bound_id = std::move(id);
    query.params = std::move(params);
    query.x = std::move(x);
    return query;
}
} // namespace

TEST_CASE("catalog spot checks") {
    auto v = evaluate_bound(q("gaussian_decomposition_cost", {{"n", 10}, {"k", 4}}));
    REQUIRE(v.exact);
    CHECK(*v.exact == 48);

    v = evaluate_bound(q("simple_code_failure", {{"q", 2}, {"m", 18}, {"w", 12}}));
    REQUIRE(v.exact);
    CHECK(*v.exact == BigRat(1, 128));
    CHECK(v.log2_value == doctest::Approx(-7.0));

    v = evaluate_bound(q("intersection_array", {{"i", 1}, {"m", 3}, {"q", 2}}));
    REQUIRE(v.exact);
    CHECK(*v.exact == 7);

    v = evaluate_bound(q("guess_probability", {{"n", 5}, {"k", 5}, {"r", 5}, {"q", 2}}));
    REQUIRE(v.exact);
    CHECK(*v.exact == 1);
}

TEST_CASE("guess probability flags ratios above one") {
    auto v = evaluate_bound(q("guess_probability", {{"n", 10}, {"k", 3}, {"r", 1}, {"q", 2}}));
    REQUIRE(v.exact);
    CHECK(*v.exact > 1);
    CHECK(v.note.find("exceeds 1") != std::string::npos);
}

TEST_CASE("missing parameters are reported by name") {
    try {
        evaluate_bound(q("simple_code_failure", {{"q", 2}, {"m", 18}}));
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("'w'") != std::string::npos);
    }
    CHECK_THROWS_AS(evaluate_bound(q("no_such_bound", {})), std::invalid_argument);
}

TEST_CASE("catalog lists every implemented bound") {
    const auto& entries = bounds_catalog();
    CHECK(entries.size() == 16);
    for (const auto& e : entries) {
        BoundQuery query;
        query.bound_id = e.id;
        for (const auto& p : e.params) query.params[p] = 2;
        query.params["n"] = 8;  // keep k <= n style constraints satisfiable
        if (query.params.count("k")) query.params["k"] = 3;
        if (query.params.count("l")) query.params["l"] = 2;
        query.x = BigRat(1, 2);
        CHECK_NOTHROW(evaluate_bound(query));
    }
}

TEST_CASE("prop2 bound equals q^n times the gaussian binomial") {
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            auto v = evaluate_bound(q("prop2_bound", {{"n", n}, {"k", k}, {"q", 2}}));
            REQUIRE(v.exact);
            CHECK(*v.exact == BigRat(big_pow(2, std::uint64_t(n)) * gaussian_binomial(n, k, 2)));
        }
}

TEST_CASE("count products") {
    auto v = evaluate_bound(q("count_u", {{"i", 4}, {"q", 2}}));
    REQUIRE(v.exact);
    CHECK(*v.exact == 64);  // 2^(0+1+2+3)

    v = evaluate_bound(q("count_v", {{"i", 2}, {"r", 1}, {"q", 2}}));
    REQUIRE(v.exact);
    // (1 - 1/2)(2 - 1) = 1/2
    CHECK(*v.exact == BigRat(1, 2));

    v = evaluate_bound(q("count_star", {{"i", 1}, {"r", 2}, {"t", 1}, {"l", 1}, {"q", 2}}));
    REQUIRE(v.exact);
    // 1 - 2^-1 - 2^-1 = 0
    CHECK(*v.exact == 0);
}

TEST_CASE("theorem4 enumeration sums exactly") {
    // d = 1: C(n,l) * (1/n) * (1-1/n)^(n-l) * x
    auto v = evaluate_bound(q("theorem4_enumeration", {{"n", 4}, {"l", 2}, {"d", 1}}, BigRat(3)));
    REQUIRE(v.exact);
    CHECK(*v.exact == BigRat(6) * BigRat(1, 4) * BigRat(9, 16) * 3);
}

TEST_CASE("log-only bounds carry the flag") {
    auto v = evaluate_bound(q("isd_exponent", {{"n", 20}, {"k", 10}, {"t", 2}}));
    CHECK(v.log_only);
    CHECK_FALSE(v.exact.has_value());

    v = evaluate_bound(q("remark2_complexity", {{"n", 110}, {"k", 7}, {"r", 1}, {"q", 2}}));
    CHECK(v.log_only);
    // ((n-k)^2/2) * q^((k(k-r)/2)(n-k)) with n=110,k=7,r=1: log2 >> 64
    CHECK(v.log2_value > 100.0);
}

TEST_CASE("key size in bits") {
    // k(n-k) m^2 log2(q), Table-2 shape
    auto v = evaluate_bound(q("key_size_bits", {{"n", 110}, {"k", 7}, {"m", 18}, {"q", 2}}));
    REQUIRE(v.exact);
    CHECK(*v.exact == BigRat(7 * 103 * 18 * 18));
}

TEST_CASE("combinatorial rank-metric work factor") {
    auto v = evaluate_bound(
        q("combinatorial_rank_isd", {{"n", 10}, {"k", 4}, {"m", 3}, {"q", 2}}));
    REQUIRE(v.exact);
    // (n-k)^3 m^3 q^((n-k) floor((k+1)m/n) - m) = 216 * 27 * 2^(6*1-3)
    CHECK(*v.exact == BigRat(216 * 27 * 8));
}

TEST_CASE("failure probability formula") {
    auto v = evaluate_bound(
        q("failure_probability_formula", {{"q", 2}, {"l_prime", 10}, {"w", 2}, {"r", 2}}));
    REQUIRE(v.exact);
    // exponent 10 - 8 + 1 = 3
    CHECK(*v.exact == BigRat(1, 8));
}

TEST_CASE("weight bound predicate") {
    CHECK(weight_bound_holds(12, 7, 2));       // 12 <= 2^21
    CHECK_FALSE(weight_bound_holds(3, 2, 2));  // 3 > 2^1
}
