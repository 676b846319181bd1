#include "grasscode/bounds.hpp"

#include <cmath>

namespace grasscode {

namespace {

std::int64_t need(const BoundQuery& q, const std::string& name) {
    auto it = q.params.find(name);
    if (it == q.params.end())
        throw std::invalid_argument("bound '" + q.bound_id + "' is missing parameter '" + name + "'");
    if (it->second < 0)
        throw std::invalid_argument("parameter '" + name + "' must be non-negative");
    return it->second;
}

BigRat need_x(const BoundQuery& q) {
    if (!q.x) throw std::invalid_argument("bound '" + q.bound_id + "' is missing parameter 'x'");
    return *q.x;
}

BoundValue exact_value(BigRat v, std::string note = {}) {
    BoundValue b;
    b.log2_value = v > 0 ? log2_of(v) : (v == 0 ? -std::numeric_limits<double>::infinity()
                                                : std::numeric_limits<double>::quiet_NaN());
    b.exact = std::move(v);
    b.note = std::move(note);
    return b;
}

BoundValue log_value(double lg, std::string note = {}) {
    BoundValue b;
    b.log2_value = lg;
    b.log_only = true;
    b.note = std::move(note);
    return b;
}

double h2(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

} // namespace

const std::vector<CatalogEntry>& bounds_catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"combinatorial_rank_isd", "(n-k)^3 m^3 q^((n-k)*floor((k+1)m/n) - m)", {"n", "k", "m", "q"}},
        {"key_size_bits", "k(n-k) m^2 log2(q)", {"n", "k", "m", "q"}},
        {"isd_exponent", "2^(n H2(t/n) - (1-k) H2(t/(n-k))), reported as log2", {"n", "k", "t"}},
        {"simple_code_failure", "1 / q^(m-w+1)", {"q", "m", "w"}},
        {"prop2_bound", "q^(n-k) * prod_{i=0}^{k-1} q (q^(n-i)-1)/(q^(i+1)-1)", {"n", "k", "q"}},
        {"intersection_array", "q^(i(i-1)/2) * gauss(m, i, q)", {"i", "m", "q"}},
        {"corollary1_prob", "1 - k1 q^(k1 k2) / q^m", {"k1", "k2", "m", "q"}},
        {"theorem2_prob", "1 - k2 q^(2 k1 k2^2 + k2(k2+1)) / q^m", {"k1", "k2", "m", "q"}},
        {"count_u", "prod_{j=0}^{i-1} q^j", {"i", "q"}},
        {"count_v", "prod_{j=0}^{i-1} (q^j - q^(j-r))", {"i", "r", "q"}},
        {"count_star", "prod_{j=0}^{i-1} (q^j - q^(j-r+t) - q^(j-r+l))", {"i", "r", "t", "l", "q"}},
        {"guess_probability", "gauss(n-r, k-r, q) / gauss(k, r, q)", {"n", "k", "r", "q"}},
        {"remark2_complexity", "((n-k)^2 / 2) q^((k(k-r)/2)(n-k)), reported as log2", {"n", "k", "r", "q"}},
        {"theorem4_enumeration", "sum_{a=1}^{d} C(n,l) (a/n)^d (1-a/n)^(n-l) x^d", {"n", "l", "d"}},
        {"gaussian_decomposition_cost", "(n-k) k^2 / 2", {"n", "k"}},
        {"failure_probability_formula", "1 / q^(l_prime - 2 w r + 1)", {"q", "l_prime", "w", "r"}},
    };
    return entries;
}

BoundValue evaluate_bound(const BoundQuery& query) {
    const std::string& id = query.bound_id;

    if (id == "combinatorial_rank_isd") {
        const std::int64_t n = need(query, "n"), k = need(query, "k"), m = need(query, "m");
        const BigInt q(need(query, "q"));
        if (n == 0) throw std::invalid_argument("n must be positive");
        const std::int64_t inner = ((k + 1) * m) / n;  // floor
        const std::int64_t expo = (n - k) * inner - m;
        BigRat v = BigRat(BigInt(n - k) * BigInt(n - k) * BigInt(n - k)) *
                   BigRat(BigInt(m) * BigInt(m) * BigInt(m)) * q_pow(q, expo);
        return exact_value(std::move(v));
    }
    if (id == "key_size_bits") {
        const std::int64_t n = need(query, "n"), k = need(query, "k"), m = need(query, "m");
        const std::int64_t q = need(query, "q");
        const BigRat base = BigRat(BigInt(k) * BigInt(n - k) * BigInt(m) * BigInt(m));
        // exact only when q is a power of two
        if (q >= 2 && (q & (q - 1)) == 0) {
            std::int64_t lg = 0;
            for (std::int64_t t = q; t > 1; t >>= 1) ++lg;
            return exact_value(base * BigRat(lg));
        }
        return log_value(log2_of(base) + std::log2(std::log2(double(q))), "non power-of-two q");
    }
    if (id == "isd_exponent") {
        const std::int64_t n = need(query, "n"), k = need(query, "k"), t = need(query, "t");
        if (n == 0 || n == k) throw std::invalid_argument("need n > 0 and n != k");
        const double lg = double(n) * h2(double(t) / double(n)) -
                          (1.0 - double(k)) * h2(double(t) / double(n - k));
        return log_value(lg);
    }
    if (id == "simple_code_failure") {
        const BigInt q(need(query, "q"));
        const std::int64_t m = need(query, "m"), w = need(query, "w");
        return exact_value(BigRat(1) / q_pow(q, m - w + 1));
    }
    if (id == "prop2_bound") {
        const std::int64_t n = need(query, "n"), k = need(query, "k");
        const BigInt q(need(query, "q"));
        if (k > n) throw std::invalid_argument("prop2_bound requires k <= n");
        BigRat prod = 1;
        for (std::int64_t i = 0; i < k; ++i) {
            prod *= BigRat(q) * BigRat(big_pow(q, std::uint64_t(n - i)) - 1,
                                       big_pow(q, std::uint64_t(i + 1)) - 1);
        }
        return exact_value(q_pow(q, n - k) * prod);
    }
    if (id == "intersection_array") {
        const std::int64_t i = need(query, "i"), m = need(query, "m");
        const BigInt q(need(query, "q"));
        const BigInt v = big_pow(q, std::uint64_t(i) * std::uint64_t(i - 1) / 2) *
                         gaussian_binomial(m, i, q);
        return exact_value(BigRat(v));
    }
    if (id == "corollary1_prob") {
        const std::int64_t k1 = need(query, "k1"), k2 = need(query, "k2"), m = need(query, "m");
        const BigInt q(need(query, "q"));
        BigRat v = BigRat(1) - BigRat(k1) * q_pow(q, k1 * k2 - m);
        std::string note = v < 0 ? "negative: bound vacuous for these parameters" : "";
        return exact_value(std::move(v), std::move(note));
    }
    if (id == "theorem2_prob") {
        const std::int64_t k1 = need(query, "k1"), k2 = need(query, "k2"), m = need(query, "m");
        const BigInt q(need(query, "q"));
        const std::int64_t expo = 2 * k1 * k2 * k2 + k2 * (k2 + 1) - m;
        BigRat v = BigRat(1) - BigRat(k2) * q_pow(q, expo);
        std::string note = v < 0 ? "negative: bound vacuous for these parameters" : "";
        return exact_value(std::move(v), std::move(note));
    }
    if (id == "count_u") {
        const std::int64_t i = need(query, "i");
        const BigInt q(need(query, "q"));
        return exact_value(BigRat(big_pow(q, std::uint64_t(i) * std::uint64_t(i - 1) / 2)));
    }
    if (id == "count_v") {
        const std::int64_t i = need(query, "i"), r = need(query, "r");
        const BigInt q(need(query, "q"));
        BigRat prod = 1;
        for (std::int64_t j = 0; j < i; ++j) prod *= q_pow(q, j) - q_pow(q, j - r);
        return exact_value(std::move(prod));
    }
    if (id == "count_star") {
        const std::int64_t i = need(query, "i"), r = need(query, "r");
        const std::int64_t t = need(query, "t"), l = need(query, "l");
        const BigInt q(need(query, "q"));
        BigRat prod = 1;
        for (std::int64_t j = 0; j < i; ++j)
            prod *= q_pow(q, j) - q_pow(q, j - r + t) - q_pow(q, j - r + l);
        return exact_value(std::move(prod));
    }
    if (id == "guess_probability") {
        const std::int64_t n = need(query, "n"), k = need(query, "k"), r = need(query, "r");
        const BigInt q(need(query, "q"));
        const BigInt den = gaussian_binomial(k, r, q);
        if (den == 0) throw std::invalid_argument("guess_probability: gauss(k, r, q) is zero");
        BigRat v(gaussian_binomial(n - r, k - r, q), den);
        std::string note = v > 1 ? "ratio exceeds 1; raw value reported" : "";
        return exact_value(std::move(v), std::move(note));
    }
    if (id == "remark2_complexity") {
        const std::int64_t n = need(query, "n"), k = need(query, "k"), r = need(query, "r");
        const std::int64_t q = need(query, "q");
        if (n <= k) throw std::invalid_argument("remark2_complexity requires n > k");
        const double lg = std::log2(double(n - k) * double(n - k) / 2.0) +
                          (double(k) * double(k - r) / 2.0) * double(n - k) * std::log2(double(q));
        return log_value(lg);
    }
    if (id == "theorem4_enumeration") {
        const std::int64_t n = need(query, "n"), l = need(query, "l"), d = need(query, "d");
        const BigRat x = need_x(query);
        if (n == 0 || l > n) throw std::invalid_argument("theorem4_enumeration requires 0 < n, l <= n");
        BigRat sum = 0;
        const BigInt cnl = binomial(std::uint64_t(n), std::uint64_t(l));
        BigRat xd = 1;
        for (std::int64_t j = 0; j < d; ++j) xd *= x;
        for (std::int64_t a = 1; a <= d; ++a) {
            BigRat ratio(a, n);
            BigRat term(cnl);
            for (std::int64_t j = 0; j < d; ++j) term *= ratio;
            BigRat rem = BigRat(1) - ratio;
            for (std::int64_t j = 0; j < n - l; ++j) term *= rem;
            sum += term * xd;
        }
        return exact_value(std::move(sum));
    }
    if (id == "gaussian_decomposition_cost") {
        const std::int64_t n = need(query, "n"), k = need(query, "k");
        return exact_value(BigRat(BigInt(n - k) * BigInt(k) * BigInt(k), 2));
    }
    if (id == "failure_probability_formula") {
        const BigInt q(need(query, "q"));
        const std::int64_t lp = need(query, "l_prime"), w = need(query, "w"), r = need(query, "r");
        return exact_value(BigRat(1) / q_pow(q, lp - 2 * w * r + 1));
    }
    throw std::invalid_argument("unknown bound id: " + id);
}

bool weight_bound_holds(std::int64_t w, std::int64_t k, const BigInt& q) {
    return BigInt(w) <= big_pow(q, std::uint64_t(k) * std::uint64_t(k - 1) / 2);
}

} // namespace grasscode
