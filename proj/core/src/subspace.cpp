#include "grasscode/subspace.hpp"

#include <cmath>

namespace grasscode {

double log2_of(const BigInt& x) {
    if (x <= 0) throw std::invalid_argument("log2 of non-positive value");
    const std::size_t bits = boost::multiprecision::msb(x);
    if (bits <= 512) return std::log2(x.convert_to<double>());
    // scale down by a power of two to stay in double range
    BigInt scaled = x >> (bits - 512);
    return std::log2(scaled.convert_to<double>()) + double(bits - 512);
}

double log2_of(const BigRat& x) {
    if (x <= 0) throw std::invalid_argument("log2 of non-positive value");
    return log2_of(boost::multiprecision::numerator(x)) -
           log2_of(boost::multiprecision::denominator(x));
}

BigInt big_pow(const BigInt& base, std::uint64_t e) {
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

BigRat q_pow(const BigInt& q, std::int64_t e) {
    if (e >= 0) return BigRat(big_pow(q, std::uint64_t(e)));
    return BigRat(1) / BigRat(big_pow(q, std::uint64_t(-e)));
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        r /= BigInt(i);
    }
    return r;
}

BigInt gaussian_binomial(std::int64_t n, std::int64_t k, const BigInt& q) {
    if (n < 0 || k < 0) throw std::invalid_argument("gaussian_binomial: negative argument");
    if (q < 2) throw std::invalid_argument("gaussian_binomial: q must be >= 2");
    if (k > n) return 0;
    BigInt num = 1, den = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        num *= big_pow(q, std::uint64_t(n)) - big_pow(q, std::uint64_t(i));
        den *= big_pow(q, std::uint64_t(k)) - big_pow(q, std::uint64_t(i));
    }
    return num / den;
}

BigInt pascal_identity_residual(std::int64_t n, std::int64_t k, const BigInt& q) {
    if (!(0 < k && k < n)) throw std::invalid_argument("pascal_identity_residual requires 0 < k < n");
    return gaussian_binomial(n, k, q) - gaussian_binomial(n - 1, k, q) -
           big_pow(q, std::uint64_t(n - k)) * gaussian_binomial(n - 1, k - 1, q);
}

BigInt sphere_size(std::int64_t n, std::int64_t m, const BigInt& q, std::int64_t t) {
    if (t < 0) throw std::invalid_argument("sphere_size: negative radius");
    if (t == 0) return 1;
    if (t > std::min(m, n)) return 0;
    BigInt num = 1, den = 1;
    for (std::int64_t j = 0; j < t; ++j) {
        num *= (big_pow(q, std::uint64_t(n)) - big_pow(q, std::uint64_t(j))) *
               (big_pow(q, std::uint64_t(m)) - big_pow(q, std::uint64_t(j)));
        den *= big_pow(q, std::uint64_t(t)) - big_pow(q, std::uint64_t(j));
    }
    return num / den;
}

BigInt ball_volume(std::int64_t n, std::int64_t m, const BigInt& q, std::int64_t t) {
    BigInt b = 0;
    for (std::int64_t i = 0; i <= t; ++i) b += sphere_size(n, m, q, i);
    return b;
}

std::int64_t gv_radius(std::int64_t n, std::int64_t k, std::int64_t m, const BigInt& q) {
    if (k < 0 || k > n) throw std::invalid_argument("gv_radius requires 0 <= k <= n");
    const BigInt threshold = big_pow(q, std::uint64_t(m) * std::uint64_t(n - k));
    BigInt ball = 0;
    for (std::int64_t t = 0; t <= std::min(m, n); ++t) {
        ball += sphere_size(n, m, q, t);
        if (ball >= threshold) return t;
    }
    throw unsatisfiable_error("gv_radius: ball volume never reaches q^(m(n-k)) within radius min(m,n)");
}

BigRat prange_success_probability(std::int64_t n, std::int64_t k, std::int64_t t) {
    if (n < 0 || k < 0 || t < 0 || k > n) throw std::invalid_argument("prange_success_probability: bad arguments");
    if (t > n - k) return 0;
    return BigRat(binomial(std::uint64_t(n - k), std::uint64_t(t)),
                  binomial(std::uint64_t(n), std::uint64_t(t)));
}

SubspaceBasis::SubspaceBasis(std::size_t ambient, FqMatrix rows_in)
    : ambient_dim(ambient), vectors(std::move(rows_in)) {
    if (vectors.cols() != ambient_dim)
        throw std::invalid_argument("basis vectors do not match ambient dimension");
    if (rank(vectors) != vectors.rows())
        throw std::invalid_argument("basis rows are not linearly independent");
}

std::size_t subspace_distance(const SubspaceBasis& u, const SubspaceBasis& v) {
    if (u.ambient_dim != v.ambient_dim || !(u.vectors.field() == v.vectors.field()))
        throw std::invalid_argument("subspace_distance: ambient space mismatch");
    // stack the bases; rank gives dim(U+V), and
    // dim(U∩V) = dim U + dim V - dim(U+V)
    FqMatrix stacked(u.dim() + v.dim(), u.ambient_dim, u.vectors.field());
    for (std::size_t r = 0; r < u.dim(); ++r)
        for (std::size_t c = 0; c < u.ambient_dim; ++c) stacked.at(r, c) = u.vectors.at(r, c);
    for (std::size_t r = 0; r < v.dim(); ++r)
        for (std::size_t c = 0; c < v.ambient_dim; ++c)
            stacked.at(u.dim() + r, c) = v.vectors.at(r, c);
    const std::size_t sum_dim = rank(stacked);
    const std::size_t inter = u.dim() + v.dim() - sum_dim;
    return u.dim() + v.dim() - 2 * inter;
}

} // namespace grasscode
