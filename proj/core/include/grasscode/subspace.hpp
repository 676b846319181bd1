#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "grasscode/matrix.hpp"

namespace grasscode {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// log2 of a positive rational, usable far beyond double range.
double log2_of(const BigRat& x);
double log2_of(const BigInt& x);

BigInt big_pow(const BigInt& base, std::uint64_t e);

// q^e with possibly negative exponent.
BigRat q_pow(const BigInt& q, std::int64_t e);

// Exact binomial coefficient C(n, k) via the multiplicative formula.
BigInt binomial(std::uint64_t n, std::uint64_t k);

// Number of k-dimensional subspaces of GF(q)^n. k > n yields 0.
BigInt gaussian_binomial(std::int64_t n, std::int64_t k, const BigInt& q);

// gaussian(n,k) - gaussian(n-1,k) - q^(n-k) * gaussian(n-1,k-1); always 0.
BigInt pascal_identity_residual(std::int64_t n, std::int64_t k, const BigInt& q);

// Number of m x n matrices over GF(q) of rank exactly t. t > min(m,n) yields 0.
BigInt sphere_size(std::int64_t n, std::int64_t m, const BigInt& q, std::int64_t t);

// Sum of sphere sizes for radii 0..t.
BigInt ball_volume(std::int64_t n, std::int64_t m, const BigInt& q, std::int64_t t);

// Smallest t with ball_volume(n,m,q,t) >= q^(m(n-k)); throws unsatisfiable
// when no t <= min(m,n) reaches the threshold.
std::int64_t gv_radius(std::int64_t n, std::int64_t k, std::int64_t m, const BigInt& q);

// Single-iteration information-set success probability C(n-k,t)/C(n,t);
// 0 when t > n-k.
BigRat prange_success_probability(std::int64_t n, std::int64_t k, std::int64_t t);

// Row span of `vectors` inside GF(q^m)^ambient_dim.
struct SubspaceBasis {
    std::size_t ambient_dim = 0;
    FqMatrix vectors;

    SubspaceBasis(std::size_t ambient, FqMatrix rows);
    std::size_t dim() const { return vectors.rows(); }
};

// dim U + dim V - 2 dim(U intersect V).
std::size_t subspace_distance(const SubspaceBasis& u, const SubspaceBasis& v);

} // namespace grasscode
