#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "grasscode/matrix.hpp"
#include "grasscode/plabic.hpp"

namespace grasscode {

enum class Metric { Hamming, Grassmann };

std::string metric_name(Metric m);
Metric metric_from_name(const std::string& s);

// Generator/parity-check pair with a declared metric. The parity check may
// carry redundant rows (Gallager constructions are rank-deficient); its rank
// is always n - k.
struct LinearCode {
    std::size_t n = 0;
    std::size_t k = 0;
    FieldSpec field = FieldSpec::gf2();
    Metric metric = Metric::Hamming;
    FqMatrix generator;     // k x n, rank k
    FqMatrix parity_check;  // >= (n-k) rows x n, rank n-k
    std::uint32_t design_weight = 0;
    std::string provenance;  // graph file hash or construction seed

    void validate() const;
    // metric weight of a length-n vector over this code's field
    std::size_t weight(std::span<const FieldElem> x) const;
};

struct MooreSource {
    std::vector<FieldElem> seed;  // n elements of GF(q^m)
    std::size_t k = 0;
};

struct GrassmannCodeSpec {
    std::variant<PlabicGraph, MooreSource> source;
    FieldSpec field = FieldSpec::gf2();
    std::uint32_t design_weight = 0;
    std::string provenance;
};

// k x n Moore matrix: row j is the elementwise q^j-power image of g.
FqMatrix build_moore_generator(const std::vector<FieldElem>& g, std::size_t k, FieldSpec field);

LinearCode build_grassmann_code(const GrassmannCodeSpec& spec);

// Gallager column-permutation construction, deterministic under seed.
// Requires row_weight | n (block structure) and col_weight*n = row_weight*rows.
LinearCode build_ldpc(std::size_t n, std::size_t col_weight, std::size_t row_weight,
                      std::uint64_t seed);

// generator [I_k | a], parity check [a^T | I_{n-k}] (characteristic 2).
LinearCode lift_code(const FqMatrix& a);

// Random Moore seed resampled until the generator has rank k.
LinearCode build_moore_code(std::size_t n, std::size_t k, unsigned m, std::uint64_t seed,
                            std::uint32_t design_weight);

// Lifted code with a seeded random k x (n-k) block over GF(2^m).
LinearCode build_random_lifted_code(std::size_t n, std::size_t k, unsigned m, std::uint64_t seed,
                                    std::uint32_t design_weight, Metric metric);

// Rank over GF(2) of the m x n bit unfolding of x; Hamming weight when m = 1
// (the rank weight degenerates there).
std::size_t grassmann_weight(std::span<const FieldElem> x, const FieldSpec& field);

std::size_t metric_weight(std::span<const FieldElem> x, const FieldSpec& field, Metric metric);

struct MinWeightResult {
    std::size_t w_min = 0;
    std::vector<FieldElem> witness;
};

// Exhaustive scan over all nonzero codewords; guarded to q^{mk} <= 2^24.
MinWeightResult min_weight_bruteforce(const LinearCode& code, unsigned threads = 1);

// Code bundle serialization (.code.json).
std::string code_to_json(const LinearCode& code);
LinearCode code_from_json(const std::string& text);
void save_code(const LinearCode& code, const std::string& path);
LinearCode load_code(const std::string& path);

} // namespace grasscode
