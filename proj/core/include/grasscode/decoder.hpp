#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "grasscode/codes.hpp"
#include "grasscode/matrix.hpp"

namespace grasscode {

struct DecoderConfig {
    std::uint64_t max_iterations = 1;  // T
    std::size_t l = 0;                 // overlap / window parameter
    std::size_t p = 0;                 // birthday half-weight
    std::uint64_t rng_seed = 0;
    bool uniform_subsets = false;      // plucker: uniform instead of cyclic-interval windows

    void validate(std::size_t n, std::size_t k) const;
};

struct DecodeOutcome {
    bool success = false;
    std::vector<FieldElem> error_vector;  // present iff success
    std::uint64_t iterations_used = 0;
    std::uint64_t row_ops = 0;
    std::size_t weight_found = 0;
    std::string accept_branch;        // plucker: "strict" or "fallback"
    std::uint64_t tau_rejections = 0; // plucker: resampled boundary-map instances
    std::uint64_t collision_table_size = 0;  // birthday: half-sum entries per iteration
};

// H x^T = s, with x a row vector. The convention is fixed artifact-wide.
bool syndrome_check(const FqMatrix& h, std::span<const FieldElem> x,
                    std::span<const FieldElem> s);

// Plain information-set decoding: per iteration draw a uniform column
// permutation, reduce, and accept when the pivot columns absorb the syndrome
// within weight w.
DecodeOutcome prange_isd(const FqMatrix& h, std::span<const FieldElem> s, std::size_t w,
                         const DecoderConfig& config);

// Stern-style collision variant: weight-p half-sums over the split information
// set are matched on an l-bit window before extension. p = 0 degenerates to
// prange_isd with identical outcomes under the same seed.
DecodeOutcome birthday_isd(const FqMatrix& h, std::span<const FieldElem> s, std::size_t w,
                           const DecoderConfig& config);

// Pluecker-coordinate decoding: per iteration a validated boundary-map
// instance (column permutation with nonvanishing leading minor), reduction to
// the split echelon shape, a pivot-absorbed base candidate, and cyclic-window
// candidates gated on nonzero Pluecker coordinates. Acceptance weight uses the
// code's metric and the threshold max(0, w-n+k-1) when non-negative, else w.
DecodeOutcome plucker_decode(const LinearCode& code, std::span<const FieldElem> s, std::size_t w,
                             const DecoderConfig& config);

// Gallager-B syndrome bit flipping for the LDPC baseline. row_ops counts
// parity-row evaluations. max_iterations is the sweep cap (50 in the harness).
DecodeOutcome gallager_b(const FqMatrix& h, std::span<const FieldElem> s, std::size_t w,
                         const DecoderConfig& config);

// Block consistency report for the split echelon system
//   [ H'   I^l   0         ] x^T = s'
//   [ H''  0     I^(n-k-l) ] x^T = s''
// with x laid out as (information block x', pivot blocks x''_1, x''_2).
struct TransformReport {
    bool consistent = false;
    std::vector<FieldElem> residual_prime;   // H' x'^T + x''_1 - s'
    std::vector<FieldElem> residual_dprime;  // H'' x'^T + x''_2 - s''
};

TransformReport correctness_transform(const FqMatrix& h_prime, const FqMatrix& h_dprime,
                                      std::span<const FieldElem> x,
                                      std::span<const FieldElem> s_prime,
                                      std::span<const FieldElem> s_dprime);

} // namespace grasscode
