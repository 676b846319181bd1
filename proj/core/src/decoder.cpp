#include "grasscode/decoder.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "grasscode/rng.hpp"

namespace grasscode {

void DecoderConfig::validate(std::size_t n, std::size_t k) const {
    if (max_iterations < 1) throw std::invalid_argument("T must be >= 1");
    if (l > n - k) throw std::invalid_argument("l must be <= n-k");
}

bool syndrome_check(const FqMatrix& h, std::span<const FieldElem> x,
                    std::span<const FieldElem> s) {
    if (x.size() != h.cols() || s.size() != h.rows())
        throw std::invalid_argument("syndrome_check: dimension mismatch");
    std::vector<FieldElem> y = mat_vec_mul(h, x);
    return std::equal(y.begin(), y.end(), s.begin());
}

namespace {

// Permute columns of h and append the syndrome as an extra column.
FqMatrix permuted_augmented(const FqMatrix& h, std::span<const FieldElem> s,
                            const std::vector<std::size_t>& perm) {
    FqMatrix a(h.rows(), h.cols() + 1, h.field());
    for (std::size_t r = 0; r < h.rows(); ++r) {
        for (std::size_t c = 0; c < h.cols(); ++c) a.at(r, c) = h.at(r, perm[c]);
        a.at(r, h.cols()) = s[r];
    }
    return a;
}

// column order visiting the matrix columns first and the syndrome column last;
// a pivot landing on the syndrome column means the syndrome is outside the
// column span for this permutation.
std::vector<std::size_t> augmented_order(std::size_t n) {
    std::vector<std::size_t> o(n + 1);
    std::iota(o.begin(), o.end(), std::size_t(0));
    return o;
}

struct ReducedSystem {
    RrefResult rr;
    std::vector<FieldElem> reduced_syndrome;  // augmented column at pivot rows
    bool solvable = false;                    // no pivot on the syndrome column
    std::size_t matrix_rank = 0;              // pivots on matrix columns
};

ReducedSystem reduce(const FqMatrix& h, std::span<const FieldElem> s,
                     const std::vector<std::size_t>& perm,
                     const std::vector<std::size_t>& column_order) {
    FqMatrix aug = permuted_augmented(h, s, perm);
    ReducedSystem sys;
    sys.rr = rref(aug, column_order);
    sys.solvable = true;
    for (std::size_t c : sys.rr.pivots)
        if (c == h.cols()) sys.solvable = false;
    sys.matrix_rank = sys.rr.pivots.size() - (sys.solvable ? 0 : 1);
    if (sys.solvable) {
        sys.reduced_syndrome.resize(sys.rr.rank);
        for (std::size_t i = 0; i < sys.rr.rank; ++i)
            sys.reduced_syndrome[i] = sys.rr.reduced.at(i, h.cols());
    }
    return sys;
}

DecodeOutcome finish_success(const FqMatrix& h, std::span<const FieldElem> s,
                             std::vector<FieldElem> x, std::size_t w, DecodeOutcome out) {
    if (!syndrome_check(h, x, s))
        throw std::logic_error("internal: accepted candidate fails the syndrome check");
    out.success = true;
    out.weight_found = hamming_weight(x);
    if (out.weight_found > w)
        throw std::logic_error("internal: accepted candidate exceeds the weight budget");
    out.error_vector = std::move(x);
    return out;
}

} // namespace

DecodeOutcome prange_isd(const FqMatrix& h, std::span<const FieldElem> s, std::size_t w,
                         const DecoderConfig& config) {
    const std::size_t n = h.cols();
    const std::size_t k = n - h.rows();
    if (w > n) throw std::invalid_argument("w must be <= n");
    config.validate(n, k);
    if (s.size() != h.rows()) throw std::invalid_argument("syndrome length mismatch");

    Rng rng(config.rng_seed);
    const std::vector<std::size_t> order = augmented_order(n);
    DecodeOutcome out;

    for (std::uint64_t it = 1; it <= config.max_iterations; ++it) {
        out.iterations_used = it;
        std::vector<std::size_t> perm = rng.permutation(n);
        ReducedSystem sys = reduce(h, s, perm, order);
        out.row_ops += sys.rr.ops.total();
        if (!sys.solvable) continue;

        std::size_t weight = hamming_weight(sys.reduced_syndrome);
        if (weight > w) continue;

        std::vector<FieldElem> x(n, 0);
        for (std::size_t i = 0; i < sys.rr.pivots.size(); ++i)
            x[perm[sys.rr.pivots[i]]] = sys.reduced_syndrome[i];
        return finish_success(h, s, std::move(x), w, std::move(out));
    }
    out.iterations_used = config.max_iterations;
    return out;
}

DecodeOutcome birthday_isd(const FqMatrix& h, std::span<const FieldElem> s, std::size_t w,
                           const DecoderConfig& config) {
    const std::size_t n = h.cols();
    const std::size_t k = n - h.rows();
    config.validate(n, k);
    if (config.p > w) throw std::invalid_argument("p must be <= w");
    if (s.size() != h.rows()) throw std::invalid_argument("syndrome length mismatch");
    // p = 0 collapses to plain information-set decoding; the window filter is
    // vacuous so outcomes match prange_isd under the same seed.
    const std::size_t p = config.p;
    const std::size_t win = p == 0 ? 0 : std::min(config.l, n - k);

    Gf gf(h.field());
    const std::uint64_t field_order = h.field().order();
    Rng rng(config.rng_seed);
    const std::vector<std::size_t> order = augmented_order(n);
    DecodeOutcome out;

    for (std::uint64_t it = 1; it <= config.max_iterations; ++it) {
        out.iterations_used = it;
        std::vector<std::size_t> perm = rng.permutation(n);
        ReducedSystem sys = reduce(h, s, perm, order);
        out.row_ops += sys.rr.ops.total();
        if (!sys.solvable) continue;

        const std::size_t rk = sys.rr.rank;
        // base candidate, identical to prange
        if (hamming_weight(sys.reduced_syndrome) <= w) {
            std::vector<FieldElem> x(n, 0);
            for (std::size_t i = 0; i < rk; ++i)
                x[perm[sys.rr.pivots[i]]] = sys.reduced_syndrome[i];
            return finish_success(h, s, std::move(x), w, std::move(out));
        }
        if (p == 0) continue;

        // information set = non-pivot columns, split into halves
        std::vector<bool> is_pivot(n, false);
        for (std::size_t c : sys.rr.pivots) is_pivot[c] = true;
        std::vector<std::size_t> info;
        for (std::size_t c = 0; c < n; ++c)
            if (!is_pivot[c]) info.push_back(c);
        const std::size_t half = (info.size() + 1) / 2;
        std::vector<std::size_t> left(info.begin(), info.begin() + half);
        std::vector<std::size_t> right(info.begin() + half, info.end());

        const std::size_t wlo = rk >= win ? rk - win : 0;  // window rows [wlo, rk)

        // enumerate weight-p combinations with nonzero coefficients
        struct Entry {
            std::vector<std::size_t> cols;
            std::vector<FieldElem> coeffs;
        };
        auto enumerate = [&](const std::vector<std::size_t>& side, auto&& emit) {
            if (side.size() < p) return;
            std::vector<std::size_t> idx(p);
            std::iota(idx.begin(), idx.end(), std::size_t(0));
            std::vector<FieldElem> coeffs(p, 1);
            for (;;) {
                // all (q-1)^p coefficient patterns
                std::vector<std::size_t> digit(p, 0);
                for (;;) {
                    for (std::size_t i = 0; i < p; ++i) coeffs[i] = FieldElem(digit[i] + 1);
                    std::vector<std::size_t> cols(p);
                    for (std::size_t i = 0; i < p; ++i) cols[i] = side[idx[i]];
                    emit(cols, coeffs);
                    std::size_t d = 0;
                    while (d < p && digit[d] + 2 == field_order) digit[d++] = 0;
                    if (d == p) break;
                    ++digit[d];
                }
                // next combination
                std::size_t i = p;
                bool more = false;
                while (i-- > 0) {
                    if (idx[i] != i + side.size() - p) {
                        ++idx[i];
                        for (std::size_t j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
                        more = true;
                        break;
                    }
                }
                if (!more) break;
            }
        };

        auto window_sum = [&](const std::vector<std::size_t>& cols,
                              const std::vector<FieldElem>& coeffs) {
            std::vector<FieldElem> key(rk - wlo, 0);
            for (std::size_t i = 0; i < cols.size(); ++i)
                for (std::size_t r = wlo; r < rk; ++r)
                    key[r - wlo] =
                        Gf::add(key[r - wlo], gf.mul(coeffs[i], sys.rr.reduced.at(r, cols[i])));
            return key;
        };

        std::map<std::vector<FieldElem>, std::vector<Entry>> table;
        out.collision_table_size = 0;
        enumerate(left, [&](const std::vector<std::size_t>& cols,
                            const std::vector<FieldElem>& coeffs) {
            table[window_sum(cols, coeffs)].push_back(Entry{cols, coeffs});
            ++out.collision_table_size;
        });

        DecodeOutcome found;
        bool have = false;
        enumerate(right, [&](const std::vector<std::size_t>& cols,
                             const std::vector<FieldElem>& coeffs) {
            if (have) return;
            std::vector<FieldElem> want = window_sum(cols, coeffs);
            for (std::size_t r = wlo; r < rk; ++r)
                want[r - wlo] = Gf::sub(sys.reduced_syndrome[r], want[r - wlo]);
            auto hit = table.find(want);
            if (hit == table.end()) return;
            for (const Entry& e : hit->second) {
                // residual after removing both half-sums
                std::vector<FieldElem> resid = sys.reduced_syndrome;
                auto subtract = [&](const std::vector<std::size_t>& cc,
                                    const std::vector<FieldElem>& ff) {
                    for (std::size_t i = 0; i < cc.size(); ++i)
                        for (std::size_t r = 0; r < rk; ++r)
                            resid[r] = Gf::sub(resid[r],
                                               gf.mul(ff[i], sys.rr.reduced.at(r, cc[i])));
                };
                subtract(e.cols, e.coeffs);
                subtract(cols, coeffs);
                const std::size_t weight = 2 * p + hamming_weight(resid);
                if (weight > w) continue;
                std::vector<FieldElem> x(n, 0);
                for (std::size_t i = 0; i < p; ++i) x[perm[e.cols[i]]] = e.coeffs[i];
                for (std::size_t i = 0; i < p; ++i) x[perm[cols[i]]] = coeffs[i];
                for (std::size_t i = 0; i < rk; ++i)
                    x[perm[sys.rr.pivots[i]]] = Gf::add(x[perm[sys.rr.pivots[i]]], resid[i]);
                found = finish_success(h, s, std::move(x), w, out);
                have = true;
                return;
            }
        });
        if (have) return found;
    }
    out.iterations_used = config.max_iterations;
    return out;
}

DecodeOutcome plucker_decode(const LinearCode& code, std::span<const FieldElem> s, std::size_t w,
                             const DecoderConfig& config) {
    const std::size_t n = code.n;
    const std::size_t k = code.k;
    const FqMatrix& h = code.parity_check;
    config.validate(n, k);
    if (s.size() != h.rows()) throw std::invalid_argument("syndrome length mismatch");
    if (rank(code.generator) != k) throw degenerate_code_error("generator is rank-deficient");

    const std::size_t nk = n - k;
    Gf gf(code.field);
    Rng rng(config.rng_seed);

    // column order: pivot on the last n-k permuted columns first, so a valid
    // reduction certifies the leading k x k Pluecker coordinate of the
    // permuted generator (complementary minor duality). Syndrome column last.
    std::vector<std::size_t> order(n + 1);
    for (std::size_t i = 0; i < nk; ++i) order[i] = k + i;
    for (std::size_t i = 0; i < k; ++i) order[nk + i] = i;
    order[n] = n;

    const std::int64_t strict_bound =
        std::int64_t(w) - std::int64_t(n) + std::int64_t(k) - 1;
    const bool strict = strict_bound >= 0;
    const std::size_t threshold = strict ? std::size_t(strict_bound) : w;

    DecodeOutcome out;
    out.accept_branch = strict ? "strict" : "fallback";
    std::size_t best_weight = SIZE_MAX;

    const std::size_t window_len = std::min(k + config.l, n);

    for (std::uint64_t it = 1; it <= config.max_iterations; ++it) {
        out.iterations_used = it;

        // boundary-map instance: the leading generator minor must not vanish,
        // i.e. the complementary parity-check block is invertible. The check
        // is a coordinate test, separate from the counted decomposition work.
        std::vector<std::size_t> perm;
        bool valid = false;
        for (int attempt = 0; attempt < 256 && !valid; ++attempt) {
            perm = rng.permutation(n);
            FqMatrix block(nk, nk, h.field());
            for (std::size_t r = 0; r < nk; ++r)
                for (std::size_t c = 0; c < nk; ++c) block.at(r, c) = h.at(r, perm[k + c]);
            valid = determinant(block) != 0;
            if (!valid) ++out.tau_rejections;
        }
        if (!valid)
            throw degenerate_code_error("no valid boundary-map instance after 256 resamples");
        ReducedSystem sys = reduce(h, s, perm, order);
        out.row_ops += sys.rr.ops.total();
        if (!sys.solvable) continue;

        auto accept = [&](std::vector<FieldElem> cand_permuted) -> bool {
            std::vector<FieldElem> x(n, 0);
            for (std::size_t j = 0; j < n; ++j) x[perm[j]] = cand_permuted[j];
            const std::size_t weight = code.weight(x);
            best_weight = std::min(best_weight, weight);
            if (weight > threshold) return false;
            if (!syndrome_check(h, x, s)) return false;
            out.success = true;
            out.weight_found = weight;
            out.error_vector = std::move(x);
            return true;
        };

        // pivot-absorbed base candidate
        std::vector<FieldElem> base(n, 0);
        for (std::size_t i = 0; i < sys.rr.pivots.size(); ++i)
            base[sys.rr.pivots[i]] = sys.reduced_syndrome[i];
        if (accept(base)) return out;

        // cyclic window of size k+l over the permuted columns; candidates flip
        // one information coordinate whose swapped-in Pluecker coordinate is
        // nonzero (the coordinate reduces to one reduced-matrix entry).
        const std::size_t start = config.uniform_subsets
                                      ? std::size_t(rng.below(n))
                                      : std::size_t((it - 1) % n);
        for (std::size_t off = 0; off < window_len; ++off) {
            const std::size_t c = (start + off) % n;
            if (c >= k) continue;  // only information columns carry flips
            const std::size_t partner_row = (std::size_t(it - 1) + c) % nk;
            if (sys.rr.reduced.at(partner_row, c) == 0) continue;  // vanishing coordinate

            // candidate coefficients: ratios that cancel one residual row
            std::vector<FieldElem> tried;
            for (std::size_t r = 0; r < nk; ++r) {
                const FieldElem hrc = sys.rr.reduced.at(r, c);
                if (hrc == 0 || sys.reduced_syndrome[r] == 0) continue;
                const FieldElem lambda = gf.div(sys.reduced_syndrome[r], hrc);
                if (std::find(tried.begin(), tried.end(), lambda) != tried.end()) continue;
                tried.push_back(lambda);
                std::vector<FieldElem> cand(n, 0);
                cand[c] = lambda;
                for (std::size_t i = 0; i < nk; ++i) {
                    const std::size_t pc = sys.rr.pivots[i];
                    cand[pc] = Gf::sub(sys.reduced_syndrome[i],
                                       gf.mul(lambda, sys.rr.reduced.at(i, c)));
                }
                if (accept(cand)) return out;
            }
        }
    }
    out.iterations_used = config.max_iterations;
    out.weight_found = best_weight == SIZE_MAX ? 0 : best_weight;
    return out;
}

DecodeOutcome gallager_b(const FqMatrix& h, std::span<const FieldElem> s, std::size_t w,
                         const DecoderConfig& config) {
    if (h.field().m != 1) throw std::invalid_argument("gallager_b operates over GF(2)");
    if (s.size() != h.rows()) throw std::invalid_argument("syndrome length mismatch");
    const std::size_t n = h.cols();
    const std::size_t rows = h.rows();

    // column adjacency and per-column degree
    std::vector<std::vector<std::size_t>> checks_of(n);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (h.at(r, c)) checks_of[c].push_back(r);

    DecodeOutcome out;
    std::vector<FieldElem> x(n, 0);
    std::vector<FieldElem> resid(s.begin(), s.end());

    for (std::uint64_t sweep = 1; sweep <= config.max_iterations; ++sweep) {
        out.iterations_used = sweep;
        if (hamming_weight(resid) == 0) break;
        out.row_ops += rows;  // one evaluation of every parity row per sweep

        // flip the variables with the most unsatisfied checks, provided they
        // reach a strict majority of their own checks
        std::vector<std::size_t> unsat(n, 0);
        std::size_t peak = 0;
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t r : checks_of[c])
                if (resid[r]) ++unsat[c];
            if (!checks_of[c].empty() && 2 * unsat[c] > checks_of[c].size())
                peak = std::max(peak, unsat[c]);
        }
        std::vector<std::size_t> flips;
        for (std::size_t c = 0; c < n; ++c)
            if (!checks_of[c].empty() && unsat[c] == peak && 2 * unsat[c] > checks_of[c].size())
                flips.push_back(c);
        if (peak == 0 || flips.empty()) break;  // stuck
        for (std::size_t c : flips) x[c] ^= 1;
        std::vector<FieldElem> y = mat_vec_mul(h, x);
        for (std::size_t r = 0; r < rows; ++r) resid[r] = Gf::sub(s[r], y[r]);
    }

    out.weight_found = hamming_weight(x);
    if (hamming_weight(resid) == 0 && out.weight_found <= w) {
        if (!syndrome_check(h, x, s))
            throw std::logic_error("internal: converged state fails the syndrome check");
        out.success = true;
        out.error_vector = std::move(x);
    }
    return out;
}

TransformReport correctness_transform(const FqMatrix& h_prime, const FqMatrix& h_dprime,
                                      std::span<const FieldElem> x,
                                      std::span<const FieldElem> s_prime,
                                      std::span<const FieldElem> s_dprime) {
    const std::size_t l = h_prime.rows();
    const std::size_t rest = h_dprime.rows();
    const std::size_t k = h_prime.cols();
    if (h_dprime.cols() != k) throw std::invalid_argument("H' and H'' column mismatch");
    if (x.size() != k + l + rest) throw std::invalid_argument("x length mismatch");
    if (s_prime.size() != l || s_dprime.size() != rest)
        throw std::invalid_argument("syndrome split mismatch");

    Gf gf(h_prime.field());
    std::span<const FieldElem> x_info = x.subspan(0, k);
    std::span<const FieldElem> x_piv1 = x.subspan(k, l);
    std::span<const FieldElem> x_piv2 = x.subspan(k + l, rest);

    TransformReport rep;
    rep.residual_prime = mat_vec_mul(h_prime, x_info);
    for (std::size_t i = 0; i < l; ++i)
        rep.residual_prime[i] =
            Gf::sub(Gf::add(rep.residual_prime[i], x_piv1[i]), s_prime[i]);
    rep.residual_dprime = mat_vec_mul(h_dprime, x_info);
    for (std::size_t i = 0; i < rest; ++i)
        rep.residual_dprime[i] =
            Gf::sub(Gf::add(rep.residual_dprime[i], x_piv2[i]), s_dprime[i]);
    (void)gf;

    rep.consistent = hamming_weight(rep.residual_prime) == 0 &&
                     hamming_weight(rep.residual_dprime) == 0;
    return rep;
}

} // namespace grasscode
