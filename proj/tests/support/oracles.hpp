// Independent brute-force oracles backing the unit and acceptance suites.
// Everything here recomputes expected values from first principles, separate
// from the library's own formulas and elimination paths.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "grasscode/plabic.hpp"

namespace oracles {

// Tiny standalone GF(q) arithmetic for q in {2,3,4,5}: prime fields use
// mod-p tables, GF(4) uses its multiplication table.
struct SmallField {
    unsigned q;
    explicit SmallField(unsigned q_) : q(q_) {}

    unsigned add(unsigned a, unsigned b) const {
        if (q == 4) return a ^ b;
        return (a + b) % q;
    }
    unsigned mul(unsigned a, unsigned b) const {
        if (q == 4) {
            static const std::array<std::array<unsigned, 4>, 4> t = {{
                {0, 0, 0, 0},
                {0, 1, 2, 3},
                {0, 2, 3, 1},
                {0, 3, 1, 2},
            }};
            return t[a][b];
        }
        return (a * b) % q;
    }
    unsigned neg(unsigned a) const {
        if (q == 4) return a;
        return (q - a) % q;
    }
    unsigned inv(unsigned a) const {
        for (unsigned b = 1; b < q; ++b)
            if (mul(a, b) == 1) return b;
        return 0;
    }
};

// Count of k-dimensional subspaces of GF(q)^n by direct enumeration of
// canonical reduced-row-echelon forms: choose pivot columns, then fill every
// free position in all q ways, constructing each matrix once.
inline std::uint64_t count_subspaces(unsigned n, unsigned k, unsigned q) {
    if (k > n) return 0;
    if (k == 0) return 1;
    std::uint64_t total = 0;

    std::vector<unsigned> pivots(k);
    for (unsigned i = 0; i < k; ++i) pivots[i] = i;

    auto free_positions = [&](const std::vector<unsigned>& piv) {
        // entries right of each pivot, excluding later pivot columns
        unsigned free_count = 0;
        for (unsigned r = 0; r < k; ++r)
            for (unsigned c = piv[r] + 1; c < n; ++c) {
                bool is_pivot_col = false;
                for (unsigned rr = 0; rr < k; ++rr)
                    if (piv[rr] == c) is_pivot_col = true;
                if (!is_pivot_col) ++free_count;
            }
        return free_count;
    };

    for (;;) {
        const unsigned f = free_positions(pivots);
        // enumerate every assignment of the free entries: each assignment is
        // one canonical matrix, hence one subspace
        std::uint64_t assignments = 1;
        for (unsigned i = 0; i < f; ++i) assignments *= q;
        total += assignments;

        // next pivot-column combination
        int i = int(k) - 1;
        while (i >= 0 && pivots[std::size_t(i)] == n - k + unsigned(i)) --i;
        if (i < 0) break;
        ++pivots[std::size_t(i)];
        for (unsigned j = unsigned(i) + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    return total;
}

// Rank of a small matrix over GF(q), elimination written out independently.
inline unsigned small_rank(std::vector<std::vector<unsigned>> a, unsigned q) {
    SmallField f(q);
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    unsigned rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pr = rank;
        while (pr < rows && a[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[pr], a[rank]);
        const unsigned inv = f.inv(a[rank][c]);
        for (std::size_t j = 0; j < cols; ++j) a[rank][j] = f.mul(a[rank][j], inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const unsigned factor = a[r][c];
            for (std::size_t j = 0; j < cols; ++j)
                a[r][j] = f.add(a[r][j], f.neg(f.mul(factor, a[rank][j])));
        }
        ++rank;
    }
    return rank;
}

// Census of m x n GF(2) matrices by rank.
inline std::map<unsigned, std::uint64_t> rank_census_gf2(unsigned m, unsigned n) {
    std::map<unsigned, std::uint64_t> census;
    const std::uint64_t total = std::uint64_t(1) << (m * n);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::vector<std::vector<unsigned>> a(m, std::vector<unsigned>(n));
        for (unsigned r = 0; r < m; ++r)
            for (unsigned c = 0; c < n; ++c) a[r][c] = unsigned((bits >> (r * n + c)) & 1);
        ++census[small_rank(a, 2)];
    }
    return census;
}

// Exhaustive syndrome table for a GF(2) parity check: syndrome bits -> minimum
// solution weight (absent key: unreachable syndrome).
inline std::map<std::uint64_t, std::size_t> syndrome_table(const grasscode::FqMatrix& h) {
    std::map<std::uint64_t, std::size_t> table;
    const std::size_t n = h.cols();
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
        std::vector<grasscode::FieldElem> x(n, 0);
        std::size_t weight = 0;
        for (std::size_t c = 0; c < n; ++c) {
            x[c] = grasscode::FieldElem((bits >> c) & 1);
            weight += x[c];
        }
        auto s = grasscode::mat_vec_mul(h, x);
        std::uint64_t key = 0;
        for (std::size_t r = 0; r < s.size(); ++r) key |= std::uint64_t(s[r]) << r;
        auto it = table.find(key);
        if (it == table.end() || weight < it->second) table[key] = weight;
    }
    return table;
}

// Signed sum over vertex-disjoint path systems from the graph's sources to the
// column set I: sum over systems of sgn(sigma) * prod (-1)^wind(P) wt(P).
// Independent of the determinant route used by plucker_coordinates.
inline grasscode::PathPoly path_family_sum(const grasscode::PlabicGraph& g,
                                           const std::vector<std::size_t>& sink_labels) {
    using grasscode::PathPoly;
    const auto sources = g.source_labels();
    const std::size_t k = sources.size();

    // all paths from each source to each selected sink
    std::vector<std::vector<std::vector<grasscode::PathInfo>>> paths(k);
    for (std::size_t i = 0; i < k; ++i) {
        paths[i].resize(sink_labels.size());
        for (std::size_t j = 0; j < sink_labels.size(); ++j)
            paths[i][j] = enumerate_paths(g, sources[i], sink_labels[j]);
    }

    PathPoly total;
    std::vector<std::size_t> assign(k);
    std::iota(assign.begin(), assign.end(), std::size_t(0));
    // iterate over all bijections source -> sink via permutations
    std::sort(assign.begin(), assign.end());
    do {
        // permutation sign by inversion count
        int inversions = 0;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                if (assign[a] > assign[b]) ++inversions;
        const bool neg_perm = inversions % 2 != 0;

        // choose one path per source, all combinations
        std::vector<std::size_t> choice(k, 0);
        for (;;) {
            bool feasible = true;
            for (std::size_t i = 0; i < k && feasible; ++i)
                if (choice[i] >= paths[i][assign[i]].size()) feasible = false;
            if (feasible) {
                // vertex-disjointness
                std::vector<std::size_t> used;
                bool disjoint = true;
                for (std::size_t i = 0; i < k && disjoint; ++i) {
                    for (std::size_t v : paths[i][assign[i]][choice[i]].vertices) {
                        if (std::find(used.begin(), used.end(), v) != used.end()) {
                            disjoint = false;
                            break;
                        }
                        used.push_back(v);
                    }
                }
                if (disjoint) {
                    PathPoly prod(grasscode::BigRat(1));
                    bool neg = neg_perm;
                    for (std::size_t i = 0; i < k; ++i) {
                        const auto& p = paths[i][assign[i]][choice[i]];
                        prod = prod * p.weight;
                        if (p.winding % 2 != 0) neg = !neg;
                    }
                    total = neg ? total - prod : total + prod;
                }
            }
            // advance the mixed-radix choice counter
            std::size_t d = 0;
            while (d < k) {
                ++choice[d];
                const std::size_t limit = std::max<std::size_t>(1, paths[d][assign[d]].size());
                if (choice[d] < limit) break;
                choice[d] = 0;
                ++d;
            }
            if (d == k) break;
        }
    } while (std::next_permutation(assign.begin(), assign.end()));
    return total;
}

} // namespace oracles
