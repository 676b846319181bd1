#include "grasscode/codes.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

#include "grasscode/rng.hpp"

namespace grasscode {

using ordered_json = nlohmann::ordered_json;

std::string metric_name(Metric m) { return m == Metric::Hamming ? "hamming" : "grassmann"; }

Metric metric_from_name(const std::string& s) {
    if (s == "hamming") return Metric::Hamming;
    if (s == "grassmann") return Metric::Grassmann;
    throw std::invalid_argument("unknown metric: " + s);
}

void LinearCode::validate() const {
    if (generator.rows() != k || generator.cols() != n)
        throw std::invalid_argument("generator shape mismatch");
    if (parity_check.cols() != n)
        throw std::invalid_argument("parity check shape mismatch");
    if (rank(generator) != k) throw std::invalid_argument("generator is rank-deficient");
    if (rank(parity_check) != n - k)
        throw std::invalid_argument("parity check rank is not n-k");
    if (!mat_mul(parity_check, generator.transpose()).is_zero())
        throw std::invalid_argument("H G^T != 0");
}

std::size_t LinearCode::weight(std::span<const FieldElem> x) const {
    return metric_weight(x, field, metric);
}

FqMatrix build_moore_generator(const std::vector<FieldElem>& g, std::size_t k, FieldSpec field) {
    const std::size_t n = g.size();
    if (k > n) throw std::invalid_argument("build_moore_generator requires k <= n");
    Gf gf(field);
    for (FieldElem e : g)
        if (!gf.valid(e)) throw std::invalid_argument("seed entry is not a field element");

    // seed entries must be linearly independent over GF(2) when n <= m
    if (n <= field.m) {
        FqMatrix unfold(field.m, n, FieldSpec::gf2());
        for (std::size_t c = 0; c < n; ++c)
            for (unsigned b = 0; b < field.m; ++b) unfold.at(b, c) = (g[c] >> b) & 1;
        if (rank(unfold) != n)
            throw degenerate_seed_error("Moore seed entries are linearly dependent over GF(2)");
    }

    FqMatrix mat(k, n, field);
    for (std::size_t c = 0; c < n; ++c) {
        FieldElem v = g[c];
        for (std::size_t r = 0; r < k; ++r) {
            mat.at(r, c) = v;
            v = gf.mul(v, v);  // next q-power
        }
    }
    return mat;
}

LinearCode build_grassmann_code(const GrassmannCodeSpec& spec) {
    LinearCode code;
    code.metric = Metric::Grassmann;
    code.design_weight = spec.design_weight;
    code.provenance = spec.provenance;

    if (std::holds_alternative<PlabicGraph>(spec.source)) {
        const PlabicGraph& g = std::get<PlabicGraph>(spec.source);
        code.generator = graph_to_tanner(g);
        code.field = code.generator.field();
        code.n = g.n;
        code.k = g.k;
        if (rank(code.generator) != code.k)
            throw degenerate_code_error("graph generator is rank-deficient");
    } else {
        const MooreSource& ms = std::get<MooreSource>(spec.source);
        code.field = spec.field;
        code.generator = build_moore_generator(ms.seed, ms.k, spec.field);
        code.n = ms.seed.size();
        code.k = ms.k;
        if (rank(code.generator) != code.k)
            throw degenerate_seed_error("Moore generator is rank-deficient");
    }
    code.parity_check = kernel_basis(code.generator);
    code.validate();
    return code;
}

LinearCode build_ldpc(std::size_t n, std::size_t col_weight, std::size_t row_weight,
                      std::uint64_t seed) {
    if (row_weight == 0 || col_weight == 0)
        throw std::invalid_argument("weights must be positive");
    if ((n * col_weight) % row_weight != 0)
        throw std::invalid_argument("n*col_weight must be divisible by row_weight");
    if (n % row_weight != 0)
        throw std::invalid_argument("row_weight must divide n for the block construction");

    const std::size_t rows_per_block = n / row_weight;
    const std::size_t rows = n * col_weight / row_weight;
    Rng rng(mix_seed(seed, 0x1d9c));

    FqMatrix h;
    for (int attempt = 0; attempt < 256; ++attempt) {
        h = FqMatrix(rows, n, FieldSpec::gf2());
        for (std::size_t blk = 0; blk < col_weight; ++blk) {
            std::vector<std::size_t> perm(n);
            if (blk == 0) {
                std::iota(perm.begin(), perm.end(), std::size_t(0));
            } else {
                perm = rng.permutation(n);
            }
            for (std::size_t c = 0; c < n; ++c) {
                const std::size_t r = blk * rows_per_block + perm[c] / row_weight;
                h.at(r, c) = 1;
            }
        }
        if (col_weight < 2) break;
        // duplicate columns are weight-2 codewords; redraw when they appear
        bool dup = false;
        for (std::size_t a = 0; a < n && !dup; ++a)
            for (std::size_t b = a + 1; b < n && !dup; ++b) {
                bool same = true;
                for (std::size_t r = 0; r < rows; ++r)
                    if (h.at(r, a) != h.at(r, b)) { same = false; break; }
                dup = same;
            }
        if (!dup) break;
    }

    LinearCode code;
    code.metric = Metric::Hamming;
    code.field = FieldSpec::gf2();
    code.n = n;
    code.parity_check = h;
    code.generator = kernel_basis(h);
    code.k = code.generator.rows();
    code.design_weight = 0;
    code.provenance = "ldpc seed=" + std::to_string(seed);
    code.validate();
    return code;
}

LinearCode lift_code(const FqMatrix& a) {
    const std::size_t k = a.rows();
    const std::size_t r = a.cols();
    const std::size_t n = k + r;
    LinearCode code;
    code.field = a.field();
    code.metric = a.field().m == 1 ? Metric::Hamming : Metric::Grassmann;
    code.n = n;
    code.k = k;
    code.generator = FqMatrix(k, n, a.field());
    for (std::size_t i = 0; i < k; ++i) {
        code.generator.at(i, i) = 1;
        for (std::size_t j = 0; j < r; ++j) code.generator.at(i, k + j) = a.at(i, j);
    }
    code.parity_check = FqMatrix(r, n, a.field());
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < k; ++j) code.parity_check.at(i, j) = a.at(j, i);  // char 2
        code.parity_check.at(i, k + i) = 1;
    }
    code.provenance = "lift";
    code.validate();
    return code;
}

LinearCode build_moore_code(std::size_t n, std::size_t k, unsigned m, std::uint64_t seed,
                            std::uint32_t design_weight) {
    FieldSpec fs = FieldSpec::gf2m(m);
    Rng rng(mix_seed(seed, 0x4d00));
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<FieldElem> g(n);
        for (auto& e : g) e = FieldElem(rng.below(fs.order()));
        try {
            GrassmannCodeSpec spec;
            spec.source = MooreSource{std::move(g), k};
            spec.field = fs;
            spec.design_weight = design_weight;
            spec.provenance = "moore seed=" + std::to_string(seed);
            return build_grassmann_code(spec);
        } catch (const domain_error&) {
            continue;  // degenerate seed, resample
        }
    }
    throw degenerate_seed_error("could not sample a full-rank Moore seed");
}

LinearCode build_random_lifted_code(std::size_t n, std::size_t k, unsigned m, std::uint64_t seed,
                                    std::uint32_t design_weight, Metric metric) {
    if (k >= n) throw std::invalid_argument("lifted code requires k < n");
    FieldSpec fs = FieldSpec::gf2m(m);
    Rng rng(mix_seed(seed, 0x11f7));
    FqMatrix a(k, n - k, fs);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n - k; ++j) a.at(i, j) = FieldElem(rng.below(fs.order()));
    LinearCode code = lift_code(a);
    code.metric = metric;
    code.design_weight = design_weight;
    code.provenance = "lift seed=" + std::to_string(seed);
    return code;
}

std::size_t grassmann_weight(std::span<const FieldElem> x, const FieldSpec& field) {
    if (field.m == 1) return hamming_weight(x);
    FqMatrix unfold(field.m, x.size(), FieldSpec::gf2());
    for (std::size_t c = 0; c < x.size(); ++c)
        for (unsigned b = 0; b < field.m; ++b) unfold.at(b, c) = (x[c] >> b) & 1;
    return rank(unfold);
}

std::size_t metric_weight(std::span<const FieldElem> x, const FieldSpec& field, Metric metric) {
    if (metric == Metric::Hamming) return hamming_weight(x);
    return grassmann_weight(x, field);
}

MinWeightResult min_weight_bruteforce(const LinearCode& code, unsigned threads) {
    const std::uint64_t message_bits = std::uint64_t(code.field.m) * code.k;
    if (message_bits > 24)
        throw budget_error("min_weight_bruteforce guarded to q^{mk} <= 2^24; need " +
                           std::to_string(message_bits) + " message bits");
    const std::uint64_t total = std::uint64_t(1) << message_bits;
    Gf gf(code.field);

    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
        MinWeightResult best;
        best.w_min = SIZE_MAX;
        std::vector<FieldElem> msg(code.k), cw(code.n);
        for (std::uint64_t u = lo; u < hi; ++u) {
            std::uint64_t v = u;
            for (std::size_t i = 0; i < code.k; ++i) {
                msg[i] = FieldElem(v & ((std::uint64_t(1) << code.field.m) - 1));
                v >>= code.field.m;
            }
            std::fill(cw.begin(), cw.end(), 0);
            for (std::size_t i = 0; i < code.k; ++i) {
                if (msg[i] == 0) continue;
                for (std::size_t j = 0; j < code.n; ++j)
                    cw[j] = Gf::add(cw[j], gf.mul(msg[i], code.generator.at(i, j)));
            }
            const std::size_t w = code.weight(cw);
            if (w < best.w_min || (w == best.w_min && cw < best.witness)) {
                best.w_min = w;
                best.witness = cw;
            }
        }
        return best;
    };

    threads = std::max(1u, threads);
    if (threads == 1 || total < 4096) {
        return scan(1, total);
    }
    std::vector<MinWeightResult> parts(threads);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total - 1 + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t lo = 1 + std::uint64_t(t) * chunk;
        const std::uint64_t hi = std::min(total, lo + chunk);
        pool.emplace_back([&, t, lo, hi] { parts[t] = lo < hi ? scan(lo, hi) : MinWeightResult{SIZE_MAX, {}}; });
    }
    for (auto& th : pool) th.join();
    // deterministic reduction: min by (weight, lexicographic witness)
    MinWeightResult best;
    best.w_min = SIZE_MAX;
    for (const auto& p : parts) {
        if (p.w_min < best.w_min || (p.w_min == best.w_min && p.witness < best.witness))
            best = p;
    }
    return best;
}

std::string code_to_json(const LinearCode& code) {
    ordered_json j;
    j["n"] = code.n;
    j["k"] = code.k;
    j["m"] = code.field.m;
    j["q"] = code.field.q;
    j["metric"] = metric_name(code.metric);
    j["generator"] = matrix_to_text(code.generator);
    j["parity_check"] = matrix_to_text(code.parity_check);
    j["design_weight"] = code.design_weight;
    j["provenance"] = code.provenance;
    return j.dump(2) + "\n";
}

LinearCode code_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    LinearCode code;
    code.n = j.at("n").get<std::size_t>();
    code.k = j.at("k").get<std::size_t>();
    code.field = FieldSpec::gf2m(j.at("m").get<unsigned>());
    code.metric = metric_from_name(j.at("metric").get<std::string>());
    code.generator = matrix_from_text(j.at("generator").get<std::string>());
    code.parity_check = matrix_from_text(j.at("parity_check").get<std::string>());
    code.design_weight = j.at("design_weight").get<std::uint32_t>();
    code.provenance = j.value("provenance", "");
    code.validate();
    return code;
}

void save_code(const LinearCode& code, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open for writing: " + path);
    f << code_to_json(code);
}

LinearCode load_code(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return code_from_json(ss.str());
}

} // namespace grasscode
