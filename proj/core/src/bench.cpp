#include "grasscode/bench.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <mutex>
#include <thread>

#include "grasscode/rng.hpp"
#include "grasscode/version.hpp"

namespace grasscode {

using ordered_json = nlohmann::ordered_json;

std::pair<double, double> wilson_interval(std::size_t successes, std::size_t trials) {
    if (trials == 0) return {0.0, 1.0};
    const double z = 1.959963984540054;  // 97.5th percentile
    const double nn = double(trials);
    const double p = double(successes) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = p + z2 / (2 * nn);
    const double half = z * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn));
    double lo = (center - half) / denom;
    double hi = (center + half) / denom;
    return {std::max(0.0, lo), std::min(1.0, hi)};
}

const SecurityTables& security_tables() {
    static const SecurityTables tables = [] {
        SecurityTables t;
        t.decomposition_budget = {{128, 131072ULL},
                                  {256, 1048576ULL},
                                  {512, 8388608ULL},
                                  {1024, 67108864ULL}};
        t.parameter_rows = {
            {67, 7, 89, 2, 5, 128, "ref-1"},
            {100, 80, 96, 2, 5, 192, "ref-2"},
            {100, 80, 96, 2, 5, 192, "ref-3"},
            {67, 22, 71, 2, 11, 133, "ref-4"},
            {110, 7, 18, 2, 12, 128, "this-work"},
        };
        return t;
    }();
    return tables;
}

std::uint64_t iterations_for_budget(std::uint64_t budget, std::size_t n, std::size_t k) {
    const std::uint64_t cost = std::uint64_t(n - k) * k * k / 2;
    if (cost == 0) return 1;
    return std::max<std::uint64_t>(1, budget / cost);
}

namespace {

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
    threads = std::max(1u, threads);
    if (threads == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::mutex err_mutex;
    std::exception_ptr first_error;
    std::size_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        std::size_t lo = std::size_t(t) * chunk;
        std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

// BPSK over AWGN with deviation sigma; the all-zero word is sent and hard
// decisions flip a bit when the sample crosses zero.
std::vector<FieldElem> channel_error(std::size_t n, double sigma, Rng& rng) {
    std::vector<FieldElem> e(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const double y = 1.0 + sigma * rng.normal();
        if (y < 0.0) e[i] = 1;
    }
    return e;
}

PointRecord rate_point(const std::string& series, double x, std::size_t failures,
                       std::size_t trials) {
    PointRecord p;
    p.series = series;
    p.x = x;
    p.trials = trials;
    p.failures = failures;
    p.successes = trials - failures;
    p.value = trials ? double(failures) / double(trials) : 0.0;
    auto [lo, hi] = wilson_interval(failures, trials);
    p.lo95 = lo;
    p.hi95 = hi;
    return p;
}

PointRecord mean_point(const std::string& series, double x,
                       const std::vector<std::uint64_t>& samples, std::size_t successes) {
    PointRecord p;
    p.series = series;
    p.x = x;
    p.trials = samples.size();
    p.successes = successes;
    p.failures = samples.size() - successes;
    double mean = 0;
    for (auto v : samples) mean += double(v);
    mean /= std::max<std::size_t>(1, samples.size());
    double var = 0;
    for (auto v : samples) var += (double(v) - mean) * (double(v) - mean);
    if (samples.size() > 1) var /= double(samples.size() - 1);
    const double half = 1.959963984540054 * std::sqrt(var / std::max<std::size_t>(1, samples.size()));
    p.value = mean;
    p.lo95 = mean - half;
    p.hi95 = mean + half;
    return p;
}

void check_monotone(ExperimentReport& report) {
    // group points by series; flag decreases beyond interval overlap
    std::map<std::string, std::vector<const PointRecord*>> by_series;
    for (const auto& p : report.points) by_series[p.series].push_back(&p);
    for (auto& [name, pts] : by_series) {
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            const auto* a = pts[i];
            const auto* b = pts[i + 1];
            if (b->x <= a->x) continue;
            if (b->value < a->value && b->hi95 < a->lo95) {
                report.monotonic_ok = false;
                report.notes.push_back("monotonicity violation in series " + name + " at x=" +
                                       std::to_string(b->x));
            }
        }
    }
}

} // namespace

ExperimentReport run_failure_experiment(const ExperimentSpec& spec) {
    if (spec.trials_per_point < 1) throw std::invalid_argument("trials_per_point must be >= 1");
    for (double s : spec.sigma_grid)
        if (s < 0) throw std::invalid_argument("sigma must be non-negative");

    ExperimentReport report;
    report.spec = spec;
    report.library_version = version;
    report.rng_trace_seed = spec.seed;

    // paired desk-scale codes
    GrassmannCodeSpec gspec;
    gspec.source = band_graph(spec.n, spec.k, spec.band);
    gspec.design_weight = spec.w;
    gspec.provenance = "band-graph n=" + std::to_string(spec.n) + " k=" + std::to_string(spec.k);
    LinearCode grass = build_grassmann_code(gspec);
    LinearCode ldpc = build_ldpc(spec.n, spec.ldpc_col_weight, spec.ldpc_row_weight,
                                 spec.seed ^ 0x5d9cULL);

    const std::uint64_t budget = security_tables().decomposition_budget.at(spec.security_level);
    const std::uint64_t T = spec.iterations_override
                                ? spec.iterations_override
                                : iterations_for_budget(budget, spec.n, spec.k);
    report.notes.push_back("iteration budget T=" + std::to_string(T) +
                           " from security level " + std::to_string(spec.security_level));
    report.notes.push_back("ldpc weight budget is n (convergence-limited)");

    for (std::size_t pi = 0; pi < spec.sigma_grid.size(); ++pi) {
        const double sigma = spec.sigma_grid[pi];
        std::vector<char> grass_fail(spec.trials_per_point, 0);
        std::vector<char> ldpc_fail(spec.trials_per_point, 0);

        parallel_for(spec.trials_per_point, spec.threads, [&](std::size_t ti) {
            // one channel draw shared by both codes
            Rng ch(mix_seed(spec.seed, 0xC0 + pi, ti));
            std::vector<FieldElem> e = channel_error(spec.n, sigma, ch);

            {
                std::vector<FieldElem> s = mat_vec_mul(grass.parity_check, e);
                DecoderConfig cfg;
                cfg.max_iterations = T;
                cfg.l = std::min(spec.l, spec.n - spec.k);
                cfg.rng_seed = mix_seed(spec.seed, 0xD0 + pi, ti);
                DecodeOutcome out = plucker_decode(grass, s, spec.w, cfg);
                grass_fail[ti] = out.success ? 0 : 1;
            }
            {
                std::vector<FieldElem> s = mat_vec_mul(ldpc.parity_check, e);
                DecoderConfig cfg;
                cfg.max_iterations = spec.gallager_sweeps;
                cfg.rng_seed = 0;
                DecodeOutcome out = gallager_b(ldpc.parity_check, s, spec.n, cfg);
                ldpc_fail[ti] = out.success ? 0 : 1;
            }
        });

        const std::size_t gf = std::size_t(std::count(grass_fail.begin(), grass_fail.end(), 1));
        const std::size_t lf = std::size_t(std::count(ldpc_fail.begin(), ldpc_fail.end(), 1));
        report.points.push_back(rate_point("grassmann", sigma, gf, spec.trials_per_point));
        report.points.push_back(rate_point("ldpc", sigma, lf, spec.trials_per_point));
    }

    check_monotone(report);

    // separation verdict at the middle grid point
    if (!spec.sigma_grid.empty()) {
        const std::size_t mid = spec.sigma_grid.size() / 2;
        const PointRecord* g = nullptr;
        const PointRecord* l = nullptr;
        for (const auto& p : report.points) {
            if (p.x != spec.sigma_grid[mid]) continue;
            if (p.series == "grassmann") g = &p;
            if (p.series == "ldpc") l = &p;
        }
        if (g && l) {
            if (g->hi95 < l->lo95)
                report.comparison = "grassmann_lower_separated";
            else if (l->hi95 < g->lo95)
                report.comparison = "ldpc_lower_separated";
            else
                report.comparison = "inconclusive";
        }
    }
    return report;
}

ExperimentReport run_rowcost_experiment(const ExperimentSpec& spec) {
    if (!std::is_sorted(spec.lengths.begin(), spec.lengths.end()))
        throw std::invalid_argument("lengths must be ascending");
    ExperimentReport report;
    report.spec = spec;
    report.library_version = version;
    report.rng_trace_seed = spec.seed;
    report.notes.push_back("rate 1/2; planted error weight " + std::to_string(spec.plant_weight) +
                           "; graph fan-out max(band, (n-k)/4)");

    for (std::size_t li = 0; li < spec.lengths.size(); ++li) {
        const std::size_t n = spec.lengths[li];
        if (n < 8 || n % 4 != 0)
            throw std::invalid_argument("row_cost lengths must be multiples of 4 and >= 8");
        const std::size_t k = n / 2;
        // fan-out grows with the block so information sets stay sampleable
        const std::size_t band = std::max(spec.band, (n - k) / 4);

        GrassmannCodeSpec gspec;
        gspec.source = band_graph(n, k, band);
        gspec.design_weight = spec.plant_weight;
        LinearCode grass = build_grassmann_code(gspec);
        LinearCode ldpc = build_ldpc(n, 2, 4, spec.seed ^ (0xA100 + n));
        LinearCode lifted_q4;
        if (spec.include_q4)
            lifted_q4 = build_random_lifted_code(n, k, 2, spec.seed ^ (0xB200 + n), 1,
                                                 Metric::Grassmann);

        std::vector<std::uint64_t> grass_ops(spec.rowcost_trials, 0);
        std::vector<std::uint64_t> ldpc_ops(spec.rowcost_trials, 0);
        std::vector<std::uint64_t> q4_ops(spec.rowcost_trials, 0);
        std::vector<char> grass_ok(spec.rowcost_trials, 0), ldpc_ok(spec.rowcost_trials, 0),
            q4_ok(spec.rowcost_trials, 0);

        parallel_for(spec.rowcost_trials, spec.threads, [&](std::size_t ti) {
            Rng plant(mix_seed(spec.seed, 0xE0 + li, ti));
            // plant a weight-w binary error pattern
            std::vector<std::size_t> support = plant.permutation(n);
            support.resize(spec.plant_weight);

            {
                std::vector<FieldElem> e(n, 0);
                for (std::size_t c : support) e[c] = 1;
                std::vector<FieldElem> s = mat_vec_mul(grass.parity_check, e);
                DecoderConfig cfg;
                cfg.max_iterations = spec.rowcost_iterations;
                cfg.l = std::min(spec.l, n - k);
                cfg.rng_seed = mix_seed(spec.seed, 0xE8 + li, ti);
                DecodeOutcome out = plucker_decode(grass, s, spec.plant_weight, cfg);
                grass_ops[ti] = out.row_ops;
                grass_ok[ti] = out.success;
            }
            {
                std::vector<FieldElem> e(n, 0);
                for (std::size_t c : support) e[c] = 1;
                std::vector<FieldElem> s = mat_vec_mul(ldpc.parity_check, e);
                DecoderConfig cfg;
                cfg.max_iterations = spec.gallager_sweeps;
                DecodeOutcome out = gallager_b(ldpc.parity_check, s, n, cfg);
                ldpc_ops[ti] = out.row_ops;
                ldpc_ok[ti] = out.success;
            }
            if (spec.include_q4) {
                // rank-1 error: one nonzero field coefficient on the pattern
                Gf gf(lifted_q4.field);
                FieldElem beta = FieldElem(1 + plant.below(lifted_q4.field.order() - 1));
                std::vector<FieldElem> e(n, 0);
                for (std::size_t c : support) e[c] = beta;
                std::vector<FieldElem> s = mat_vec_mul(lifted_q4.parity_check, e);
                DecoderConfig cfg;
                cfg.max_iterations = spec.rowcost_iterations;
                cfg.l = std::min(spec.l, n - k);
                cfg.rng_seed = mix_seed(spec.seed, 0xF0 + li, ti);
                DecodeOutcome out = plucker_decode(lifted_q4, s, 1, cfg);
                q4_ops[ti] = out.row_ops;
                q4_ok[ti] = out.success;
                (void)gf;
            }
        });

        auto count_ok = [](const std::vector<char>& v) {
            return std::size_t(std::count(v.begin(), v.end(), 1));
        };
        report.points.push_back(mean_point("grassmann-q2", double(n), grass_ops, count_ok(grass_ok)));
        report.points.push_back(mean_point("ldpc-q2", double(n), ldpc_ops, count_ok(ldpc_ok)));
        if (spec.include_q4)
            report.points.push_back(mean_point("grassmann-q4", double(n), q4_ops, count_ok(q4_ok)));
    }
    return report;
}

ExperimentSpec preset_spec(const std::string& name, const std::string& experiment,
                           double desk_scale_factor) {
    unsigned level = 0;
    if (name == "paper-128") level = 128;
    else if (name == "paper-256") level = 256;
    else if (name == "paper-512") level = 512;
    else if (name == "paper-1024") level = 1024;
    else throw std::invalid_argument("unknown preset: " + name);
    if (desk_scale_factor < 1.0) throw std::invalid_argument("desk-scale factor must be >= 1");

    const auto& tables = security_tables();
    const auto& row = tables.parameter_rows.back();  // this-work parameters

    ExperimentSpec spec;
    spec.experiment = experiment;
    spec.security_level = level;
    spec.desk_scale = desk_scale_factor;

    const double s = 1.0 / desk_scale_factor;
    // truncate the published shape, then snap the length to the paired
    // construction's granularity (multiple of 4, rate-1/2 baseline)
    std::size_t n = std::size_t(double(row.n) * s);
    n = std::max<std::size_t>(8, n - n % 4);
    spec.n = n;
    spec.k = n / 2;
    spec.w = std::max<std::uint32_t>(1, std::uint32_t(double(row.w) * s));
    spec.ldpc_col_weight = 2;
    spec.ldpc_row_weight = 4;
    const std::uint64_t budget = tables.decomposition_budget.at(level);
    spec.iterations_override =
        std::max<std::uint64_t>(1, std::uint64_t(double(iterations_for_budget(budget, spec.n, spec.k)) * s));
    spec.lengths = {std::max<std::size_t>(8, n / 2 - (n / 2) % 4), n};
    return spec;
}

// --- serialization ---------------------------------------------------------

namespace {

ordered_json spec_json(const ExperimentSpec& s) {
    ordered_json j;
    j["experiment"] = s.experiment;
    j["security_level"] = s.security_level;
    j["seed"] = s.seed;
    j["threads"] = s.threads;
    j["n"] = s.n;
    j["k"] = s.k;
    j["band"] = s.band;
    j["ldpc_col_weight"] = s.ldpc_col_weight;
    j["ldpc_row_weight"] = s.ldpc_row_weight;
    j["w"] = s.w;
    j["sigma_grid"] = s.sigma_grid;
    j["trials_per_point"] = s.trials_per_point;
    j["gallager_sweeps"] = s.gallager_sweeps;
    j["iterations_override"] = s.iterations_override;
    j["l"] = s.l;
    j["lengths"] = s.lengths;
    j["rowcost_trials"] = s.rowcost_trials;
    j["include_q4"] = s.include_q4;
    j["plant_weight"] = s.plant_weight;
    j["rowcost_iterations"] = s.rowcost_iterations;
    j["desk_scale"] = s.desk_scale;
    return j;
}

ExperimentSpec spec_from(const ordered_json& j) {
    ExperimentSpec s;
    s.experiment = j.value("experiment", s.experiment);
    s.security_level = j.value("security_level", s.security_level);
    s.seed = j.value("seed", s.seed);
    s.threads = j.value("threads", s.threads);
    s.n = j.value("n", s.n);
    s.k = j.value("k", s.k);
    s.band = j.value("band", s.band);
    s.ldpc_col_weight = j.value("ldpc_col_weight", s.ldpc_col_weight);
    s.ldpc_row_weight = j.value("ldpc_row_weight", s.ldpc_row_weight);
    s.w = j.value("w", s.w);
    if (j.contains("sigma_grid")) s.sigma_grid = j.at("sigma_grid").get<std::vector<double>>();
    s.trials_per_point = j.value("trials_per_point", s.trials_per_point);
    s.gallager_sweeps = j.value("gallager_sweeps", s.gallager_sweeps);
    s.iterations_override = j.value("iterations_override", s.iterations_override);
    s.l = j.value("l", s.l);
    if (j.contains("lengths")) s.lengths = j.at("lengths").get<std::vector<std::size_t>>();
    s.rowcost_trials = j.value("rowcost_trials", s.rowcost_trials);
    s.include_q4 = j.value("include_q4", s.include_q4);
    s.plant_weight = j.value("plant_weight", s.plant_weight);
    s.rowcost_iterations = j.value("rowcost_iterations", s.rowcost_iterations);
    s.desk_scale = j.value("desk_scale", s.desk_scale);
    return s;
}

ordered_json point_json(const PointRecord& p) {
    ordered_json j;
    j["series"] = p.series;
    j["x"] = p.x;
    j["value"] = p.value;
    j["lo95"] = p.lo95;
    j["hi95"] = p.hi95;
    j["trials"] = p.trials;
    j["successes"] = p.successes;
    j["failures"] = p.failures;
    return j;
}

std::string double_text(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

} // namespace

std::string spec_to_json(const ExperimentSpec& spec) { return spec_json(spec).dump(2) + "\n"; }

ExperimentSpec spec_from_json(const std::string& text) {
    return spec_from(ordered_json::parse(text));
}

std::string report_to_json(const ExperimentReport& report) {
    ordered_json j;
    j["spec"] = spec_json(report.spec);
    j["points"] = ordered_json::array();
    for (const auto& p : report.points) j["points"].push_back(point_json(p));
    j["library_version"] = report.library_version;
    j["rng_trace_seed"] = report.rng_trace_seed;
    j["monotonic_ok"] = report.monotonic_ok;
    j["comparison"] = report.comparison;
    j["notes"] = report.notes;
    return j.dump(2) + "\n";
}

ExperimentReport report_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    ExperimentReport r;
    r.spec = spec_from(j.at("spec"));
    for (const auto& pj : j.at("points")) {
        PointRecord p;
        p.series = pj.at("series").get<std::string>();
        p.x = pj.at("x").get<double>();
        p.value = pj.at("value").get<double>();
        p.lo95 = pj.at("lo95").get<double>();
        p.hi95 = pj.at("hi95").get<double>();
        p.trials = pj.at("trials").get<std::size_t>();
        p.successes = pj.at("successes").get<std::size_t>();
        p.failures = pj.at("failures").get<std::size_t>();
        r.points.push_back(std::move(p));
    }
    r.library_version = j.at("library_version").get<std::string>();
    r.rng_trace_seed = j.at("rng_trace_seed").get<std::uint64_t>();
    r.monotonic_ok = j.at("monotonic_ok").get<bool>();
    r.comparison = j.value("comparison", "");
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

std::string report_to_csv(const ExperimentReport& report) {
    std::string out = "series,x,value,lo95,hi95,trials\n";
    for (const auto& p : report.points) {
        out += p.series;
        out += ',';
        out += double_text(p.x);
        out += ',';
        out += double_text(p.value);
        out += ',';
        out += double_text(p.lo95);
        out += ',';
        out += double_text(p.hi95);
        out += ',';
        out += std::to_string(p.trials);
        out += '\n';
    }
    return out;
}

void emit_report(const ExperimentReport& report, const std::string& format,
                 const std::string& path) {
    std::string body;
    if (format == "csv") body = report_to_csv(report);
    else if (format == "json") body = report_to_json(report);
    else throw std::invalid_argument("unknown report format: " + format);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open for writing: " + path);
    f << body;
    if (!f) throw io_error("write failed: " + path);
}

} // namespace grasscode
