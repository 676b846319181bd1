// Command line front end: graph inspection, code construction, bound
// evaluation, syndrome decoding, brute-force oracles, and the experiment
// harness. Machine-readable output goes to stdout, everything else to stderr.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <optional>
#include <thread>

#include "grasscode/bench.hpp"
#include "grasscode/bounds.hpp"
#include "grasscode/codes.hpp"
#include "grasscode/decoder.hpp"
#include "grasscode/plabic.hpp"
#include "grasscode/version.hpp"

using namespace grasscode;
using ordered_json = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string out;
    bool verbose = false;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

void emit(const GlobalOpts& g, const std::string& body) {
    if (g.out.empty() || g.out == "-") {
        std::cout << body;
        if (!body.empty() && body.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(g.out, std::ios::binary);
        if (!f) throw io_error("cannot open for writing: " + g.out);
        f << body;
    }
}

std::vector<FieldElem> parse_syndrome(const std::string& text) {
    std::vector<FieldElem> v;
    std::string tok;
    for (char c : text + ",") {
        if (c == ',' || c == ' ') {
            if (!tok.empty()) v.push_back(field_elem_from_hex(tok));
            tok.clear();
        } else {
            tok += c;
        }
    }
    return v;
}

std::string syndrome_to_text(std::span<const FieldElem> v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += field_elem_to_hex(v[i]);
    }
    return s;
}

ordered_json matrix_json(const FqMatrix& m) {
    ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["m"] = m.field().m;
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::string row;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) row += ' ';
            row += field_elem_to_hex(m.at(r, c));
        }
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

std::string matrix_csv(const FqMatrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ',';
            out += field_elem_to_hex(m.at(r, c));
        }
        out += '\n';
    }
    return out;
}

ordered_json outcome_json(const DecodeOutcome& out) {
    ordered_json j;
    j["success"] = out.success;
    if (out.success) {
        j["error_vector"] = syndrome_to_text(out.error_vector);
    } else {
        j["error_vector"] = nullptr;
    }
    j["iterations_used"] = out.iterations_used;
    j["row_ops"] = out.row_ops;
    j["weight_found"] = out.weight_found;
    if (!out.accept_branch.empty()) j["accept_branch"] = out.accept_branch;
    j["tau_rejections"] = out.tau_rejections;
    j["collision_table_size"] = out.collision_table_size;
    return j;
}

// --- subcommand payloads -----------------------------------------------

struct GraphArgs {
    std::string file;
    std::string emit_kind = "binarized";
    std::string weights;
};

int run_graph(const GlobalOpts& g, const GraphArgs& a) {
    PlabicGraph graph = load_plabic(a.file);
    graph.validate();
    BoundaryMatrix bm;
    if (a.weights.empty()) {
        bm = boundary_measurement(graph);
    } else {
        std::vector<BigRat> w;
        std::string tok;
        for (char c : a.weights + ",") {
            if (c == ',') {
                if (!tok.empty()) {
                    auto slash = tok.find('/');
                    if (slash == std::string::npos) w.emplace_back(BigInt(tok));
                    else w.emplace_back(BigInt(tok.substr(0, slash)), BigInt(tok.substr(slash + 1)));
                }
                tok.clear();
            } else {
                tok += c;
            }
        }
        bm = boundary_measurement(graph, w);
    }

    if (a.emit_kind == "binarized" || a.emit_kind == "tanner") {
        FqMatrix bin = binarize(bm);
        if (g.format == "csv") emit(g, matrix_csv(bin));
        else emit(g, matrix_json(bin).dump(2));
        return 0;
    }
    if (a.emit_kind == "measurement") {
        ordered_json j;
        j["n"] = bm.n;
        j["k"] = bm.k;
        j["sources"] = bm.sources;
        ordered_json rows = ordered_json::array();
        for (std::size_t r = 0; r < bm.k; ++r) {
            ordered_json row = ordered_json::array();
            for (std::size_t c = 0; c < bm.n; ++c) row.push_back(bm.at(r, c).to_string(bm.symbols));
            rows.push_back(row);
        }
        j["entries"] = rows;
        emit(g, j.dump(2));
        return 0;
    }
    if (a.emit_kind == "pluckers") {
        auto coords = plucker_coordinates(bm);
        ordered_json j = ordered_json::array();
        for (const auto& [cols, det] : coords) {
            ordered_json e;
            e["columns"] = cols;
            e["value"] = det.to_string(bm.symbols);
            j.push_back(e);
        }
        emit(g, j.dump(2));
        return 0;
    }
    if (a.emit_kind == "tnn") {
        if (!bm.is_numeric())
            throw std::invalid_argument("tnn check needs numeric weights (use --weights)");
        auto res = is_totally_nonnegative(evaluate(bm, {}));
        ordered_json j;
        j["totally_nonnegative"] = res.ok;
        if (!res.ok) j["witness"] = res.witness;
        emit(g, j.dump(2));
        return 0;
    }
    throw std::invalid_argument("unknown --emit kind: " + a.emit_kind);
}

struct CodeBuildArgs {
    std::string kind;
    std::string graph_file;
    std::size_t n = 0, k = 0, band = 3;
    unsigned m = 1;
    std::size_t col_weight = 3, row_weight = 6;
    std::uint32_t w = 0;
};

int run_code_build(const GlobalOpts& g, const CodeBuildArgs& a) {
    LinearCode code;
    if (a.kind == "plabic") {
        GrassmannCodeSpec spec;
        PlabicGraph graph = load_plabic(a.graph_file);
        std::ifstream f(a.graph_file, std::ios::binary);
        std::ostringstream ss;
        ss << f.rdbuf();
        spec.source = std::move(graph);
        spec.design_weight = a.w;
        spec.provenance = "graph fnv1a=" + std::to_string(fnv1a64(ss.str()));
        code = build_grassmann_code(spec);
    } else if (a.kind == "band") {
        GrassmannCodeSpec spec;
        spec.source = band_graph(a.n, a.k, a.band);
        spec.design_weight = a.w;
        spec.provenance = "band seed-free n=" + std::to_string(a.n);
        code = build_grassmann_code(spec);
    } else if (a.kind == "moore") {
        code = build_moore_code(a.n, a.k, a.m, g.seed, a.w);
    } else if (a.kind == "ldpc") {
        code = build_ldpc(a.n, a.col_weight, a.row_weight, g.seed);
        code.design_weight = a.w;
    } else if (a.kind == "lift") {
        code = build_random_lifted_code(a.n, a.k, a.m, g.seed, a.w,
                                        a.m == 1 ? Metric::Hamming : Metric::Grassmann);
    } else {
        throw std::invalid_argument("unknown code kind: " + a.kind);
    }
    emit(g, code_to_json(code));
    return 0;
}

int run_code_inspect(const GlobalOpts& g, const std::string& path) {
    LinearCode code = load_code(path);
    ordered_json j;
    j["n"] = code.n;
    j["k"] = code.k;
    j["m"] = code.field.m;
    j["q"] = code.field.q;
    j["metric"] = metric_name(code.metric);
    j["design_weight"] = code.design_weight;
    j["parity_rows"] = code.parity_check.rows();
    j["generator_rank"] = rank(code.generator);
    j["provenance"] = code.provenance;
    emit(g, j.dump(2));
    return 0;
}

int run_oracle(const GlobalOpts& g, const std::string& path, const std::string& syndrome) {
    LinearCode code = load_code(path);
    ordered_json j;
    if (syndrome.empty()) {
        auto mw = min_weight_bruteforce(code, g.threads);
        j["min_weight"] = mw.w_min;
        j["witness"] = syndrome_to_text(mw.witness);
    } else {
        std::vector<FieldElem> s = parse_syndrome(syndrome);
        if (s.size() != code.parity_check.rows())
            throw std::invalid_argument("syndrome length must be " +
                                        std::to_string(code.parity_check.rows()));
        // exhaustive scan over error vectors
        const std::uint64_t bits = std::uint64_t(code.field.m) * code.n;
        if (bits > 24) throw budget_error("oracle guarded to q^{mn} <= 2^24");
        std::optional<std::vector<FieldElem>> best;
        std::size_t best_w = SIZE_MAX;
        std::vector<FieldElem> x(code.n);
        const std::uint64_t mask = (std::uint64_t(1) << code.field.m) - 1;
        for (std::uint64_t u = 0; u < (std::uint64_t(1) << bits); ++u) {
            std::uint64_t v = u;
            for (std::size_t i = 0; i < code.n; ++i) {
                x[i] = FieldElem(v & mask);
                v >>= code.field.m;
            }
            if (!syndrome_check(code.parity_check, x, s)) continue;
            const std::size_t w = code.weight(x);
            if (w < best_w) {
                best_w = w;
                best = x;
            }
        }
        j["solvable"] = best.has_value();
        if (best) {
            j["min_weight"] = best_w;
            j["witness"] = syndrome_to_text(*best);
        }
    }
    emit(g, j.dump(2));
    return 0;
}

struct BoundsArgs {
    std::string bound_id;
    std::vector<std::string> params;
    bool list = false;
};

int run_bounds(const GlobalOpts& g, const BoundsArgs& a) {
    if (a.list) {
        ordered_json j = ordered_json::array();
        for (const auto& e : bounds_catalog()) {
            ordered_json item;
            item["id"] = e.id;
            item["formula"] = e.formula;
            item["params"] = e.params;
            j.push_back(item);
        }
        emit(g, j.dump(2));
        return 0;
    }
    BoundQuery query;
    query.bound_id = a.bound_id;
    for (const auto& p : a.params) {
        auto eq = p.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--param expects name=value, got: " + p);
        const std::string name = p.substr(0, eq);
        const std::string value = p.substr(eq + 1);
        if (name == "x") {
            auto slash = value.find('/');
            if (slash == std::string::npos) query.x = BigRat(BigInt(value));
            else query.x = BigRat(BigInt(value.substr(0, slash)), BigInt(value.substr(slash + 1)));
        } else {
            query.params[name] = std::stoll(value);
        }
    }
    BoundValue v = evaluate_bound(query);
    if (g.format == "csv") {
        std::string exact = v.exact ? v.exact->str() : "";
        emit(g, "bound,exact,log2,log_only\n" + a.bound_id + "," + exact + "," +
                   std::to_string(v.log2_value) + "," + (v.log_only ? "1" : "0") + "\n");
        return 0;
    }
    ordered_json j;
    j["bound"] = a.bound_id;
    if (v.exact) {
        // integers as JSON numbers when they fit, else decimal strings
        const BigRat& x = *v.exact;
        if (boost::multiprecision::denominator(x) == 1 &&
            boost::multiprecision::numerator(x) >= std::numeric_limits<std::int64_t>::min() &&
            boost::multiprecision::numerator(x) <= std::numeric_limits<std::int64_t>::max()) {
            j["exact"] = boost::multiprecision::numerator(x).convert_to<std::int64_t>();
        } else {
            j["exact"] = x.str();
        }
    } else {
        j["exact"] = nullptr;
    }
    j["log2"] = v.log2_value;
    j["log_only"] = v.log_only;
    if (!v.note.empty()) j["note"] = v.note;
    emit(g, j.dump(2));
    return 0;
}

struct DecodeArgs {
    std::string code_file;
    std::string syndrome;
    std::size_t w = 0;
    std::string algo = "prange";
    std::uint64_t T = 1000;
    std::size_t l = 0;
    std::size_t p = 0;
    bool uniform_subsets = false;
};

int run_decode(const GlobalOpts& g, const DecodeArgs& a) {
    LinearCode code = load_code(a.code_file);
    std::vector<FieldElem> s = parse_syndrome(a.syndrome);
    if (s.size() != code.parity_check.rows())
        throw std::invalid_argument("syndrome length must be " +
                                    std::to_string(code.parity_check.rows()));
    DecoderConfig cfg;
    cfg.max_iterations = a.T;
    cfg.l = a.l;
    cfg.p = a.p;
    cfg.rng_seed = g.seed;
    cfg.uniform_subsets = a.uniform_subsets;

    DecodeOutcome out;
    if (a.algo == "prange") out = prange_isd(code.parity_check, s, a.w, cfg);
    else if (a.algo == "birthday") out = birthday_isd(code.parity_check, s, a.w, cfg);
    else if (a.algo == "plucker") out = plucker_decode(code, s, a.w, cfg);
    else if (a.algo == "gallager") out = gallager_b(code.parity_check, s, a.w, cfg);
    else throw std::invalid_argument("unknown algorithm: " + a.algo);

    emit(g, outcome_json(out).dump(2));
    return 0;
}

struct BenchArgs {
    std::string mode;  // failure | rowcost
    std::string spec_file;
    std::string preset;
    double desk_scale = 1.0;
    std::uint64_t trials_override = 0;
};

int run_bench(const GlobalOpts& g, const BenchArgs& a) {
    ExperimentSpec spec;
    if (!a.preset.empty()) {
        spec = preset_spec(a.preset, a.mode == "failure" ? "failure_curve" : "row_cost",
                           a.desk_scale);
    } else if (!a.spec_file.empty()) {
        std::ifstream f(a.spec_file, std::ios::binary);
        if (!f) throw io_error("cannot open spec: " + a.spec_file);
        std::ostringstream ss;
        ss << f.rdbuf();
        spec = spec_from_json(ss.str());
    } else {
        throw std::invalid_argument("bench needs --spec or --preset");
    }
    spec.seed = g.seed;
    spec.threads = g.threads;
    if (a.trials_override) {
        spec.trials_per_point = a.trials_override;
        spec.rowcost_trials = a.trials_override;
    }
    spec.experiment = a.mode == "failure" ? "failure_curve" : "row_cost";

    ExperimentReport report = a.mode == "failure" ? run_failure_experiment(spec)
                                                  : run_rowcost_experiment(spec);
    if (g.verbose) {
        for (const auto& note : report.notes) std::cerr << "note: " << note << '\n';
        std::cerr << "comparison: " << report.comparison << '\n';
    }
    emit(g, g.format == "csv" ? report_to_csv(report) : report_to_json(report));
    // a failure curve that decreases beyond interval overlap is a failed run
    return report.monotonic_ok ? 0 : 1;
}

int run_tables(const GlobalOpts& g, int level) {
    const auto& t = security_tables();
    if (level > 0) {
        emit(g, std::to_string(t.decomposition_budget.at(unsigned(level))));
        return 0;
    }
    if (g.format == "csv") {
        std::string out = "table,level,value\n";
        for (const auto& [lvl, budget] : t.decomposition_budget)
            out += "decomposition," + std::to_string(lvl) + "," + std::to_string(budget) + "\n";
        for (const auto& row : t.parameter_rows)
            out += "parameters," + std::to_string(row.security) + ",\"n=" + std::to_string(row.n) +
                   " k=" + std::to_string(row.k) + " m=" + std::to_string(row.m) +
                   " q=" + std::to_string(row.q) + " w=" + std::to_string(row.w) + " " +
                   row.source + "\"\n";
        emit(g, out);
        return 0;
    }
    ordered_json j;
    ordered_json dec;
    for (const auto& [lvl, budget] : t.decomposition_budget) dec[std::to_string(lvl)] = budget;
    j["decomposition_operations"] = dec;
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.parameter_rows) {
        ordered_json r;
        r["n"] = row.n;
        r["k"] = row.k;
        r["m"] = row.m;
        r["q"] = row.q;
        r["w"] = row.w;
        r["security"] = row.security;
        r["source"] = row.source;
        rows.push_back(r);
    }
    j["parameters"] = rows;
    emit(g, j.dump(2));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"codes from boundary-measurement graphs, subspace-metric bounds, and "
                 "information-set decoding experiments"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "global rng seed (all randomness flows from it)");
    app.add_option("--format", g.format, "output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", g.out, "write output to a file instead of stdout");
    app.add_flag("--verbose", g.verbose, "extra diagnostics on stderr");
    app.add_option("--threads", g.threads, "worker threads for parallel sections");

    GraphArgs graph_args;
    auto* graph_cmd = app.add_subcommand("graph", "load a graph file and emit derived matrices");
    graph_cmd->add_option("--file", graph_args.file, "graph file")->required();
    graph_cmd->add_option("--emit", graph_args.emit_kind,
                          "measurement|binarized|tanner|pluckers|tnn");
    graph_cmd->add_option("--weights", graph_args.weights,
                          "comma-separated positive rational edge weight overrides");

    CodeBuildArgs build_args;
    auto* code_cmd = app.add_subcommand("code", "build and inspect code bundles");
    auto* code_build = code_cmd->add_subcommand("build", "construct a code");
    code_build->add_option("--kind", build_args.kind, "plabic|band|moore|ldpc|lift")->required();
    code_build->add_option("--graph", build_args.graph_file, "graph file for --kind plabic");
    code_build->add_option("--n", build_args.n, "code length");
    code_build->add_option("--k", build_args.k, "code dimension");
    code_build->add_option("--m", build_args.m, "extension degree");
    code_build->add_option("--band", build_args.band, "band fan-out for --kind band");
    code_build->add_option("--col-weight", build_args.col_weight, "ldpc column weight");
    code_build->add_option("--row-weight", build_args.row_weight, "ldpc row weight");
    code_build->add_option("--w", build_args.w, "design weight");

    std::string inspect_path;
    auto* code_inspect = code_cmd->add_subcommand("inspect", "summarize a code bundle");
    code_inspect->add_option("--code", inspect_path, "code bundle path")->required();

    std::string code_oracle_path, code_oracle_syndrome;
    auto* code_oracle = code_cmd->add_subcommand("oracle", "exhaustive weight oracle");
    code_oracle->add_option("--code", code_oracle_path, "code bundle path")->required();
    code_oracle->add_option("--syndrome", code_oracle_syndrome,
                            "hex syndrome elements, comma separated");

    std::string oracle_path, oracle_syndrome;
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive weight oracle for a code bundle");
    oracle_cmd->add_option("--code", oracle_path, "code bundle path")->required();
    oracle_cmd->add_option("--syndrome", oracle_syndrome,
                           "hex syndrome elements, comma separated");

    BoundsArgs bounds_args;
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate closed-form bounds");
    bounds_cmd->add_option("--bound", bounds_args.bound_id, "catalog identifier");
    bounds_cmd->add_option("--param", bounds_args.params, "name=value, repeatable");
    bounds_cmd->add_flag("--list", bounds_args.list, "print the catalog");

    DecodeArgs decode_args;
    auto* decode_cmd = app.add_subcommand("decode", "run a syndrome decoder");
    decode_cmd->add_option("--code", decode_args.code_file, "code bundle path")->required();
    decode_cmd->add_option("--syndrome", decode_args.syndrome, "hex syndrome elements")
        ->required();
    decode_cmd->add_option("--w", decode_args.w, "weight budget")->required();
    decode_cmd->add_option("--algo", decode_args.algo, "prange|birthday|plucker|gallager");
    decode_cmd->add_option("--T", decode_args.T, "iteration budget");
    decode_cmd->add_option("--l", decode_args.l, "window parameter");
    decode_cmd->add_option("--p", decode_args.p, "birthday half weight");
    decode_cmd->add_flag("--uniform-subsets", decode_args.uniform_subsets,
                         "sample windows uniformly instead of cyclic shifts");

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "experiment harness");
    auto* bench_failure = bench_cmd->add_subcommand("failure", "failure probability vs sigma");
    auto* bench_rowcost = bench_cmd->add_subcommand("rowcost", "row operations vs code length");
    for (auto* sub : {bench_failure, bench_rowcost}) {
        sub->add_option("--spec", bench_args.spec_file, "experiment spec json");
        sub->add_option("--preset", bench_args.preset, "paper-128|paper-256|paper-512|paper-1024");
        sub->add_option("--desk-scale", bench_args.desk_scale, "divide sizes and budgets");
        sub->add_option("--trials", bench_args.trials_override, "override trials per point");
    }

    int tables_level = 0;
    auto* tables_cmd = app.add_subcommand("tables", "published security tables");
    tables_cmd->add_option("--level", tables_level, "128|256|512|1024");

    // global flags are accepted in any position
    for (auto* sub : {graph_cmd, code_cmd, code_build, code_inspect, code_oracle, oracle_cmd,
                      bounds_cmd, decode_cmd, bench_cmd, bench_failure, bench_rowcost, tables_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // usage errors carry exit code 2; CLI11 prints help/errors itself
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    {
        std::string joined;
        for (int i = 1; i < argc; ++i) {
            joined += argv[i];
            joined += '\x1f';
        }
        char hash[32];
        std::snprintf(hash, sizeof hash, "%016llx",
                      static_cast<unsigned long long>(fnv1a64(joined)));
        std::cerr << "grasscode " << version << " seed=" << g.seed << " config=" << hash << '\n';
    }

    try {
        if (graph_cmd->parsed()) return run_graph(g, graph_args);
        if (code_cmd->parsed()) {
            if (code_build->parsed()) return run_code_build(g, build_args);
            if (code_inspect->parsed()) return run_code_inspect(g, inspect_path);
            if (code_oracle->parsed()) return run_oracle(g, code_oracle_path, code_oracle_syndrome);
            throw std::invalid_argument("code needs a subcommand: build|inspect|oracle");
        }
        if (oracle_cmd->parsed()) return run_oracle(g, oracle_path, oracle_syndrome);
        if (bounds_cmd->parsed()) return run_bounds(g, bounds_args);
        if (decode_cmd->parsed()) return run_decode(g, decode_args);
        if (bench_cmd->parsed()) {
            if (bench_failure->parsed()) bench_args.mode = "failure";
            else if (bench_rowcost->parsed()) bench_args.mode = "rowcost";
            else throw std::invalid_argument("bench needs a subcommand: failure|rowcost");
            return run_bench(g, bench_args);
        }
        if (tables_cmd->parsed()) return run_tables(g, tables_level);
        throw std::invalid_argument("no subcommand given");
    } catch (const domain_error& e) {
        ordered_json err;
        err["code"] = e.code();
        err["message"] = e.what();
        err["context"] = "domain";
        std::cout << err.dump(2) << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        ordered_json err;
        err["code"] = "invalid-argument";
        err["message"] = e.what();
        err["context"] = "domain";
        std::cout << err.dump(2) << '\n';
        return 1;
    } catch (const std::exception& e) {
        ordered_json err;
        err["code"] = "internal";
        err["message"] = e.what();
        err["context"] = "unexpected";
        std::cout << err.dump(2) << '\n';
        return 1;
    }
}
