#include "grasscode/plabic.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>

namespace grasscode {

// ---------------------------------------------------------------------------
// PathPoly

PathPoly::PathPoly(BigRat c) {
    if (c != 0) terms_[Monomial{}] = std::move(c);
}

PathPoly PathPoly::symbol(std::size_t index, std::size_t table_size) {
    PathPoly p;
    Monomial m(table_size, 0);
    m[index] = 1;
    p.terms_[std::move(m)] = 1;
    return p;
}

bool PathPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Monomial& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

BigRat PathPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::invalid_argument("PathPoly is not constant");
    return terms_.begin()->second;
}

bool PathPoly::has_negative_term() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second < 0; });
}

bool PathPoly::all_terms_positive() const {
    return !is_zero() && !has_negative_term();
}

void PathPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

namespace {
// align two monomials to a common symbol-table length
PathPoly::Monomial widen(const PathPoly::Monomial& m, std::size_t len) {
    PathPoly::Monomial r = m;
    if (r.size() < len) r.resize(len, 0);
    return r;
}
} // namespace

PathPoly PathPoly::operator+(const PathPoly& o) const {
    std::size_t len = 0;
    for (const auto& [m, c] : terms_) len = std::max(len, m.size());
    for (const auto& [m, c] : o.terms_) len = std::max(len, m.size());
    PathPoly r;
    for (const auto& [m, c] : terms_) r.terms_[widen(m, len)] += c;
    for (const auto& [m, c] : o.terms_) r.terms_[widen(m, len)] += c;
    r.prune();
    return r;
}

PathPoly PathPoly::operator-(const PathPoly& o) const { return *this + o.negate(); }

PathPoly PathPoly::negate() const {
    PathPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

PathPoly PathPoly::operator*(const PathPoly& o) const {
    std::size_t len = 0;
    for (const auto& [m, c] : terms_) len = std::max(len, m.size());
    for (const auto& [m, c] : o.terms_) len = std::max(len, m.size());
    PathPoly r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = widen(ma, len);
            Monomial b = widen(mb, len);
            for (std::size_t i = 0; i < len; ++i) m[i] += b[i];
            r.terms_[std::move(m)] += ca * cb;
        }
    }
    r.prune();
    return r;
}

BigRat PathPoly::evaluate(const std::vector<BigRat>& symbol_values) const {
    BigRat total = 0;
    for (const auto& [m, c] : terms_) {
        BigRat term = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (i >= symbol_values.size())
                throw std::invalid_argument("missing symbol value in evaluation");
            for (std::uint32_t e = 0; e < m[i]; ++e) term *= symbol_values[i];
        }
        total += term;
    }
    return total;
}

std::string PathPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        BigRat a = c < 0 ? BigRat(-c) : c;
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            std::string f = i < names.size() ? names[i] : "s" + std::to_string(i);
            if (m[i] > 1) f += "^" + std::to_string(m[i]);
            factors.push_back(std::move(f));
        }
        if (a != 1 || factors.empty()) {
            os << a;
            if (!factors.empty()) os << "*";
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "*";
            os << factors[i];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Graph parsing / validation

std::vector<std::size_t> PlabicGraph::source_labels() const {
    std::vector<bool> has_out(vertices.size(), false);
    for (const auto& e : edges) has_out[e.from] = true;
    std::vector<std::size_t> labels;
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v].kind == VertexKind::Boundary && has_out[v])
            labels.push_back(std::size_t(vertices[v].boundary_label));
    std::sort(labels.begin(), labels.end());
    return labels;
}

std::size_t PlabicGraph::vertex_by_label(int label) const {
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v].kind == VertexKind::Boundary && vertices[v].boundary_label == label)
            return v;
    throw std::invalid_argument("no boundary vertex with label " + std::to_string(label));
}

std::optional<std::size_t> PlabicGraph::find_vertex(const std::string& id) const {
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v].id == id) return v;
    return std::nullopt;
}

namespace {

void validate_structure(const PlabicGraph& g) {
    // boundary labels unique and contiguous 1..n
    std::set<int> labels;
    for (const auto& v : g.vertices)
        if (v.kind == VertexKind::Boundary) {
            if (!labels.insert(v.boundary_label).second)
                throw std::invalid_argument("duplicate boundary label " +
                                            std::to_string(v.boundary_label));
        }
    if (labels.size() != g.n)
        throw std::invalid_argument("boundary vertex count does not match header n");
    for (std::size_t i = 1; i <= g.n; ++i)
        if (!labels.count(int(i)))
            throw std::invalid_argument("boundary labels are not contiguous 1..n");

    std::vector<std::size_t> indeg(g.vertices.size(), 0), outdeg(g.vertices.size(), 0);
    for (const auto& e : g.edges) {
        if (e.from >= g.vertices.size() || e.to >= g.vertices.size())
            throw std::invalid_argument("edge references unknown vertex");
        ++outdeg[e.from];
        ++indeg[e.to];
    }
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const auto& pv = g.vertices[v];
        if (pv.kind == VertexKind::Black && outdeg[v] != 1)
            throw std::invalid_argument("internal black vertex '" + pv.id +
                                        "' must have out-degree exactly 1");
        if (pv.kind == VertexKind::White && indeg[v] != 1)
            throw std::invalid_argument("internal white vertex '" + pv.id +
                                        "' must have in-degree exactly 1");
        if (pv.kind == VertexKind::Boundary && indeg[v] > 0 && outdeg[v] > 0)
            throw std::invalid_argument("boundary vertex '" + pv.id +
                                        "' has both incoming and outgoing edges");
    }

    // acyclicity via Kahn
    {
        std::vector<std::size_t> deg = indeg;
        std::vector<std::size_t> queue;
        for (std::size_t v = 0; v < g.vertices.size(); ++v)
            if (deg[v] == 0) queue.push_back(v);
        std::size_t seen = 0;
        while (!queue.empty()) {
            std::size_t v = queue.back();
            queue.pop_back();
            ++seen;
            for (const auto& e : g.edges)
                if (e.from == v && --deg[e.to] == 0) queue.push_back(e.to);
        }
        if (seen != g.vertices.size())
            throw unsupported_graph_error("orientation has a directed cycle; only acyclic perfect orientations are supported");
    }

    if (g.source_labels().size() != g.k)
        throw std::invalid_argument("source count does not match header k");

    // clockwise boundary order, when drawn
    bool all_pos = true;
    for (const auto& v : g.vertices)
        if (v.kind == VertexKind::Boundary && !v.has_pos) all_pos = false;
    if (all_pos && g.n >= 3) {
        double total = 0;
        for (std::size_t i = 1; i <= g.n; ++i) {
            const auto& a = g.vertices[g.vertex_by_label(int(i))];
            const auto& b = g.vertices[g.vertex_by_label(int(i % g.n + 1))];
            double da = std::atan2(double(a.y), double(a.x));
            double db = std::atan2(double(b.y), double(b.x));
            double step = da - db;
            while (step < 0) step += 2 * std::numbers::pi;
            total += step;
        }
        if (std::abs(total - 2 * std::numbers::pi) > 1e-6)
            throw std::invalid_argument("boundary labels are not in clockwise order");
    }
}

int orient_sign(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by,
                std::int64_t cx, std::int64_t cy) {
    __int128 v = __int128(bx - ax) * (cy - ay) - __int128(by - ay) * (cx - ax);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

bool segments_cross(const PlabicVertex& a, const PlabicVertex& b, const PlabicVertex& c,
                    const PlabicVertex& d) {
    int o1 = orient_sign(a.x, a.y, b.x, b.y, c.x, c.y);
    int o2 = orient_sign(a.x, a.y, b.x, b.y, d.x, d.y);
    int o3 = orient_sign(c.x, c.y, d.x, d.y, a.x, a.y);
    int o4 = orient_sign(c.x, c.y, d.x, d.y, b.x, b.y);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

int path_winding(const PlabicGraph& g, const std::vector<std::size_t>& verts) {
    for (std::size_t v : verts)
        if (!g.vertices[v].has_pos) return 0;
    int crossings = 0;
    for (std::size_t i = 0; i + 1 < verts.size(); ++i)
        for (std::size_t j = i + 2; j + 1 < verts.size(); ++j) {
            if (segments_cross(g.vertices[verts[i]], g.vertices[verts[i + 1]],
                               g.vertices[verts[j]], g.vertices[verts[j + 1]]))
                ++crossings;
        }
    return crossings;
}

PathPoly edge_weight_poly(const PlabicGraph& g, const PlabicEdge& e) {
    if (e.symbolic) return PathPoly::symbol(e.symbol, g.symbols.size());
    return PathPoly(e.weight);
}

} // namespace

void PlabicGraph::validate() const {
    validate_structure(*this);
    if (k > 0) {
        FqMatrix bin = binarize(boundary_measurement(*this));
        if (rank(bin) != k)
            throw std::invalid_argument("binarized boundary matrix is rank-deficient");
    }
}

PlabicGraph parse_plabic(const std::string& text) {
    PlabicGraph g;
    std::istringstream is(text);
    std::string line;
    bool have_header = false;
    std::size_t lineno = 0;
    std::map<std::string, std::size_t> symbol_index;

    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("plabic line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;

        if (!have_header) {
            std::istringstream hs(line);
            if (!(hs >> g.n >> g.k)) fail("expected header 'n k'");
            have_header = true;
            continue;
        }
        if (tok == "vertex") {
            PlabicVertex v;
            std::string kind;
            if (!(ls >> v.id >> kind)) fail("vertex needs id and kind");
            if (kind == "black") v.kind = VertexKind::Black;
            else if (kind == "white") v.kind = VertexKind::White;
            else if (kind == "boundary") v.kind = VertexKind::Boundary;
            else fail("unknown vertex kind '" + kind + "'");
            std::vector<std::string> rest;
            while (ls >> tok) rest.push_back(tok);
            std::size_t at = 0;
            if (v.kind == VertexKind::Boundary) {
                if (rest.empty()) fail("boundary vertex needs a label");
                v.boundary_label = std::stoi(rest[at++]);
                if (v.boundary_label < 1) fail("boundary label must be >= 1");
            }
            if (rest.size() == at + 2) {
                v.has_pos = true;
                v.x = std::stoll(rest[at]);
                v.y = std::stoll(rest[at + 1]);
            } else if (rest.size() != at) {
                fail("trailing vertex tokens (expected optional 'x y')");
            }
            if (g.find_vertex(v.id)) fail("duplicate vertex id '" + v.id + "'");
            g.vertices.push_back(std::move(v));
        } else if (tok == "edge") {
            PlabicEdge e;
            std::string from, to;
            if (!(ls >> from >> to)) fail("edge needs from and to");
            auto fi = g.find_vertex(from);
            auto ti = g.find_vertex(to);
            if (!fi) fail("unknown vertex '" + from + "'");
            if (!ti) fail("unknown vertex '" + to + "'");
            e.from = *fi;
            e.to = *ti;
            if (ls >> tok) {
                if (tok.rfind("symbol:", 0) == 0) {
                    std::string name = tok.substr(7);
                    if (name.empty()) fail("empty symbol name");
                    auto [it, inserted] = symbol_index.try_emplace(name, g.symbols.size());
                    if (inserted) g.symbols.push_back(name);
                    e.symbolic = true;
                    e.symbol = it->second;
                } else {
                    auto slash = tok.find('/');
                    if (slash == std::string::npos) {
                        e.weight = BigRat(BigInt(tok));
                    } else {
                        e.weight = BigRat(BigInt(tok.substr(0, slash)), BigInt(tok.substr(slash + 1)));
                    }
                    if (e.weight <= 0) fail("edge weights must be positive");
                }
            }
            g.edges.push_back(std::move(e));
        } else {
            fail("unknown directive '" + tok + "'");
        }
    }
    if (!have_header) throw std::invalid_argument("plabic file has no header");
    validate_structure(g);
    return g;
}

std::string serialize_plabic(const PlabicGraph& g) {
    std::ostringstream os;
    os << g.n << ' ' << g.k << '\n';
    for (const auto& v : g.vertices) {
        os << "vertex " << v.id << ' ';
        switch (v.kind) {
            case VertexKind::Black: os << "black"; break;
            case VertexKind::White: os << "white"; break;
            case VertexKind::Boundary: os << "boundary " << v.boundary_label; break;
        }
        if (v.has_pos) os << ' ' << v.x << ' ' << v.y;
        os << '\n';
    }
    for (const auto& e : g.edges) {
        os << "edge " << g.vertices[e.from].id << ' ' << g.vertices[e.to].id;
        if (e.symbolic) {
            os << " symbol:" << g.symbols[e.symbol];
        } else if (e.weight != 1) {
            os << ' ' << boost::multiprecision::numerator(e.weight);
            if (boost::multiprecision::denominator(e.weight) != 1)
                os << '/' << boost::multiprecision::denominator(e.weight);
        }
        os << '\n';
    }
    return os.str();
}

PlabicGraph load_plabic(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw io_error("cannot open plabic file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_plabic(ss.str());
}

// ---------------------------------------------------------------------------
// Boundary measurement

std::vector<PathInfo> enumerate_paths(const PlabicGraph& g, std::size_t source_label,
                                      std::size_t target_label) {
    std::vector<PathInfo> out;
    const std::size_t start = g.vertex_by_label(int(source_label));
    const std::size_t target = g.vertex_by_label(int(target_label));
    if (start == target) {
        out.push_back(PathInfo{{start}, PathPoly(BigRat(1)), 0});
        return out;
    }
    std::vector<std::size_t> stack{start};
    std::function<void()> dfs = [&]() {
        std::size_t v = stack.back();
        if (v == target) {
            PathPoly w(BigRat(1));
            for (std::size_t i = 0; i + 1 < stack.size(); ++i) {
                for (const auto& e : g.edges)
                    if (e.from == stack[i] && e.to == stack[i + 1]) {
                        w = w * edge_weight_poly(g, e);
                        break;
                    }
            }
            out.push_back(PathInfo{stack, w, path_winding(g, stack)});
            return;
        }
        for (const auto& e : g.edges) {
            if (e.from != v) continue;
            stack.push_back(e.to);
            dfs();
            stack.pop_back();
        }
    };
    dfs();
    return out;
}

namespace {

BoundaryMatrix measure(const PlabicGraph& g, const std::vector<BigRat>* override_weights) {
    validate_structure(g);
    if (override_weights) {
        if (override_weights->size() != g.edges.size())
            throw std::invalid_argument("edge weight override count mismatch");
        for (const auto& w : *override_weights)
            if (w <= 0) throw std::invalid_argument("edge weights must be positive");
    }

    BoundaryMatrix bm;
    bm.k = g.k;
    bm.n = g.n;
    bm.sources = g.source_labels();
    bm.symbols = override_weights ? std::vector<std::string>{} : g.symbols;
    bm.entries.assign(g.k * g.n, PathPoly());

    // adjacency once; DFS accumulates weight and winding along the stack
    std::vector<std::vector<std::size_t>> adj(g.vertices.size());
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) adj[g.edges[ei].from].push_back(ei);

    auto weight_of = [&](std::size_t ei) -> PathPoly {
        if (override_weights) return PathPoly((*override_weights)[ei]);
        return edge_weight_poly(g, g.edges[ei]);
    };

    for (std::size_t row = 0; row < bm.sources.size(); ++row) {
        const std::size_t src_label = bm.sources[row];
        const std::size_t start = g.vertex_by_label(int(src_label));
        std::vector<std::size_t> stack{start};

        std::function<void(PathPoly)> dfs = [&](PathPoly acc) {
            const std::size_t v = stack.back();
            const auto& pv = g.vertices[v];
            if (pv.kind == VertexKind::Boundary && stack.size() > 1) {
                const int wind = path_winding(g, stack);
                PathPoly signed_w = (wind % 2 != 0) ? acc.negate() : acc;
                const std::size_t col = std::size_t(pv.boundary_label) - 1;
                bm.at(row, col) = bm.at(row, col) + signed_w;
                return;  // boundary sinks have no outgoing edges
            }
            for (std::size_t ei : adj[v]) {
                stack.push_back(g.edges[ei].to);
                dfs(acc * weight_of(ei));
                stack.pop_back();
            }
        };
        dfs(PathPoly(BigRat(1)));
        bm.at(row, src_label - 1) = PathPoly(BigRat(1));  // trivial path
    }
    return bm;
}

} // namespace

BoundaryMatrix boundary_measurement(const PlabicGraph& g) { return measure(g, nullptr); }

BoundaryMatrix boundary_measurement(const PlabicGraph& g, const std::vector<BigRat>& w) {
    return measure(g, &w);
}

bool BoundaryMatrix::is_numeric() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const PathPoly& p) { return p.is_constant(); });
}

FqMatrix binarize(const BoundaryMatrix& b) {
    FqMatrix m(b.k, b.n, FieldSpec::gf2());
    for (std::size_t r = 0; r < b.k; ++r) {
        for (std::size_t c = 0; c < b.n; ++c) {
            if (c + 1 == b.sources[r]) {
                m.at(r, c) = 1;  // row source and column are the same node
            } else if (b.at(r, c).is_zero()) {
                m.at(r, c) = 0;  // no connecting path
            } else if (b.at(r, c).has_negative_term()) {
                m.at(r, c) = 0;  // entry carries a negative sign
            } else {
                m.at(r, c) = 1;
            }
        }
    }
    return m;
}

RatMatrix evaluate(const BoundaryMatrix& b, const std::vector<BigRat>& symbol_values) {
    RatMatrix m(b.k, std::vector<BigRat>(b.n));
    for (std::size_t r = 0; r < b.k; ++r)
        for (std::size_t c = 0; c < b.n; ++c) m[r][c] = b.at(r, c).evaluate(symbol_values);
    return m;
}

// ---------------------------------------------------------------------------
// Pluecker coordinates

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    if (k == 0) return false;
    std::size_t i = k;
    while (i-- > 0) {
        if (idx[i] != i + n - k) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    return idx;
}

} // namespace

std::map<std::vector<std::size_t>, FieldElem> plucker_coordinates(const FqMatrix& m) {
    if (m.rows() > m.cols()) throw std::invalid_argument("plucker_coordinates requires k <= n");
    std::map<std::vector<std::size_t>, FieldElem> out;
    std::vector<std::size_t> idx = first_combination(m.rows());
    do {
        out[idx] = determinant(m.columns(idx));
    } while (next_combination(idx, m.cols()));
    return out;
}

BigRat rat_determinant(RatMatrix a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
    BigRat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pr = c;
        while (pr < n && a[pr][c] == 0) ++pr;
        if (pr == n) return 0;
        if (pr != c) {
            std::swap(a[pr], a[c]);
            det = -det;
        }
        det *= a[c][c];
        BigRat inv = BigRat(1) / a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            BigRat f = a[r][c] * inv;
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

std::map<std::vector<std::size_t>, BigRat> plucker_coordinates(const RatMatrix& m) {
    const std::size_t k = m.size();
    const std::size_t n = k == 0 ? 0 : m[0].size();
    if (k > n) throw std::invalid_argument("plucker_coordinates requires k <= n");
    std::map<std::vector<std::size_t>, BigRat> out;
    std::vector<std::size_t> idx = first_combination(k);
    do {
        RatMatrix sub(k, std::vector<BigRat>(k));
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) sub[r][c] = m[r][idx[c]];
        out[idx] = rat_determinant(std::move(sub));
    } while (next_combination(idx, n));
    return out;
}

PathPoly poly_determinant(const BoundaryMatrix& b, const std::vector<std::size_t>& cols,
                          const std::vector<std::size_t>& rows) {
    if (cols.size() != rows.size()) throw std::invalid_argument("non-square minor");
    if (cols.size() > 6) throw budget_error("symbolic determinant guarded to order <= 6");
    if (cols.empty()) return PathPoly(BigRat(1));
    // Laplace expansion along the first row
    PathPoly det;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const PathPoly& e = b.at(rows[0], cols[j]);
        if (e.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != j) sub_cols.push_back(cols[t]);
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        PathPoly minor = poly_determinant(b, sub_cols, sub_rows);
        PathPoly term = e * minor;
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

std::map<std::vector<std::size_t>, PathPoly> plucker_coordinates(const BoundaryMatrix& b) {
    std::map<std::vector<std::size_t>, PathPoly> out;
    std::vector<std::size_t> rows = first_combination(b.k);
    std::vector<std::size_t> idx = first_combination(b.k);
    do {
        out[idx] = poly_determinant(b, idx, rows);
    } while (next_combination(idx, b.n));
    return out;
}

TnnResult is_totally_nonnegative(const RatMatrix& m) {
    const std::size_t k = m.size();
    const std::size_t n = k == 0 ? 0 : m[0].size();
    if (k > n) throw std::invalid_argument("is_totally_nonnegative requires k <= n");
    std::vector<std::size_t> idx = first_combination(k);
    do {
        RatMatrix sub(k, std::vector<BigRat>(k));
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) sub[r][c] = m[r][idx[c]];
        if (rat_determinant(std::move(sub)) < 0) {
            TnnResult res;
            res.ok = false;
            res.witness = idx;
            return res;
        }
    } while (next_combination(idx, n));
    return TnnResult{};
}

std::size_t infer_k_from_dimension(std::size_t dim, std::size_t n) {
    if (n < 1) throw std::invalid_argument("infer_k_from_dimension requires n >= 1");
    std::set<std::size_t> achievable;
    for (std::size_t k = 0; k <= n; ++k) {
        const std::size_t d = k * (n - k);
        if (d == dim) return k;
        achievable.insert(d);
    }
    std::size_t below = 0, above = SIZE_MAX;
    for (std::size_t d : achievable) {
        if (d < dim) below = std::max(below, d);
        if (d > dim && d < above) above = d;
    }
    std::ostringstream os;
    os << "no integer k with k(n-k) = " << dim << " for n = " << n << "; nearest achievable dims:";
    if (below > 0 || achievable.count(0)) os << ' ' << below;
    if (above != SIZE_MAX) os << ' ' << above;
    throw unsatisfiable_error(os.str());
}

FqMatrix graph_to_tanner(const PlabicGraph& g) {
    return binarize(boundary_measurement(g));
}

PlabicGraph band_graph(std::size_t n, std::size_t k, std::size_t band) {
    if (k > n) throw std::invalid_argument("band_graph requires k <= n");
    if (k > 0 && n - k == 0) throw std::invalid_argument("band_graph requires sinks");
    band = std::min(band, n - k);
    PlabicGraph g;
    g.n = n;
    g.k = k;
    for (std::size_t i = 1; i <= n; ++i) {
        PlabicVertex v;
        v.id = "b" + std::to_string(i);
        v.kind = VertexKind::Boundary;
        v.boundary_label = int(i);
        g.vertices.push_back(v);
    }
    // sink fan-out per source: the leading spoke i keeps a staircase, the rest
    // are scattered deterministically (a regular circulant pattern makes most
    // column subsets singular, which starves information-set sampling)
    std::uint64_t scatter = 0x9e3779b97f4a7c15ULL ^ (std::uint64_t(n) << 32) ^ k;
    auto next_scatter = [&scatter]() {
        scatter ^= scatter << 13;
        scatter ^= scatter >> 7;
        scatter ^= scatter << 17;
        return scatter;
    };
    for (std::size_t i = 0; i < k; ++i) {
        PlabicVertex w;
        w.id = "w" + std::to_string(i + 1);
        w.kind = VertexKind::White;
        g.vertices.push_back(w);
        const std::size_t wi = g.vertices.size() - 1;
        g.edges.push_back(PlabicEdge{i, wi, false, 1, 0});  // boundary i+1 -> relay
        std::set<std::size_t> offsets{i % (n - k)};
        while (offsets.size() < band) offsets.insert(next_scatter() % (n - k));
        std::size_t j = 0;
        for (std::size_t off : offsets) {
            PlabicVertex b;
            b.id = "v" + std::to_string(i + 1) + "_" + std::to_string(j++);
            b.kind = VertexKind::Black;
            g.vertices.push_back(b);
            const std::size_t bi = g.vertices.size() - 1;
            g.edges.push_back(PlabicEdge{wi, bi, false, 1, 0});
            g.edges.push_back(PlabicEdge{bi, k + off, false, 1, 0});
        }
    }
    validate_structure(g);
    return g;
}

} // namespace grasscode
