#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grasscode/matrix.hpp"
#include "grasscode/subspace.hpp"

namespace grasscode {

// Sparse multivariate polynomial with rational coefficients; the value type of
// boundary measurements when edge weights are formal symbols. A constant
// polynomial has the empty monomial only.
class PathPoly {
public:
    using Monomial = std::vector<std::uint32_t>;  // exponent per symbol index

    PathPoly() = default;
    explicit PathPoly(BigRat c);
    static PathPoly symbol(std::size_t index, std::size_t table_size);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    BigRat constant_value() const;  // requires is_constant()

    bool has_negative_term() const;
    bool all_terms_positive() const;

    PathPoly operator+(const PathPoly& o) const;
    PathPoly operator-(const PathPoly& o) const;
    PathPoly operator*(const PathPoly& o) const;
    PathPoly negate() const;
    bool operator==(const PathPoly&) const = default;

    BigRat evaluate(const std::vector<BigRat>& symbol_values) const;

    std::string to_string(const std::vector<std::string>& symbol_names) const;

    const std::map<Monomial, BigRat>& terms() const { return terms_; }

private:
    std::map<Monomial, BigRat> terms_;
    void prune();
};

enum class VertexKind { Black, White, Boundary };

struct PlabicVertex {
    std::string id;
    VertexKind kind = VertexKind::Boundary;
    int boundary_label = 0;  // 1..n for boundary vertices, 0 otherwise
    bool has_pos = false;
    std::int64_t x = 0, y = 0;  // drawing coordinates, used for path winding
};

struct PlabicEdge {
    std::size_t from = 0, to = 0;  // vertex indices
    bool symbolic = false;
    BigRat weight = 1;          // when numeric
    std::size_t symbol = 0;     // index into symbol table when symbolic
};

// Directed plabic graph with a perfect orientation: every internal black
// vertex has out-degree exactly 1, every internal white vertex in-degree
// exactly 1. Only acyclic orientations are supported.
struct PlabicGraph {
    std::size_t n = 0;  // boundary vertex count
    std::size_t k = 0;  // source count
    std::vector<PlabicVertex> vertices;
    std::vector<PlabicEdge> edges;
    std::vector<std::string> symbols;

    std::vector<std::size_t> source_labels() const;  // ascending boundary labels
    std::size_t vertex_by_label(int label) const;
    std::optional<std::size_t> find_vertex(const std::string& id) const;

    // Structural checks: labels contiguous, orientation perfect and acyclic,
    // |sources| = k, boundary clockwise when coordinates are present, and the
    // binarized boundary matrix has rank k.
    void validate() const;
};

// Text format:
//   n k
//   vertex <id> <black|white|boundary> [label] [x y]
//   edge <from> <to> [num/den | int | symbol:<name>]
// '#' starts a comment. Coordinates are optional; without them all paths get
// winding 0.
PlabicGraph parse_plabic(const std::string& text);
std::string serialize_plabic(const PlabicGraph& g);
PlabicGraph load_plabic(const std::string& path);

struct BoundaryMatrix {
    std::size_t k = 0, n = 0;
    std::vector<std::size_t> sources;     // boundary labels, row order
    std::vector<PathPoly> entries;        // k x n row-major
    std::vector<std::string> symbols;

    const PathPoly& at(std::size_t r, std::size_t c) const { return entries[r * n + c]; }
    PathPoly& at(std::size_t r, std::size_t c) { return entries[r * n + c]; }
    bool is_numeric() const;
};

using RatMatrix = std::vector<std::vector<BigRat>>;

// M[i][j] = sum over directed source_i -> boundary_j paths of
// (-1)^wind(P) * wt(P). wind(P) counts the proper self-crossings of the drawn
// path polyline (a full clockwise turn of the path shows up as one crossing);
// without coordinates every path has winding 0.
BoundaryMatrix boundary_measurement(const PlabicGraph& g);
// Same with every edge weight replaced (positional, must be positive).
BoundaryMatrix boundary_measurement(const PlabicGraph& g, const std::vector<BigRat>& edge_weights);

// Entry rules: 1 when row source and column are the same node, 0 when no path
// connects them, 0 when the measurement entry carries a negative sign,
// 1 otherwise.
FqMatrix binarize(const BoundaryMatrix& b);

RatMatrix evaluate(const BoundaryMatrix& b, const std::vector<BigRat>& symbol_values);

// All k-subsets of columns -> k x k minor.
std::map<std::vector<std::size_t>, FieldElem> plucker_coordinates(const FqMatrix& m);
std::map<std::vector<std::size_t>, BigRat> plucker_coordinates(const RatMatrix& m);
// Symbolic variant (Laplace expansion); guarded to k <= 6.
std::map<std::vector<std::size_t>, PathPoly> plucker_coordinates(const BoundaryMatrix& b);

BigRat rat_determinant(RatMatrix m);
PathPoly poly_determinant(const BoundaryMatrix& b, const std::vector<std::size_t>& cols,
                          const std::vector<std::size_t>& rows);

struct TnnResult {
    bool ok = true;
    std::vector<std::size_t> witness;  // lexicographically first violating subset
};

TnnResult is_totally_nonnegative(const RatMatrix& m);

// Smallest k with k(n-k) = dim; unsatisfiable error lists nearest achievable
// dimensions.
std::size_t infer_k_from_dimension(std::size_t dim, std::size_t n);

// binarize(boundary_measurement(g)): sources as check rows, boundary vertices
// as variable columns.
FqMatrix graph_to_tanner(const PlabicGraph& g);

// Programmatic all-positive family: sources 1..k fan out to `band` sinks each
// in a cyclic pattern; used for desk-scale code construction.
PlabicGraph band_graph(std::size_t n, std::size_t k, std::size_t band);

// Exhaustive directed path data, used by tests and the path-family oracle.
struct PathInfo {
    std::vector<std::size_t> vertices;
    PathPoly weight;     // product of edge weights, no sign
    int winding = 0;     // proper self-crossings of the polyline
};
std::vector<PathInfo> enumerate_paths(const PlabicGraph& g, std::size_t source_label,
                                      std::size_t target_label);

} // namespace grasscode
