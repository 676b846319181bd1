#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "grasscode/field.hpp"

namespace grasscode {

// Count of elementary row operations performed by one elimination run.
// Row scalings never occur over GF(2); the field exists for GF(2^m) uniformity.
struct OpCounter {
    std::uint64_t row_swaps = 0;
    std::uint64_t row_additions = 0;
    std::uint64_t row_scalings = 0;

    std::uint64_t total() const { return row_swaps + row_additions + row_scalings; }
    OpCounter& operator+=(const OpCounter& o) {
        row_swaps += o.row_swaps;
        row_additions += o.row_additions;
        row_scalings += o.row_scalings;
        return *this;
    }
};

// Dense row-major matrix over GF(2^m).
class FqMatrix {
public:
    FqMatrix() : field_(FieldSpec::gf2()) {}
    FqMatrix(std::size_t rows, std::size_t cols, FieldSpec field = FieldSpec::gf2());
    FqMatrix(std::size_t rows, std::size_t cols, std::vector<FieldElem> entries,
             FieldSpec field = FieldSpec::gf2());
    FqMatrix(std::size_t rows, std::size_t cols, std::initializer_list<FieldElem> entries,
             FieldSpec field = FieldSpec::gf2())
        : FqMatrix(rows, cols, std::vector<FieldElem>(entries), field) {}

    static FqMatrix identity(std::size_t n, FieldSpec field = FieldSpec::gf2());
    static FqMatrix zero(std::size_t rows, std::size_t cols, FieldSpec field = FieldSpec::gf2());

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    FieldElem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    FieldElem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    std::span<const FieldElem> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }

    FqMatrix transpose() const;
    FqMatrix columns(std::span<const std::size_t> idx) const;
    void append_column(std::span<const FieldElem> col);

    bool is_zero() const;
    bool operator==(const FqMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    FieldSpec field_;
    std::vector<FieldElem> a_;
};

struct RrefResult {
    FqMatrix reduced;
    std::vector<std::size_t> pivots;  // pivot columns, original indexing
    std::size_t rank = 0;
    OpCounter ops;
};

// Reduced row-echelon form with columns visited in column_order.
// Pivot choice is the first nonzero entry scanning rows top-down, so the
// operation counts are deterministic.
RrefResult rref(const FqMatrix& m, std::span<const std::size_t> column_order);
RrefResult rref(const FqMatrix& m);

std::size_t rank(const FqMatrix& m);

FqMatrix mat_mul(const FqMatrix& a, const FqMatrix& b);

// y = M x^T for a row vector x.
std::vector<FieldElem> mat_vec_mul(const FqMatrix& m, std::span<const FieldElem> x);

// Rows span the right null space of h; row count = h.cols - rank(h).
FqMatrix kernel_basis(const FqMatrix& h);

// Determinant of a square matrix.
FieldElem determinant(const FqMatrix& m);

// Matrix text format: first line "rows cols m", then one row per line with
// hex entries separated by single spaces. Round-trips bit-exactly.
std::string matrix_to_text(const FqMatrix& m);
FqMatrix matrix_from_text(const std::string& text);
void save_matrix(const FqMatrix& m, const std::string& path);
FqMatrix load_matrix(const std::string& path);

std::size_t hamming_weight(std::span<const FieldElem> v);

} // namespace grasscode
