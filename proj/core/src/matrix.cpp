#include "grasscode/matrix.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace grasscode {

FqMatrix::FqMatrix(std::size_t rows, std::size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field), a_(rows * cols, 0) {}

FqMatrix::FqMatrix(std::size_t rows, std::size_t cols, std::vector<FieldElem> entries,
                   FieldSpec field)
    : rows_(rows), cols_(cols), field_(field), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
        throw std::invalid_argument("entry count does not match rows*cols");
    Gf gf(field_);
    for (FieldElem e : a_)
        if (!gf.valid(e)) throw std::invalid_argument("entry is not a valid field element");
}

FqMatrix FqMatrix::identity(std::size_t n, FieldSpec field) {
    FqMatrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FqMatrix FqMatrix::zero(std::size_t rows, std::size_t cols, FieldSpec field) {
    return FqMatrix(rows, cols, field);
}

FqMatrix FqMatrix::transpose() const {
    FqMatrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

FqMatrix FqMatrix::columns(std::span<const std::size_t> idx) const {
    FqMatrix s(rows_, idx.size(), field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < idx.size(); ++j) s.at(r, j) = at(r, idx[j]);
    return s;
}

void FqMatrix::append_column(std::span<const FieldElem> col) {
    if (col.size() != rows_) throw std::invalid_argument("column length mismatch");
    std::vector<FieldElem> b((cols_ + 1) * rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::copy_n(a_.data() + r * cols_, cols_, b.data() + r * (cols_ + 1));
        b[r * (cols_ + 1) + cols_] = col[r];
    }
    a_ = std::move(b);
    ++cols_;
}

bool FqMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](FieldElem e) { return e == 0; });
}

RrefResult rref(const FqMatrix& m, std::span<const std::size_t> column_order) {
    if (column_order.size() != m.cols())
        throw std::invalid_argument("column_order size does not match matrix columns");
    {
        std::vector<bool> seen(m.cols(), false);
        for (std::size_t c : column_order) {
            if (c >= m.cols() || seen[c])
                throw std::invalid_argument("column_order is not a permutation");
            seen[c] = true;
        }
    }

    RrefResult res;
    res.reduced = m;
    FqMatrix& a = res.reduced;
    Gf gf(m.field());
    const std::size_t nrows = m.rows();

    std::size_t pivot_row = 0;
    for (std::size_t oc = 0; oc < column_order.size() && pivot_row < nrows; ++oc) {
        const std::size_t c = column_order[oc];
        // first nonzero entry scanning top-down from pivot_row
        std::size_t pr = pivot_row;
        while (pr < nrows && a.at(pr, c) == 0) ++pr;
        if (pr == nrows) continue;
        if (pr != pivot_row) {
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a.at(pr, j), a.at(pivot_row, j));
            ++res.ops.row_swaps;
        }
        FieldElem p = a.at(pivot_row, c);
        if (p != 1) {
            FieldElem pinv = gf.inv(p);
            for (std::size_t j = 0; j < a.cols(); ++j)
                a.at(pivot_row, j) = gf.mul(a.at(pivot_row, j), pinv);
            ++res.ops.row_scalings;
        }
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == pivot_row) continue;
            FieldElem f = a.at(r, c);
            if (f == 0) continue;
            for (std::size_t j = 0; j < a.cols(); ++j)
                a.at(r, j) = Gf::sub(a.at(r, j), gf.mul(f, a.at(pivot_row, j)));
            ++res.ops.row_additions;
        }
        res.pivots.push_back(c);
        ++pivot_row;
    }
    res.rank = res.pivots.size();
    return res;
}

RrefResult rref(const FqMatrix& m) {
    std::vector<std::size_t> order(m.cols());
    std::iota(order.begin(), order.end(), std::size_t(0));
    return rref(m, order);
}

std::size_t rank(const FqMatrix& m) { return rref(m).rank; }

FqMatrix mat_mul(const FqMatrix& a, const FqMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in mat_mul");
    if (!(a.field() == b.field())) throw std::invalid_argument("field mismatch in mat_mul");
    Gf gf(a.field());
    FqMatrix c(a.rows(), b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            FieldElem aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = Gf::add(c.at(i, j), gf.mul(aik, b.at(k, j)));
        }
    return c;
}

std::vector<FieldElem> mat_vec_mul(const FqMatrix& m, std::span<const FieldElem> x) {
    if (x.size() != m.cols()) throw std::invalid_argument("dimension mismatch in mat_vec_mul");
    Gf gf(m.field());
    std::vector<FieldElem> y(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        FieldElem acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (x[j] != 0) acc = Gf::add(acc, gf.mul(m.at(i, j), x[j]));
        y[i] = acc;
    }
    return y;
}

FqMatrix kernel_basis(const FqMatrix& h) {
    RrefResult r = rref(h);
    const std::size_t n = h.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    FqMatrix basis(free_cols.size(), n, h.field());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        const std::size_t fc = free_cols[i];
        basis.at(i, fc) = 1;
        for (std::size_t pi = 0; pi < r.pivots.size(); ++pi) {
            // pivot row pi has a 1 in column pivots[pi]; solving gives -entry.
            basis.at(i, r.pivots[pi]) = r.reduced.at(pi, fc);  // char 2: -x = x
        }
    }
    return basis;
}

FieldElem determinant(const FqMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    FqMatrix a = m;
    Gf gf(m.field());
    const std::size_t n = a.rows();
    FieldElem det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pr = c;
        while (pr < n && a.at(pr, c) == 0) ++pr;
        if (pr == n) return 0;
        if (pr != c)
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(pr, j), a.at(c, j));
        // char 2: swaps do not flip the sign
        FieldElem p = a.at(c, c);
        det = gf.mul(det, p);
        FieldElem pinv = gf.inv(p);
        for (std::size_t r = c + 1; r < n; ++r) {
            FieldElem f = a.at(r, c);
            if (f == 0) continue;
            FieldElem fp = gf.mul(f, pinv);
            for (std::size_t j = c; j < n; ++j)
                a.at(r, j) = Gf::sub(a.at(r, j), gf.mul(fp, a.at(c, j)));
        }
    }
    return det;
}

std::string matrix_to_text(const FqMatrix& m) {
    std::ostringstream os;
    os << m.rows() << ' ' << m.cols() << ' ' << m.field().m << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            os << field_elem_to_hex(m.at(r, c));
        }
        os << '\n';
    }
    return os.str();
}

FqMatrix matrix_from_text(const std::string& text) {
    std::istringstream is(text);
    std::size_t rows = 0, cols = 0;
    unsigned m = 0;
    if (!(is >> rows >> cols >> m)) throw std::invalid_argument("bad matrix header");
    FieldSpec fs = FieldSpec::gf2m(m);
    std::vector<FieldElem> entries;
    entries.reserve(rows * cols);
    std::string tok;
    for (std::size_t i = 0; i < rows * cols; ++i) {
        if (!(is >> tok)) throw std::invalid_argument("matrix text truncated");
        entries.push_back(field_elem_from_hex(tok));
    }
    return FqMatrix(rows, cols, std::move(entries), fs);
}

void save_matrix(const FqMatrix& m, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open for writing: " + path);
    f << matrix_to_text(m);
}

FqMatrix load_matrix(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return matrix_from_text(ss.str());
}

std::size_t hamming_weight(std::span<const FieldElem> v) {
    std::size_t w = 0;
    for (FieldElem e : v)
        if (e != 0) ++w;
    return w;
}

} // namespace grasscode
