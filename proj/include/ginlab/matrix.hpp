#ifndef GINLAB_MATRIX_HPP
#define GINLAB_MATRIX_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ginlab/field.hpp"

namespace ginlab {

// Sparse column: (row, coefficient) pairs sorted by row, no zero coefficients.
using SparseVec = std::vector<std::pair<int, Scalar>>;

// Dense exact matrix, row-major. Mutations stop once a matrix reaches the
// linear-algebra entry points below; all of those are pure.
class DenseMatrix {
public:
    DenseMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

    static DenseMatrix identity(FieldSpec field, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Scalar v) { entries_[r * cols_ + c] = std::move(v); }

    DenseMatrix transpose() const;
    SparseVec column(std::size_t c) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& x) const; // m * x

    bool equals(const DenseMatrix& o) const;

private:
    FieldSpec field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> entries_;
};

// Incremental exact column echelon. Stored basis columns are monic at their
// pivot row (the smallest-index nonzero row after reduction) and pivots are
// only ever chosen among rows < pivot_row_limit, so callers can append
// bookkeeping rows beyond the limit to track combinations.
//
// Insertion order is the caller's column order; together with exact
// arithmetic this makes every result deterministic.
class ColumnEchelon {
public:
    ColumnEchelon(FieldSpec field, int pivot_row_limit);

    // Reduces col against the basis (entries below the limit only).
    SparseVec reduce(SparseVec col) const;

    // Inserts a column. Returns std::nullopt when the rank grew; otherwise the
    // fully reduced residual, which is zero on all pivot-eligible rows.
    std::optional<SparseVec> insert(SparseVec col);

    bool in_span(const SparseVec& col) const; // residual zero below the limit
    int rank() const { return static_cast<int>(basis_.size()); }

private:
    FieldSpec field_;
    int limit_;
    std::map<int, SparseVec> basis_; // pivot row -> monic column
};

// Sparse column-major matrix used by the homology pipeline.
struct SparseMat {
    int rows = 0;
    int cols = 0;
    std::vector<SparseVec> col;

    SparseMat() = default;
    SparseMat(int r, int c) : rows(r), cols(c), col(static_cast<std::size_t>(c)) {}
};

SparseVec sparse_axpy(const FieldSpec& f, const SparseVec& x, const Scalar& c, const SparseVec& y); // x + c*y
SparseVec sparse_scale(const FieldSpec& f, const SparseVec& x, const Scalar& c);
SparseVec sparse_apply(const FieldSpec& f, const SparseMat& m, const SparseVec& x); // m * x

std::size_t rank(const DenseMatrix& m);
std::size_t rank(const SparseMat& m, const FieldSpec& f);

// Columns form a basis of the right null space; count == cols - rank(m).
DenseMatrix kernel_basis(const DenseMatrix& m);
std::vector<SparseVec> kernel_basis(const SparseMat& m, const FieldSpec& f);

// Some x with m*x == v, or nullopt when v is outside the column span.
std::optional<std::vector<Scalar>> solve_membership(const DenseMatrix& m, const std::vector<Scalar>& v);

DenseMatrix inverse(const DenseMatrix& m); // throws errc::input when singular

DenseMatrix to_dense(const SparseMat& m, const FieldSpec& f);

} // namespace ginlab

#endif
