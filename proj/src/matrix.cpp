#include "ginlab/matrix.hpp"

#include <algorithm>

namespace ginlab {

DenseMatrix::DenseMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

DenseMatrix DenseMatrix::identity(FieldSpec field, std::size_t n) {
    DenseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
    return m;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

SparseVec DenseMatrix::column(std::size_t c) const {
    SparseVec v;
    for (std::size_t r = 0; r < rows_; ++r)
        if (!field_.is_zero(at(r, c))) v.emplace_back(static_cast<int>(r), at(r, c));
    return v;
}

std::vector<Scalar> DenseMatrix::apply(const std::vector<Scalar>& x) const {
    require(x.size() == cols_, errc::internal, "matrix apply: size mismatch");
    std::vector<Scalar> y(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!field_.is_zero(at(r, c))) y[r] = field_.add(y[r], field_.mul(at(r, c), x[c]));
    return y;
}

bool DenseMatrix::equals(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!field_.eq(entries_[i], o.entries_[i])) return false;
    return true;
}

SparseVec sparse_axpy(const FieldSpec& f, const SparseVec& x, const Scalar& c, const SparseVec& y) {
    SparseVec out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i].first < y[j].first) {
            out.push_back(x[i++]);
        } else if (x[i].first > y[j].first) {
            Scalar v = f.mul(c, y[j].second);
            if (!f.is_zero(v)) out.emplace_back(y[j].first, std::move(v));
            ++j;
        } else {
            Scalar v = f.add(x[i].second, f.mul(c, y[j].second));
            if (!f.is_zero(v)) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    for (; i < x.size(); ++i) out.push_back(x[i]);
    for (; j < y.size(); ++j) {
        Scalar v = f.mul(c, y[j].second);
        if (!f.is_zero(v)) out.emplace_back(y[j].first, std::move(v));
    }
    return out;
}

SparseVec sparse_scale(const FieldSpec& f, const SparseVec& x, const Scalar& c) {
    SparseVec out;
    if (f.is_zero(c)) return out;
    out.reserve(x.size());
    for (const auto& [r, v] : x) out.emplace_back(r, f.mul(v, c));
    return out;
}

SparseVec sparse_apply(const FieldSpec& f, const SparseMat& m, const SparseVec& x) {
    SparseVec out;
    for (const auto& [c, v] : x) {
        require(c < m.cols, errc::internal, "sparse apply: index out of range");
        out = sparse_axpy(f, out, v, m.col[static_cast<std::size_t>(c)]);
    }
    return out;
}

ColumnEchelon::ColumnEchelon(FieldSpec field, int pivot_row_limit)
    : field_(field), limit_(pivot_row_limit) {}

SparseVec ColumnEchelon::reduce(SparseVec col) const {
    for (;;) {
        auto lead = std::find_if(col.begin(), col.end(),
                                 [&](const auto& e) { return e.first < limit_; });
        if (lead == col.end()) return col;
        auto hit = basis_.find(lead->first);
        if (hit == basis_.end()) return col;
        col = sparse_axpy(field_, col, field_.neg(lead->second), hit->second);
    }
}

std::optional<SparseVec> ColumnEchelon::insert(SparseVec col) {
    col = reduce(std::move(col));
    auto lead = std::find_if(col.begin(), col.end(),
                             [&](const auto& e) { return e.first < limit_; });
    if (lead == col.end()) return col;
    int pivot = lead->first;
    Scalar inv = field_.inv(lead->second);
    basis_.emplace(pivot, sparse_scale(field_, col, inv));
    return std::nullopt;
}

bool ColumnEchelon::in_span(const SparseVec& col) const {
    SparseVec r = reduce(col);
    return std::none_of(r.begin(), r.end(), [&](const auto& e) { return e.first < limit_; });
}

namespace {

// Shared elimination core: inserts the columns of m, each carrying an identity
// tail at rows rows+j, and reports rank plus the kernel combinations.
struct Eliminated {
    ColumnEchelon ech;
    std::vector<SparseVec> kernel; // combinations x with m*x == 0, tail rows shifted back
};

Eliminated eliminate_tracked(const SparseMat& m, const FieldSpec& f) {
    Eliminated out{ColumnEchelon(f, m.rows), {}};
    for (int j = 0; j < m.cols; ++j) {
        SparseVec aug = m.col[static_cast<std::size_t>(j)];
        aug.emplace_back(m.rows + j, f.one());
        if (auto residual = out.ech.insert(std::move(aug))) {
            SparseVec combo;
            for (const auto& [r, v] : *residual)
                if (r >= m.rows) combo.emplace_back(r - m.rows, v);
            // normalize monic at the first coordinate for reproducible output
            if (!combo.empty()) {
                Scalar inv = f.inv(combo.front().second);
                combo = sparse_scale(f, combo, inv);
            }
            out.kernel.push_back(std::move(combo));
        }
    }
    return out;
}

SparseMat dense_to_sparse(const DenseMatrix& m) {
    SparseMat s(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
    for (std::size_t c = 0; c < m.cols(); ++c) s.col[c] = m.column(c);
    return s;
}

} // namespace

std::size_t rank(const SparseMat& m, const FieldSpec& f) {
    ColumnEchelon ech(f, m.rows);
    for (const auto& c : m.col) ech.insert(c);
    return static_cast<std::size_t>(ech.rank());
}

std::size_t rank(const DenseMatrix& m) { return rank(dense_to_sparse(m), m.field()); }

std::vector<SparseVec> kernel_basis(const SparseMat& m, const FieldSpec& f) {
    return eliminate_tracked(m, f).kernel;
}

DenseMatrix kernel_basis(const DenseMatrix& m) {
    auto vecs = kernel_basis(dense_to_sparse(m), m.field());
    DenseMatrix out(m.field(), m.cols(), vecs.size());
    for (std::size_t j = 0; j < vecs.size(); ++j)
        for (const auto& [r, v] : vecs[j]) out.set(static_cast<std::size_t>(r), j, v);
    return out;
}

std::optional<std::vector<Scalar>> solve_membership(const DenseMatrix& m, const std::vector<Scalar>& v) {
    require(v.size() == m.rows(), errc::input, "solve_membership: vector length != rows");
    const FieldSpec& f = m.field();
    SparseMat s = dense_to_sparse(m);
    ColumnEchelon ech(f, s.rows);
    for (int j = 0; j < s.cols; ++j) {
        SparseVec aug = s.col[static_cast<std::size_t>(j)];
        aug.emplace_back(s.rows + j, f.one());
        ech.insert(std::move(aug));
    }
    SparseVec rhs;
    for (std::size_t r = 0; r < v.size(); ++r)
        if (!f.is_zero(v[r])) rhs.emplace_back(static_cast<int>(r), v[r]);
    SparseVec residual = ech.reduce(std::move(rhs));
    std::vector<Scalar> x(m.cols(), f.zero());
    for (const auto& [r, val] : residual) {
        if (r < s.rows) return std::nullopt; // not in the column span
        x[static_cast<std::size_t>(r - s.rows)] = f.neg(val);
    }
    return x;
}

DenseMatrix inverse(const DenseMatrix& m) {
    require(m.rows() == m.cols(), errc::input, "inverse: matrix not square");
    DenseMatrix out(m.field(), m.rows(), m.rows());
    for (std::size_t j = 0; j < m.rows(); ++j) {
        std::vector<Scalar> e(m.rows(), m.field().zero());
        e[j] = m.field().one();
        auto x = solve_membership(m, e);
        require(x.has_value(), errc::input, "inverse: matrix is singular");
        for (std::size_t r = 0; r < m.rows(); ++r) out.set(r, j, (*x)[r]);
    }
    return out;
}

DenseMatrix to_dense(const SparseMat& m, const FieldSpec& f) {
    DenseMatrix out(f, static_cast<std::size_t>(m.rows), static_cast<std::size_t>(m.cols));
    for (int j = 0; j < m.cols; ++j)
        for (const auto& [r, v] : m.col[static_cast<std::size_t>(j)])
            out.set(static_cast<std::size_t>(r), static_cast<std::size_t>(j), v);
    return out;
}

} // namespace ginlab
