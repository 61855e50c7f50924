#include "mrlocal/matrix.hpp"

#include <stdexcept>

namespace mrlocal {

FMatrix::FMatrix(size_t rows, size_t cols, const FieldRef& spec)
    : rows_(rows), cols_(cols), spec_(spec) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
    entries_.assign(rows * cols, spec->zero());
}

FMatrix FMatrix::transpose() const {
    FMatrix out(cols_, rows_, spec_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

FMatrix FMatrix::select_columns(const std::vector<uint32_t>& cols) const {
    FMatrix out(rows_, cols.size(), spec_);
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= cols_) throw std::out_of_range("column index out of range");
        for (size_t r = 0; r < rows_; ++r) out.at(r, j) = at(r, cols[j]);
    }
    return out;
}

std::vector<FieldElement> FMatrix::apply(const std::vector<FieldElement>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<FieldElement> out;
    out.reserve(rows_);
    for (size_t r = 0; r < rows_; ++r) {
        FieldElement acc = spec_->zero();
        for (size_t c = 0; c < cols_; ++c) acc = acc + at(r, c) * v[c];
        out.push_back(std::move(acc));
    }
    return out;
}

bool FMatrix::operator==(const FMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

ReducedForm rref(const FMatrix& m) {
    ReducedForm out{m, {}};
    FMatrix& a = out.m;
    size_t lead = 0;
    for (size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        size_t pivot = lead;
        while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != lead)
            for (size_t c = 0; c < a.cols(); ++c) std::swap(a.at(pivot, c), a.at(lead, c));
        FieldElement inv = a.at(lead, col).inv();
        for (size_t c = col; c < a.cols(); ++c) a.at(lead, c) = a.at(lead, c) * inv;
        for (size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || a.at(r, col).is_zero()) continue;
            FieldElement f = a.at(r, col);
            for (size_t c = col; c < a.cols(); ++c)
                a.at(r, c) = a.at(r, c) - f * a.at(lead, c);
        }
        out.pivot_cols.push_back(col);
        ++lead;
    }
    return out;
}

size_t rank(const FMatrix& m) { return rref(m).pivot_cols.size(); }

std::vector<std::vector<FieldElement>> null_space_basis(const FMatrix& m) {
    ReducedForm rf = rref(m);
    const FieldRef& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : rf.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<FieldElement>> basis;
    for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<FieldElement> v(m.cols(), f->zero());
        v[free_col] = f->one();
        for (size_t i = 0; i < rf.pivot_cols.size(); ++i)
            v[rf.pivot_cols[i]] = -rf.m.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolve solve(const FMatrix& a, const std::vector<FieldElement>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
    const FieldRef& f = a.field();
    FMatrix aug(a.rows(), a.cols() + 1, f);
    for (size_t r = 0; r < a.rows(); ++r) {
        for (size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    ReducedForm rf = rref(aug);

    LinearSolve out;
    for (size_t c : rf.pivot_cols) {
        if (c == a.cols()) {
            out.status = LinearSolve::Status::Inconsistent;
            return out;
        }
    }
    size_t rk = rf.pivot_cols.size();
    out.nullity = a.cols() - rk;
    out.status = out.nullity == 0 ? LinearSolve::Status::Unique
                                  : LinearSolve::Status::Underdetermined;
    out.x.assign(a.cols(), f->zero());
    for (size_t i = 0; i < rk; ++i) out.x[rf.pivot_cols[i]] = rf.m.at(i, a.cols());
    return out;
}

FieldElement det(const FMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant needs a square matrix");
    FMatrix a = m;
    const FieldRef& f = m.field();
    size_t n = a.rows();
    FieldElement scale = f->one();
    bool negate = false;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return f->zero();
        if (pivot != col) {
            for (size_t c = 0; c < n; ++c) std::swap(a.at(pivot, c), a.at(col, c));
            negate = !negate;
        }
        scale = scale * a.at(col, col);
        FieldElement inv = a.at(col, col).inv();
        for (size_t r = col + 1; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            FieldElement factor = a.at(r, col) * inv;
            for (size_t c = col; c < n; ++c)
                a.at(r, c) = a.at(r, c) - factor * a.at(col, c);
        }
    }
    return negate ? -scale : scale;
}

FieldElement det_laplace(const FMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant needs a square matrix");
    const FieldRef& f = m.field();
    size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    FieldElement acc = f->zero();
    for (size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        FMatrix minor(n - 1, n - 1, f);
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        FieldElement term = m.at(0, j) * det_laplace(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace mrlocal
