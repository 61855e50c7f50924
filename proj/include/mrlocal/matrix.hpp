// Dense exact linear algebra over one FieldSpec. Elimination picks the first
// nonzero pivot in column order; with exact arithmetic that is all the
// pivoting needed, and it keeps every reduced form canonical.

#ifndef MRLOCAL_MATRIX_HPP
#define MRLOCAL_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "mrlocal/gf.hpp"

namespace mrlocal {

class FMatrix {
public:
    FMatrix() = default;  // empty 0x0; assign before use
    FMatrix(size_t rows, size_t cols, const FieldRef& spec);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldRef& field() const { return spec_; }

    FieldElement& at(size_t r, size_t c) { return entries_[r * cols_ + c]; }
    const FieldElement& at(size_t r, size_t c) const { return entries_[r * cols_ + c]; }

    FMatrix transpose() const;
    FMatrix select_columns(const std::vector<uint32_t>& cols) const;

    /// Matrix-vector product.
    std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

    bool operator==(const FMatrix& rhs) const;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    FieldRef spec_;
    std::vector<FieldElement> entries_;
};

struct ReducedForm {
    FMatrix m;
    std::vector<size_t> pivot_cols;
};

ReducedForm rref(const FMatrix& m);
size_t rank(const FMatrix& m);

/// Basis of {x : m*x = 0} in the canonical parameterization: one vector per
/// free column, that free variable set to one, later free variables zero.
std::vector<std::vector<FieldElement>> null_space_basis(const FMatrix& m);

struct LinearSolve {
    enum class Status { Unique, Underdetermined, Inconsistent };
    Status status = Status::Inconsistent;
    /// A particular solution when the system is consistent (free vars zero).
    std::vector<FieldElement> x;
    size_t nullity = 0;

    bool consistent() const { return status != Status::Inconsistent; }
};

LinearSolve solve(const FMatrix& a, const std::vector<FieldElement>& b);

/// Determinant by elimination.
FieldElement det(const FMatrix& m);

/// Determinant by cofactor expansion along the first row. Exponential in the
/// size; meant as an independent cross-check for matrices up to ~5x5.
FieldElement det_laplace(const FMatrix& m);

}  // namespace mrlocal

#endif
