#ifndef DLIN_MATRIX_HPP
#define DLIN_MATRIX_HPP

#include "dlin/field.hpp"

#include <cstddef>
#include <vector>

namespace dlin {

using Vector = std::vector<FieldElem>;

/// Dense row-major matrix over one field.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    /// Throws FieldMismatch unless every entry lives in `field`.
    Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<FieldElem> entries);

    Field field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FieldElem& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const FieldElem& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Vector apply(const Vector& v) const;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElem> entries_;
};

/// Basis of the right nullspace; each vector has its first nonzero entry equal
/// to 1. Empty iff the columns are independent (or there are no columns).
std::vector<Vector> nullspace(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Square matrices only.
FieldElem determinant(const Matrix& m);

} // namespace dlin

#endif
