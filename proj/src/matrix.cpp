#include "dlin/matrix.hpp"

#include "dlin/error.hpp"

#include <utility>

namespace dlin {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, FieldElem::zero(field)) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<FieldElem> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw Error(ErrorKind::ArityMismatch, "matrix entry count does not match its shape");
    }
    for (const auto& e : entries_) {
        require_same_field(field_, e.field());
    }
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) {
        throw Error(ErrorKind::ArityMismatch, "vector length does not match matrix columns");
    }
    Vector out(rows_, FieldElem::zero(field_));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!(*this)(r, c).is_zero() && !v[c].is_zero()) {
                out[r] += (*this)(r, c) * v[c];
            }
        }
    }
    return out;
}

namespace {

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
    FieldElem det_factor;
};

// Reduced row echelon form by fraction-based Gauss-Jordan elimination. The
// pivot in each column is the first row with a nonzero entry.
Echelon rref(Matrix m) {
    FieldElem det = FieldElem::one(m.field());
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        if (p != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                std::swap(m(p, c), m(row, c));
            }
            det = -det;
        }
        const FieldElem piv = m(row, col);
        det *= piv;
        const FieldElem inv = piv.inv();
        for (std::size_t c = col; c < m.cols(); ++c) {
            if (!m(row, c).is_zero()) {
                m(row, c) *= inv;
            }
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) {
                continue;
            }
            const FieldElem f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (!m(row, c).is_zero()) {
                    m(r, c) -= f * m(row, c);
                }
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots), det};
}

} // namespace

std::vector<Vector> nullspace(const Matrix& m) {
    const Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_cols) {
        is_pivot[c] = true;
    }
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        Vector v(m.cols(), FieldElem::zero(m.field()));
        v[f] = FieldElem::one(m.field());
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
            v[e.pivot_cols[i]] = -e.reduced(i, f);
        }
        std::size_t lead = 0;
        while (v[lead].is_zero()) {
            ++lead;
        }
        if (!v[lead].is_one()) {
            const FieldElem s = v[lead].inv();
            for (auto& x : v) {
                x *= s;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

FieldElem determinant(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::ArityMismatch, "determinant of a non-square matrix");
    }
    const Echelon e = rref(m);
    if (e.pivot_cols.size() < m.rows()) {
        return FieldElem::zero(m.field());
    }
    return e.det_factor;
}

} // namespace dlin
