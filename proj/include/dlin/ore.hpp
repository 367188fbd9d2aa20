#ifndef DLIN_ORE_HPP
#define DLIN_ORE_HPP

#include "dlin/field.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace dlin {

/// Skew polynomial sum_i Y^i c_i in K[Y; d], with the defining relation
/// xY = Yx + d(x). Coefficients are the right coefficients c_0..c_d; the
/// leading one is never zero and the empty list is the zero polynomial.
class OrePoly {
public:
    explicit OrePoly(Field field) : field_(field) {}
    /// Throws FieldMismatch if some coefficient is not in `field`.
    OrePoly(Field field, std::vector<FieldElem> coeffs);

    static OrePoly constant(const FieldElem& c);
    /// Y^n.
    static OrePoly y_power(Field field, std::size_t n);

    Field field() const noexcept { return field_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }
    const std::vector<FieldElem>& coeffs() const noexcept { return coeffs_; }
    FieldElem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : FieldElem::zero(field_); }
    const FieldElem& lead() const { return coeffs_.back(); }

    OrePoly& operator+=(const OrePoly& rhs);
    OrePoly& operator-=(const OrePoly& rhs);
    friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
    friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }
    friend OrePoly operator-(const OrePoly& a);
    friend bool operator==(const OrePoly& a, const OrePoly& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

private:
    void trim();

    Field field_;
    std::vector<FieldElem> coeffs_;
};

/// Product in K[Y; d]: Y^i a * Y^j b = sum_k C(j,k) Y^(i+k) d^(j-k)(a) b.
OrePoly ore_mul(const OrePoly& a, const OrePoly& b);

/// Right scaling by a field element: (sum Y^i c_i) u = sum Y^i (c_i u).
OrePoly ore_scale_right(const OrePoly& p, const FieldElem& u);

/// Left multiplication by a field element, rewritten into right-coefficient
/// form: x Y^n = sum_k C(n,k) Y^k d^(n-k)(x).
OrePoly ore_scale_left(const FieldElem& x, const OrePoly& p);

struct OreDivRem {
    OrePoly quotient;
    OrePoly remainder;
};

/// a = b * quotient + remainder with deg remainder < deg b (b a left factor).
/// Throws DivisionByZero when b = 0.
OreDivRem ore_right_divrem(const OrePoly& a, const OrePoly& b);

/// p right-multiplied by the inverse of its leading coefficient.
/// Throws ZeroPolynomial when p = 0.
OrePoly ore_monic(const OrePoly& p);

} // namespace dlin

#endif
