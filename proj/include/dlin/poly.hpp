#ifndef DLIN_POLY_HPP
#define DLIN_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace dlin {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial over the rationals, lowest degree first.
/// The coefficient list never carries trailing zeros; the empty list is 0.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, std::size_t degree);
    static Poly variable() { return monomial(Rational(1), 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const Rational& lead() const { return coeffs_.back(); }

    Poly derivative() const;
    Poly monic() const;
    Rational eval(const Rational& x) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator-(Poly a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division a = q*b + r, deg r < deg b.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// Exact quotient; b must divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Scales p by a positive rational so that all coefficients are integers with
/// gcd 1 (primitive part, sign preserved). Returns the scale factor used.
Rational primitive_scale(const Poly& p);

/// Integer-coefficient text in the variable `var`, highest degree first,
/// e.g. "3*z^2-z+1". The polynomial must have integer coefficients.
std::string to_string(const Poly& p, char var = 'z');

} // namespace dlin

#endif
