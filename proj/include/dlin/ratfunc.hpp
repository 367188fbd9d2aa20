#ifndef DLIN_RATFUNC_HPP
#define DLIN_RATFUNC_HPP

#include "dlin/poly.hpp"

#include <string>

namespace dlin {

/// Element of Q(z) in canonical form: reduced fraction, monic denominator.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::constant(Rational(1))) {}
    RatFunc(const Rational& c) : num_(Poly::constant(c)), den_(Poly::constant(Rational(1))) {}
    explicit RatFunc(const Poly& p) : num_(p), den_(Poly::constant(Rational(1))) {}
    /// Throws ZeroDenominator when den = 0.
    RatFunc(const Poly& num, const Poly& den);

    static RatFunc variable() { return RatFunc(Poly::variable()); }

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }

    RatFunc inv() const;
    RatFunc derivative() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    struct Canonical {};
    RatFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

/// Reduces num/den to canonical form. Throws ZeroDenominator when den = 0.
RatFunc normalize_ratfunc(const Poly& num, const Poly& den);

/// Integer-coefficient fraction text, e.g. "(z^2-1)/(2*z+3)".
std::string to_string(const RatFunc& f);

} // namespace dlin

#endif
