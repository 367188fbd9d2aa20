#include "dlin/ratfunc.hpp"

#include "dlin/error.hpp"

#include <algorithm>

namespace dlin {

namespace {

bool is_one(const Poly& p) { return p.degree() == 0 && p.lead() == 1; }

std::size_t term_count(const Poly& p) {
    return static_cast<std::size_t>(
        std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Rational& c) { return c != 0; }));
}

} // namespace

RatFunc normalize_ratfunc(const Poly& num, const Poly& den) { return RatFunc(num, den); }

RatFunc::RatFunc(const Poly& num, const Poly& den) {
    if (den.is_zero()) {
        throw Error(ErrorKind::ZeroDenominator, "rational function with zero denominator");
    }
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly::constant(Rational(1));
        return;
    }
    Poly g = gcd(num, den);
    Poly n = is_one(g) ? num : exact_div(num, g);
    Poly d = is_one(g) ? den : exact_div(den, g);
    const Rational lc = d.lead();
    if (lc != 1) {
        const Rational s = Rational(1) / lc;
        n *= s;
        d *= s;
    }
    num_ = std::move(n);
    den_ = std::move(d);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    }
    // Already coprime; only the leading coefficient needs fixing.
    Poly n = den_;
    Poly d = num_;
    const Rational s = Rational(1) / d.lead();
    n *= s;
    d *= s;
    return RatFunc(std::move(n), std::move(d), Canonical{});
}

RatFunc RatFunc::derivative() const {
    if (num_.is_zero() || (num_.is_constant() && den_.is_constant())) {
        return RatFunc();
    }
    if (den_.is_constant()) {
        return RatFunc(num_.derivative(), Poly::constant(Rational(1)), Canonical{});
    }
    // (n/d)' = (n'd - nd')/d^2; any common factor divides d.
    Poly top = num_.derivative() * den_ - num_ * den_.derivative();
    return RatFunc(top, den_ * den_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    if (a.den_ == b.den_) {
        if (a.den_.is_constant()) {
            return RatFunc(a.num_ + b.num_, a.den_, RatFunc::Canonical{});
        }
        return RatFunc(a.num_ + b.num_, a.den_);
    }
    Poly g = gcd(a.den_, b.den_);
    if (is_one(g)) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    Poly ad = exact_div(a.den_, g);
    Poly bd = exact_div(b.den_, g);
    return RatFunc(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, RatFunc::Canonical{}); }

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) {
        return RatFunc();
    }
    // Cross-cancel so the product is already reduced.
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    Poly n1 = is_one(g1) ? a.num_ : exact_div(a.num_, g1);
    Poly d2 = is_one(g1) ? b.den_ : exact_div(b.den_, g1);
    Poly n2 = is_one(g2) ? b.num_ : exact_div(b.num_, g2);
    Poly d1 = is_one(g2) ? a.den_ : exact_div(a.den_, g2);
    Poly n = n1 * n2;
    Poly d = d1 * d2;
    const Rational lc = d.lead();
    if (lc != 1) {
        const Rational s = Rational(1) / lc;
        n *= s;
        d *= s;
    }
    return RatFunc(std::move(n), std::move(d), RatFunc::Canonical{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "division by zero");
    }
    return a * b.inv();
}

std::string to_string(const RatFunc& f) {
    if (f.is_zero()) {
        return "0";
    }
    // One positive scale that makes num and den integral and jointly primitive.
    std::vector<Rational> all = f.num().coeffs();
    all.insert(all.end(), f.den().coeffs().begin(), f.den().coeffs().end());
    Rational s = primitive_scale(Poly(std::move(all)));
    if (s < 0) {
        s = -s;
    }
    const Poly n = f.num() * s;
    const Poly d = f.den() * s;
    std::string ns = to_string(n);
    if (d.degree() == 0 && d.lead() == 1) {
        return ns;
    }
    if (term_count(n) > 1) {
        ns = "(" + ns + ")";
    }
    std::string ds = to_string(d);
    const bool den_bare = d.degree() == 0 || (d.lead() == 1 && term_count(d) == 1);
    if (!den_bare) {
        ds = "(" + ds + ")";
    }
    return ns + "/" + ds;
}

} // namespace dlin
