#include "dlin/poly.hpp"

#include "dlin/error.hpp"

#include <algorithm>
#include <sstream>

namespace dlin {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    }
    return Poly(std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) {
        return {};
    }
    Poly r = *this;
    if (lead() != 1) {
        r *= Rational(1) / lead();
    }
    return r;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) {
        c *= s;
    }
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Poly(std::move(v));
}

Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) {
        c = -c;
    }
    return a;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    }
    if (a.degree() < b.degree()) {
        return {Poly(), a};
    }
    std::vector<Rational> r = a.coeffs_;
    std::vector<Rational> q(a.coeffs_.size() - b.coeffs_.size() + 1);
    const Rational inv_lead = Rational(1) / b.lead();
    const std::size_t db = b.coeffs_.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
        const Rational f = r[k + db] * inv_lead;
        q[k] = f;
        if (f == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= db; ++j) {
            r[k + j] -= f * b.coeffs_[j];
        }
    }
    r.resize(db);
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = Poly::divrem(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

Poly exact_div(const Poly& a, const Poly& b) { return Poly::divrem(a, b).first; }

Rational primitive_scale(const Poly& p) {
    if (p.is_zero()) {
        return Rational(1);
    }
    Integer den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Integer num_gcd = 0;
    for (const auto& c : p.coeffs()) {
        Integer v = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
    }
    Rational s(den_lcm, num_gcd);
    s.canonicalize();
    return s;
}

std::string to_string(const Poly& p, char var) {
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const Rational& c = p.coeffs()[i];
        if (c == 0) {
            continue;
        }
        const Rational mag = abs(c);
        if (c < 0) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) {
            os << mag.get_str() << '*';
        }
        os << var;
        if (i > 1) {
            os << '^' << i;
        }
    }
    return os.str();
}

} // namespace dlin
