#include "dlin/ore.hpp"

#include "dlin/error.hpp"

namespace dlin {

OrePoly::OrePoly(Field field, std::vector<FieldElem> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
        require_same_field(field_, c.field());
    }
    trim();
}

void OrePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

OrePoly OrePoly::constant(const FieldElem& c) { return OrePoly(c.field(), {c}); }

OrePoly OrePoly::y_power(Field field, std::size_t n) {
    std::vector<FieldElem> v(n + 1, FieldElem::zero(field));
    v[n] = FieldElem::one(field);
    return OrePoly(field, std::move(v));
}

OrePoly& OrePoly::operator+=(const OrePoly& rhs) {
    require_same_field(field_, rhs.field_);
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), FieldElem::zero(field_));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

OrePoly& OrePoly::operator-=(const OrePoly& rhs) {
    require_same_field(field_, rhs.field_);
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), FieldElem::zero(field_));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

OrePoly operator-(const OrePoly& a) {
    OrePoly r = a;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

OrePoly ore_mul(const OrePoly& a, const OrePoly& b) {
    require_same_field(a.field(), b.field());
    const Field f = a.field();
    if (a.is_zero() || b.is_zero()) {
        return OrePoly(f);
    }
    const std::size_t da = a.coeffs().size() - 1;
    const std::size_t db = b.coeffs().size() - 1;
    std::vector<FieldElem> out(da + db + 1, FieldElem::zero(f));
    for (std::size_t i = 0; i <= da; ++i) {
        const FieldElem& ai = a.coeffs()[i];
        if (ai.is_zero()) {
            continue;
        }
        // derivs[m] = d^m(a_i), shared across all j.
        std::vector<FieldElem> derivs{ai};
        for (std::size_t j = 0; j <= db; ++j) {
            const FieldElem& bj = b.coeffs()[j];
            if (bj.is_zero()) {
                continue;
            }
            while (derivs.size() <= j) {
                derivs.push_back(derive(derivs.back()));
            }
            for (std::size_t k = 0; k <= j; ++k) {
                const FieldElem& d = derivs[j - k];
                if (d.is_zero()) {
                    continue;
                }
                out[i + k] += binomial(f, j, k) * d * bj;
            }
        }
    }
    return OrePoly(f, std::move(out));
}

OrePoly ore_scale_right(const OrePoly& p, const FieldElem& u) {
    require_same_field(p.field(), u.field());
    std::vector<FieldElem> v = p.coeffs();
    for (auto& c : v) {
        c *= u;
    }
    return OrePoly(p.field(), std::move(v));
}

OrePoly ore_scale_left(const FieldElem& x, const OrePoly& p) { return ore_mul(OrePoly::constant(x), p); }

OreDivRem ore_right_divrem(const OrePoly& a, const OrePoly& b) {
    require_same_field(a.field(), b.field());
    if (b.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "right division by the zero skew polynomial");
    }
    const Field f = a.field();
    OrePoly q(f);
    OrePoly r = a;
    const FieldElem inv_lead = b.lead().inv();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        // b * (Y^k u) has leading term Y^(deg b + k) lead(b) u.
        const std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
        const FieldElem u = inv_lead * r.lead();
        OrePoly term = ore_scale_right(OrePoly::y_power(f, k), u);
        q += term;
        r -= ore_mul(b, term);
    }
    return {std::move(q), std::move(r)};
}

OrePoly ore_monic(const OrePoly& p) {
    if (p.is_zero()) {
        throw Error(ErrorKind::ZeroPolynomial, "the zero skew polynomial has no monic form");
    }
    if (p.lead().is_one()) {
        return p;
    }
    return ore_scale_right(p, p.lead().inv());
}

} // namespace dlin
