#include "dlin/hurwitz.hpp"

#include "dlin/error.hpp"

#include <algorithm>

namespace dlin {

Seq::Seq(Field field, std::vector<FieldElem> terms) : field_(field), terms_(std::move(terms)) {
    for (const auto& t : terms_) {
        require_same_field(field_, t.field());
    }
}

Seq Seq::prefix(std::size_t length) const {
    const std::size_t n = std::min(length, terms_.size());
    return Seq(field_, std::vector<FieldElem>(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(n)));
}

SeqComparison compare(const Seq& a, const Seq& b) {
    require_same_field(a.field(), b.field());
    SeqComparison r;
    r.compared = std::min(a.size(), b.size());
    for (std::size_t n = 0; n < r.compared; ++n) {
        if (!(a[n] == b[n])) {
            r.equal = false;
            r.first_mismatch = n;
            break;
        }
    }
    return r;
}

bool agree(const Seq& a, const Seq& b) { return compare(a, b).equal; }

Seq zero_seq(Field field, std::size_t length) {
    return Seq(field, std::vector<FieldElem>(length, FieldElem::zero(field)));
}

Seq hmul(const Seq& a, const Seq& b) {
    require_same_field(a.field(), b.field());
    const Field f = a.field();
    const std::size_t len = std::min(a.size(), b.size());
    std::vector<FieldElem> out(len, FieldElem::zero(f));
    for (std::size_t n = 0; n < len; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            if (a[k].is_zero() || b[n - k].is_zero()) {
                continue;
            }
            out[n] += binomial(f, n, k) * a[k] * b[n - k];
        }
    }
    return Seq(f, std::move(out));
}

Seq hadd(const Seq& a, const Seq& b) {
    require_same_field(a.field(), b.field());
    const std::size_t len = std::min(a.size(), b.size());
    std::vector<FieldElem> out;
    out.reserve(len);
    for (std::size_t n = 0; n < len; ++n) {
        out.push_back(a[n] + b[n]);
    }
    return Seq(a.field(), std::move(out));
}

Seq hneg(const Seq& a) {
    std::vector<FieldElem> out;
    out.reserve(a.size());
    for (const auto& x : a.terms()) {
        out.push_back(-x);
    }
    return Seq(a.field(), std::move(out));
}

Seq hsub(const Seq& a, const Seq& b) { return hadd(a, hneg(b)); }

Seq hscale_left(const FieldElem& x, const Seq& a) {
    require_same_field(x.field(), a.field());
    std::vector<FieldElem> out;
    out.reserve(a.size());
    for (const auto& v : a.terms()) {
        out.push_back(x * v);
    }
    return Seq(a.field(), std::move(out));
}

Seq hscale_right(const Seq& a, const FieldElem& x) { return hmul(a, target(x, a.size())); }

Seq shift(const Seq& a) {
    if (a.empty()) {
        throw Error(ErrorKind::EmptyPrefix, "shift of an empty prefix");
    }
    return Seq(a.field(), std::vector<FieldElem>(a.terms().begin() + 1, a.terms().end()));
}

Seq shift(const Seq& a, std::size_t times) {
    if (times == 0) {
        return a;
    }
    if (times > a.size()) {
        throw Error(ErrorKind::EmptyPrefix, "shift beyond the end of the prefix");
    }
    return Seq(a.field(), std::vector<FieldElem>(a.terms().begin() + static_cast<std::ptrdiff_t>(times), a.terms().end()));
}

Seq nabla(const Seq& a) {
    std::vector<FieldElem> out;
    out.reserve(a.size());
    for (const auto& x : a.terms()) {
        out.push_back(derive(x));
    }
    return Seq(a.field(), std::move(out));
}

Seq source(const FieldElem& x, std::size_t length) {
    std::vector<FieldElem> out(length, FieldElem::zero(x.field()));
    if (length > 0) {
        out[0] = x;
    }
    return Seq(x.field(), std::move(out));
}

Seq target(const FieldElem& x, std::size_t length) {
    std::vector<FieldElem> out;
    out.reserve(length);
    FieldElem cur = x;
    for (std::size_t n = 0; n < length; ++n) {
        out.push_back(cur);
        if (n + 1 < length) {
            cur = derive(cur);
        }
    }
    return Seq(x.field(), std::move(out));
}

Seq hinv(const Seq& a) {
    if (a.empty()) {
        return a;
    }
    if (a[0].is_zero()) {
        throw Error(ErrorKind::NotInvertible, "Hurwitz series with zero constant term");
    }
    const Field f = a.field();
    const FieldElem inv0 = a[0].inv();
    std::vector<FieldElem> b;
    b.reserve(a.size());
    b.push_back(inv0);
    for (std::size_t n = 1; n < a.size(); ++n) {
        FieldElem acc = FieldElem::zero(f);
        for (std::size_t k = 1; k <= n; ++k) {
            if (a[k].is_zero() || b[n - k].is_zero()) {
                continue;
            }
            acc += binomial(f, n, k) * a[k] * b[n - k];
        }
        b.push_back(-(inv0 * acc));
    }
    return Seq(f, std::move(b));
}

Seq ker_derivation(const Seq& a) {
    Seq shifted = shift(a);
    return hsub(nabla(a.prefix(shifted.size())), shifted);
}

std::string to_string(const Seq& a) {
    std::string s = "[";
    for (std::size_t n = 0; n < a.size(); ++n) {
        if (n > 0) {
            s += ", ";
        }
        s += to_string(a[n]);
    }
    return s + "]";
}

} // namespace dlin
