#include "dlin/hopf.hpp"

#include "dlin/error.hpp"

#include <algorithm>

namespace dlin {

FieldElem counit(const Seq& a) {
    if (a.empty()) {
        throw Error(ErrorKind::EmptyPrefix, "counit of an empty prefix");
    }
    return a[0];
}

ComultLegs comult(const DRSeq& r, std::size_t length) {
    const std::size_t d = r.order();
    if (length < d) {
        throw Error(ErrorKind::PrefixTooShort, "comultiplication needs at least " + std::to_string(d) + " terms");
    }
    const Seq alpha = materialize(r, length + d);
    const FundMatrix m = fundamental_matrix(r.annihilator(), length);
    ComultLegs legs;
    legs.degree = d;
    legs.length = length;
    for (std::size_t i = 0; i < d; ++i) {
        legs.pairs.emplace_back(shift(alpha, i).prefix(length), m.solutions[i]);
    }
    return legs;
}

Seq antipode(const Seq& a) {
    const Field f = a.field();
    const std::size_t len = a.size();
    std::vector<std::vector<FieldElem>> der;
    for (std::size_t j = 0; j < len; ++j) {
        der.push_back(target(a[j], len - j).terms());
    }
    std::vector<FieldElem> out;
    out.reserve(len);
    for (std::size_t n = 0; n < len; ++n) {
        FieldElem acc = FieldElem::zero(f);
        for (std::size_t k = 0; k <= n; ++k) {
            const FieldElem& v = der[n - k][k];
            if (v.is_zero()) {
                continue;
            }
            const FieldElem term = binomial(f, n, k) * v;
            if ((n - k) % 2 == 1) {
                acc -= term;
            } else {
                acc += term;
            }
        }
        out.push_back(std::move(acc));
    }
    return Seq(f, std::move(out));
}

namespace {

CheckReport failure(std::string name, std::vector<std::pair<std::string, std::string>> detail) {
    CheckReport r;
    r.check = std::move(name);
    r.pass = false;
    r.first_failure = std::move(detail);
    return r;
}

std::vector<std::pair<std::string, std::string>> mismatch(const std::string& what, std::size_t n, const FieldElem& expected,
                                                           const FieldElem& actual) {
    return {{"what", what}, {"index", std::to_string(n)}, {"expected", to_string(expected)},
            {"actual", to_string(actual)}};
}

// Compare on the common prefix; empty on agreement.
std::vector<std::pair<std::string, std::string>> diff(const std::string& what, const Seq& expected, const Seq& actual) {
    const SeqComparison c = compare(expected, actual);
    if (c.equal) {
        return {};
    }
    const std::size_t n = *c.first_mismatch;
    return mismatch(what, n, expected[n], actual[n]);
}

} // namespace

CheckReport check_counit_axiom(const DRSeq& r, std::size_t length) {
    const std::string name = "counit";
    const std::size_t d = r.order();
    length = std::max(length, d);
    const Seq alpha = materialize(r, length + d);
    const FundMatrix m = fundamental_matrix(r.annihilator(), length);
    Seq combo = zero_seq(r.field(), length);
    for (std::size_t i = 0; i < d; ++i) {
        combo = hadd(combo, hscale_left(alpha[i], m.solutions[i]));
    }
    if (auto bad = diff("(eps x id) Delta", alpha.prefix(length), combo); !bad.empty()) {
        return failure(name, std::move(bad));
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const FieldElem want = i == j ? FieldElem::one(r.field()) : FieldElem::zero(r.field());
            if (!(m.solutions[i][j] == want)) {
                return failure(name, {{"what", "identity block"}, {"row", std::to_string(i)},
                                      {"index", std::to_string(j)}, {"actual", to_string(m.solutions[i][j])}});
            }
        }
    }
    Seq right = zero_seq(r.field(), length);
    for (std::size_t i = 0; i < d; ++i) {
        right = hadd(right, hscale_right(shift(alpha, i).prefix(length), m.solutions[i][0]));
    }
    if (auto bad = diff("(id x eps) Delta", alpha.prefix(length), right); !bad.empty()) {
        return failure(name, std::move(bad));
    }
    CheckReport ok;
    ok.check = name;
    return ok;
}

namespace {

std::optional<std::vector<std::pair<std::string, std::string>>> takeuchi_at(const Seq& alpha, const FundMatrix& m,
                                                                            std::size_t h, std::size_t k) {
    const Field f = alpha.field();
    FieldElem rhs = FieldElem::zero(f);
    for (std::size_t i = 0; i < m.degree; ++i) {
        const Seq dh = target(m.solutions[i][h], k + 1);
        for (std::size_t j = 0; j <= k; ++j) {
            const FieldElem& left = alpha[i + j];
            const FieldElem& der = dh[k - j];
            if (left.is_zero() || der.is_zero()) {
                continue;
            }
            rhs += binomial(f, k, j) * left * der;
        }
    }
    if (alpha[h + k] == rhs) {
        return std::nullopt;
    }
    return std::vector<std::pair<std::string, std::string>>{{"h", std::to_string(h)},
                                                            {"k", std::to_string(k)},
                                                            {"expected", to_string(alpha[h + k])},
                                                            {"actual", to_string(rhs)}};
}

} // namespace

CheckReport check_takeuchi(const DRSeq& r, std::size_t h, std::size_t k) {
    const std::size_t d = r.order();
    const Seq alpha = materialize(r, h + k + d + 1);
    const FundMatrix m = fundamental_matrix(r.annihilator(), std::max(h + 1, d));
    if (auto bad = takeuchi_at(alpha, m, h, k)) {
        return failure("takeuchi", std::move(*bad));
    }
    CheckReport ok;
    ok.check = "takeuchi";
    return ok;
}

CheckReport check_takeuchi_all(const DRSeq& r, std::size_t max_sum) {
    const std::size_t d = r.order();
    const Seq alpha = materialize(r, max_sum + d + 1);
    const FundMatrix m = fundamental_matrix(r.annihilator(), std::max(max_sum + 1, d));
    for (std::size_t s = 0; s <= max_sum; ++s) {
        for (std::size_t h = 0; h <= s; ++h) {
            if (auto bad = takeuchi_at(alpha, m, h, s - h)) {
                return failure("takeuchi", std::move(*bad));
            }
        }
    }
    CheckReport ok;
    ok.check = "takeuchi";
    return ok;
}

CheckReport check_antipode(const Seq& a) {
    const std::string name = "antipode";
    const Seq s = antipode(a);
    if (auto bad = diff("S(S(a)) = a", a, antipode(s)); !bad.empty()) {
        return failure(name, std::move(bad));
    }
    const std::size_t len = a.size();
    for (std::size_t j = 0; j < std::min<std::size_t>(len, 3); ++j) {
        const FieldElem& x = a[j];
        if (auto bad = diff("S(s(x)) = t(x)", target(x, len), antipode(source(x, len))); !bad.empty()) {
            bad.emplace_back("x", to_string(x));
            return failure(name, std::move(bad));
        }
        if (auto bad = diff("S(t(x)) = s(x)", source(x, len), antipode(target(x, len))); !bad.empty()) {
            bad.emplace_back("x", to_string(x));
            return failure(name, std::move(bad));
        }
    }
    Seq iter = a;
    for (std::size_t n = 0; n < len; ++n) {
        if (!(iter[0] == s[n])) {
            return failure(name, mismatch("S(a)(n) = ((nabla - N)^n a)(0)", n, iter[0], s[n]));
        }
        if (iter.size() > 1) {
            iter = ker_derivation(iter);
        }
    }
    CheckReport ok;
    ok.check = name;
    return ok;
}

CheckReport check_antipode_axiom(const DRSeq& r, std::size_t length) {
    const std::string name = "antipode-axiom";
    const std::size_t d = r.order();
    length = std::max(length, d);
    const Seq alpha = materialize(r, length + d);
    const FundMatrix m = fundamental_matrix(r.annihilator(), length);
    Seq primary = zero_seq(r.field(), length);
    Seq alternative = zero_seq(r.field(), length);
    for (std::size_t i = 0; i < d; ++i) {
        const Seq leg = shift(alpha, i).prefix(length);
        primary = hadd(primary, hmul(antipode(leg), m.solutions[i]));
        alternative = hadd(alternative, hmul(leg, antipode(m.solutions[i])));
    }
    auto bad = diff("sum_i S(N^i a) o_i = t(a(0))", target(alpha[0], length), primary);
    if (bad.empty()) {
        CheckReport ok;
        ok.check = name;
        return ok;
    }
    CheckReport r2 = failure(name, std::move(bad));
    auto alt = diff("sum_i N^i(a) S(o_i) = s(a(0))", source(alpha[0], length), alternative);
    r2.note = alt.empty() ? "alternative contraction sum_i N^i(a) S(o_i) = s(a(0)) holds"
                          : "alternative contraction sum_i N^i(a) S(o_i) = s(a(0)) fails too";
    return r2;
}

CheckReport check_antipode_closure(const DRSeq& r) {
    const std::size_t d = r.order();
    const std::size_t len = std::max(2 * d, default_window(d));
    const Seq s = antipode(materialize(r, len));
    auto p = min_annihilator(s, d);
    if (!p) {
        return failure("antipode-closure", {{"what", "no annihilator of S(a) within the order bound"},
                                            {"bound", std::to_string(d)}});
    }
    CheckReport ok;
    ok.check = "antipode-closure";
    return ok;
}

std::vector<CheckReport> hopf_suite(const std::vector<DRSeq>& corpus) {
    constexpr std::size_t length = 10;
    constexpr std::size_t max_sum = 8;
    std::vector<CheckReport> out;
    auto run = [&](const std::string& name, auto&& body) {
        CheckReport agg;
        agg.check = name;
        for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
            CheckReport r = body(corpus[idx]);
            if (!r.pass) {
                agg.pass = false;
                agg.first_failure = std::move(r.first_failure);
                agg.first_failure.insert(agg.first_failure.begin(), {"corpus", std::to_string(idx)});
                agg.note = std::move(r.note);
                break;
            }
        }
        out.push_back(std::move(agg));
    };
    run("counit", [&](const DRSeq& r) { return check_counit_axiom(r, length); });
    run("takeuchi", [&](const DRSeq& r) { return check_takeuchi_all(r, max_sum); });
    run("antipode", [&](const DRSeq& r) { return check_antipode(materialize(r, length)); });
    run("antipode-axiom", [&](const DRSeq& r) { return check_antipode_axiom(r, length); });
    run("antipode-closure", [&](const DRSeq& r) { return check_antipode_closure(r); });
    return out;
}

} // namespace dlin
