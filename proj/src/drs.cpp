#include "dlin/drs.hpp"

#include "dlin/error.hpp"
#include "dlin/matrix.hpp"
#include "dlin/random.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace dlin {

DRSeq::DRSeq(OrePoly annihilator, std::vector<FieldElem> inits)
    : annihilator_(std::move(annihilator)), inits_(std::move(inits)) {
    if (annihilator_.degree() < 1 || !annihilator_.is_monic()) {
        throw Error(ErrorKind::NotMonic, "a generator needs a monic annihilator of degree >= 1");
    }
    if (inits_.size() != static_cast<std::size_t>(annihilator_.degree())) {
        throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(annihilator_.degree()) +
                                                  " initial values, got " + std::to_string(inits_.size()));
    }
    for (const auto& x : inits_) {
        require_same_field(annihilator_.field(), x.field());
    }
}

namespace {

// table[i][k] = d^k(c_i) for k < depth.
std::vector<std::vector<FieldElem>> derivative_table(const std::vector<FieldElem>& coeffs, std::size_t depth) {
    std::vector<std::vector<FieldElem>> table;
    table.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        table.push_back(target(c, depth).terms());
    }
    return table;
}

void require_monic_generator(const OrePoly& p) {
    if (p.degree() < 1 || !p.is_monic()) {
        throw Error(ErrorKind::NotMonic, "expected a monic skew polynomial of degree >= 1");
    }
}

} // namespace

Seq act(const Seq& a, const OrePoly& p) {
    require_same_field(a.field(), p.field());
    const Field f = a.field();
    if (p.is_zero()) {
        return zero_seq(f, a.size());
    }
    const std::size_t d = static_cast<std::size_t>(p.degree());
    if (a.size() <= d) {
        throw Error(ErrorKind::PrefixTooShort, "acting by a degree " + std::to_string(d) + " operator needs more than " +
                                                   std::to_string(d) + " terms, got " + std::to_string(a.size()));
    }
    const std::size_t len = a.size() - d;
    const auto derivs = derivative_table(p.coeffs(), len);
    std::vector<FieldElem> out(len, FieldElem::zero(f));
    for (std::size_t n = 0; n < len; ++n) {
        for (std::size_t i = 0; i <= d; ++i) {
            for (std::size_t k = 0; k <= n; ++k) {
                const FieldElem& dc = derivs[i][k];
                const FieldElem& av = a[n - k + i];
                if (dc.is_zero() || av.is_zero()) {
                    continue;
                }
                out[n] += binomial(f, n, k) * dc * av;
            }
        }
    }
    return Seq(f, std::move(out));
}

Seq materialize(const DRSeq& r, std::size_t length) {
    const Field f = r.field();
    const std::size_t d = r.order();
    std::vector<FieldElem> a(r.inits().begin(), r.inits().begin() + static_cast<std::ptrdiff_t>(std::min(d, length)));
    if (length <= d) {
        return Seq(f, std::move(a));
    }
    // P = Y^d - sum_i Y^i c_i, so c_i = -p_i.
    std::vector<FieldElem> c;
    for (std::size_t i = 0; i < d; ++i) {
        c.push_back(-r.annihilator().coeffs()[i]);
    }
    const auto derivs = derivative_table(c, length - d);
    a.reserve(length);
    for (std::size_t n = 0; n + d < length; ++n) {
        FieldElem next = FieldElem::zero(f);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t k = 0; k <= n; ++k) {
                const FieldElem& dc = derivs[i][k];
                const FieldElem& av = a[n - k + i];
                if (dc.is_zero() || av.is_zero()) {
                    continue;
                }
                next += binomial(f, n, k) * dc * av;
            }
        }
        a.push_back(std::move(next));
    }
    return Seq(f, std::move(a));
}

FundMatrix fundamental_matrix(const OrePoly& p, std::size_t length) {
    require_monic_generator(p);
    const Field f = p.field();
    const std::size_t d = static_cast<std::size_t>(p.degree());
    if (length < d) {
        throw Error(ErrorKind::PrefixTooShort, "fundamental matrix needs at least deg P columns");
    }
    std::vector<FieldElem> c;
    for (std::size_t i = 0; i < d; ++i) {
        c.push_back(-p.coeffs()[i]);
    }
    std::vector<std::vector<FieldElem>> rows(d, std::vector<FieldElem>{});
    std::vector<FieldElem> v(d, FieldElem::zero(f));
    v[0] = FieldElem::one(f);
    for (std::size_t k = 0; k < length; ++k) {
        for (std::size_t i = 0; i < d; ++i) {
            rows[i].push_back(v[i]);
        }
        if (k + 1 == length) {
            break;
        }
        std::vector<FieldElem> next(d, FieldElem::zero(f));
        const FieldElem& last = v[d - 1];
        for (std::size_t i = 0; i < d; ++i) {
            next[i] = derive(v[i]);
            if (i > 0) {
                next[i] += v[i - 1];
            }
            if (!last.is_zero() && !c[i].is_zero()) {
                next[i] += c[i] * last;
            }
        }
        v = std::move(next);
    }
    FundMatrix m;
    m.degree = d;
    m.length = length;
    for (auto& r : rows) {
        m.solutions.emplace_back(f, std::move(r));
    }
    return m;
}

Seq from_initial(const OrePoly& p, const std::vector<FieldElem>& a, std::size_t length) {
    require_monic_generator(p);
    if (a.size() != static_cast<std::size_t>(p.degree())) {
        throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(p.degree()) + " initial values, got " +
                                                  std::to_string(a.size()));
    }
    const FundMatrix m = fundamental_matrix(p, std::max<std::size_t>(length, 1));
    Seq out = zero_seq(p.field(), length);
    for (std::size_t i = 0; i < a.size(); ++i) {
        require_same_field(p.field(), a[i].field());
        if (a[i].is_zero()) {
            continue;
        }
        out = hadd(out, hscale_left(a[i], m.solutions[i].prefix(length)));
    }
    return out;
}

std::size_t default_window(std::size_t bound) { return 2 * bound + 4; }

std::optional<OrePoly> min_annihilator(const Seq& a, std::size_t bound) {
    return min_annihilator(a, bound, default_window(bound));
}

std::optional<OrePoly> min_annihilator(const Seq& a, std::size_t bound, std::size_t window) {
    const Field f = a.field();
    if (a.size() < 2 * bound) {
        throw Error(ErrorKind::PrefixTooShort, "annihilator search up to order " + std::to_string(bound) + " needs " +
                                                   std::to_string(2 * bound) + " terms, got " +
                                                   std::to_string(a.size()));
    }
    window = std::max(window, bound);
    if (bound == 0) {
        return std::nullopt;
    }
    // der[j][k] = d^k(a(j)), filled on demand.
    std::vector<std::vector<FieldElem>> der(a.size());
    auto derivative = [&](std::size_t j, std::size_t k) -> const FieldElem& {
        auto& row = der[j];
        if (row.empty()) {
            row.push_back(a[j]);
        }
        while (row.size() <= k) {
            row.push_back(derive(row.back()));
        }
        return row[k];
    };
    // coeff(n, i) = sum_k C(n,k) (-1)^k d^k(a(n-k+i)); a <| P = 0 iff
    // sum_i coeff(n, i) c_i = 0 for every n.
    auto coeff = [&](std::size_t n, std::size_t i) {
        FieldElem acc = FieldElem::zero(f);
        for (std::size_t k = 0; k <= n; ++k) {
            const FieldElem& v = derivative(n - k + i, k);
            if (v.is_zero()) {
                continue;
            }
            FieldElem term = binomial(f, n, k) * v;
            if (k % 2 == 1) {
                acc -= term;
            } else {
                acc += term;
            }
        }
        return acc;
    };
    auto residual_vanishes = [&](const OrePoly& candidate) {
        const Seq verify_on = a.prefix(window);
        if (verify_on.size() <= static_cast<std::size_t>(candidate.degree())) {
            return true;
        }
        const Seq residual = act(verify_on, candidate);
        return std::all_of(residual.terms().begin(), residual.terms().end(),
                           [](const FieldElem& x) { return x.is_zero(); });
    };
    auto solve = [&](std::size_t e, std::size_t rows) -> std::optional<OrePoly> {
        Matrix m(f, rows, e + 1);
        for (std::size_t n = 0; n < rows; ++n) {
            for (std::size_t i = 0; i <= e; ++i) {
                m(n, i) = coeff(n, i);
            }
        }
        const auto basis = nullspace(m);
        // At most one basis vector is nonzero in the last (free) column.
        auto it = std::find_if(basis.begin(), basis.end(), [e](const Vector& v) { return !v[e].is_zero(); });
        if (it == basis.end()) {
            return std::nullopt;
        }
        return ore_monic(OrePoly(f, *it));
    };
    for (std::size_t e = 1; e <= bound; ++e) {
        auto candidate = solve(e, bound);
        if (!candidate) {
            continue;
        }
        if (residual_vanishes(*candidate)) {
            return candidate;
        }
        // Several solutions at this degree: pin the choice down with every row
        // the prefix determines.
        const std::size_t rows = std::min(window, a.size() - e);
        if (rows > bound) {
            candidate = solve(e, rows);
            if (candidate && residual_vanishes(*candidate)) {
                return candidate;
            }
        }
    }
    return std::nullopt;
}

namespace {

DRSeq combine(const Seq& prefix, std::size_t bound) {
    auto p = min_annihilator(prefix, bound);
    if (!p) {
        throw std::logic_error("no annihilator within the guaranteed order bound " + std::to_string(bound));
    }
    const std::size_t d = static_cast<std::size_t>(p->degree());
    return DRSeq(std::move(*p), std::vector<FieldElem>(prefix.terms().begin(),
                                                       prefix.terms().begin() + static_cast<std::ptrdiff_t>(d)));
}

std::size_t working_length(std::size_t requested, std::size_t bound) {
    return std::max({requested, 2 * bound, default_window(bound)});
}

} // namespace

DRSeq product(const DRSeq& x, const DRSeq& y, std::size_t length) {
    require_same_field(x.field(), y.field());
    const std::size_t bound = x.order() * y.order();
    const std::size_t len = working_length(length, bound);
    return combine(hmul(materialize(x, len), materialize(y, len)), bound);
}

DRSeq sum(const DRSeq& x, const DRSeq& y, std::size_t length) {
    require_same_field(x.field(), y.field());
    const std::size_t bound = x.order() + y.order();
    const std::size_t len = working_length(length, bound);
    return combine(hadd(materialize(x, len), materialize(y, len)), bound);
}

DRSeq embed_as_drs(const FieldElem& x, Embedding which) {
    const Field f = x.field();
    if (which == Embedding::Source || x.is_zero()) {
        return DRSeq(OrePoly::y_power(f, 1), {x});
    }
    // Monic form of d(x) - Y x.
    return DRSeq(OrePoly(f, {-(derive(x) / x), FieldElem::one(f)}), {x});
}

InclusionReport divisibility_inclusion(const OrePoly& a, const OrePoly& b, std::size_t samples, std::uint64_t seed) {
    require_monic_generator(a);
    require_monic_generator(b);
    require_same_field(a.field(), b.field());
    InclusionReport report;
    report.divides = ore_right_divrem(b, a).remainder.is_zero();
    if (!report.divides) {
        return report;
    }
    std::mt19937_64 rng(seed);
    const std::size_t d = static_cast<std::size_t>(a.degree());
    const std::size_t len = static_cast<std::size_t>(b.degree()) + 8;
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<FieldElem> inits;
        for (std::size_t i = 0; i < d; ++i) {
            inits.push_back(random_elem(a.field(), rng));
        }
        const Seq sol = materialize(DRSeq(a, std::move(inits)), len);
        const Seq residual = act(sol, b);
        ++report.samples;
        if (std::all_of(residual.terms().begin(), residual.terms().end(),
                        [](const FieldElem& v) { return v.is_zero(); })) {
            ++report.killed;
        }
    }
    return report;
}

std::optional<std::vector<FieldElem>> find_linear_recurrence(const Seq& a, std::size_t bound, std::size_t window) {
    if (a.size() < window + bound) {
        throw Error(ErrorKind::PrefixTooShort, "recurrence search needs window + bound = " +
                                                   std::to_string(window + bound) + " terms, got " +
                                                   std::to_string(a.size()));
    }
    const Field f = a.field();
    for (std::size_t e = 1; e <= bound; ++e) {
        Matrix m(f, window, e + 1);
        for (std::size_t n = 0; n < window; ++n) {
            for (std::size_t j = 0; j <= e; ++j) {
                m(n, j) = a[n + j];
            }
        }
        const auto basis = nullspace(m);
        auto it = std::find_if(basis.begin(), basis.end(), [e](const Vector& v) { return !v[e].is_zero(); });
        if (it == basis.end()) {
            continue;
        }
        std::vector<FieldElem> p = *it;
        const FieldElem s = p[e].inv();
        for (auto& x : p) {
            x *= s;
        }
        return p;
    }
    return std::nullopt;
}

} // namespace dlin
