#ifndef DLIN_TESTS_ORACLES_HPP
#define DLIN_TESTS_ORACLES_HPP

// Reference computations written independently of the library algorithms.

#include "dlin/field.hpp"
#include "dlin/hurwitz.hpp"
#include "dlin/ore.hpp"
#include "dlin/parse.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <vector>

namespace dlin {

// Readable gtest output.
inline void PrintTo(const FieldElem& x, std::ostream* os) { *os << to_string(x); }
inline void PrintTo(const OrePoly& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const Seq& s, std::ostream* os) { *os << to_string(s); }

} // namespace dlin

namespace oracle {

using dlin::Field;
using dlin::FieldElem;
using dlin::OrePoly;
using dlin::Rational;
using dlin::Seq;

inline FieldElem qz(const char* text) { return dlin::parse_field_expr(text, Field::QZ); }
inline FieldElem q(long num, long den = 1) { return FieldElem(Field::Q, Rational(num, den)); }
inline FieldElem qzc(long num, long den = 1) { return FieldElem(Field::QZ, Rational(num, den)); }
inline OrePoly ore(const char* text, Field f = Field::QZ) { return dlin::parse_ore_expr(text, f); }

// Horner evaluation of a coefficient list, lowest degree first.
inline Rational eval_coeffs(const std::vector<Rational>& c, const Rational& x) {
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

inline Rational eval(const FieldElem& f, const Rational& x) {
    if (f.field() == Field::Q) {
        return f.rational();
    }
    const Rational den = eval_coeffs(f.ratfunc().den().coeffs(), x);
    return eval_coeffs(f.ratfunc().num().coeffs(), x) / den;
}

// Sample points that avoid the small poles produced by random_elem.
inline const std::vector<Rational>& sample_points() {
    static const std::vector<Rational> pts{Rational(7, 3), Rational(-11, 5), Rational(13), Rational(29, 7)};
    return pts;
}

// Formal derivative of a coefficient list.
inline std::vector<Rational> coeff_derivative(const std::vector<Rational>& c) {
    std::vector<Rational> out;
    for (std::size_t i = 1; i < c.size(); ++i) {
        out.push_back(c[i] * static_cast<long>(i));
    }
    return out;
}

// Quotient rule checked pointwise: f'(x) d(x)^2 = n'(x) d(x) - n(x) d'(x).
inline bool derivative_matches(const FieldElem& f, const FieldElem& df) {
    if (f.field() == Field::Q) {
        return df.is_zero();
    }
    const auto& n = f.ratfunc().num().coeffs();
    const auto& d = f.ratfunc().den().coeffs();
    for (const auto& x : sample_points()) {
        const Rational dx = eval_coeffs(d, x);
        const Rational lhs = eval(df, x) * dx * dx;
        const Rational rhs = eval_coeffs(coeff_derivative(n), x) * dx - eval_coeffs(n, x) * eval_coeffs(coeff_derivative(d), x);
        if (lhs != rhs) {
            return false;
        }
    }
    return true;
}

inline FieldElem nth_derivative(FieldElem x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        x = dlin::derive(x);
    }
    return x;
}

// Words in Y and field letters, normal-ordered by repeatedly rewriting
// x Y -> Y x + d(x). A word is a list of letters; a letter is either Y
// (nullopt) or a field element.
inline OrePoly normal_order(Field f, std::vector<std::optional<FieldElem>> letters) {
    // Find the first field letter directly followed by Y.
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
        if (letters[i] && !letters[i + 1]) {
            auto swapped = letters;
            swapped[i] = std::nullopt;
            swapped[i + 1] = letters[i];
            auto derived = letters;
            derived[i] = dlin::derive(*letters[i]);
            derived.erase(derived.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            return normal_order(f, swapped) + normal_order(f, derived);
        }
    }
    // Now all Y's precede the field letters.
    std::size_t ys = 0;
    FieldElem coeff = FieldElem::one(f);
    for (const auto& l : letters) {
        if (!l) {
            ++ys;
        } else {
            coeff *= *l;
        }
    }
    std::vector<FieldElem> c(ys + 1, FieldElem::zero(f));
    c[ys] = coeff;
    return OrePoly(f, c);
}

// Product expanded word by word from the defining relation only.
inline OrePoly naive_ore_mul(const OrePoly& a, const OrePoly& b) {
    const Field f = a.field();
    OrePoly out(f);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            if (b.coeffs()[j].is_zero()) {
                continue;
            }
            std::vector<std::optional<FieldElem>> w(i, std::nullopt);
            w.push_back(a.coeffs()[i]);
            w.insert(w.end(), j, std::nullopt);
            w.push_back(b.coeffs()[j]);
            out += normal_order(f, w);
        }
    }
    return out;
}

// Pascal-triangle binomials, independent of the library's.
inline dlin::Integer pascal(std::size_t n, std::size_t k) {
    static std::map<std::pair<std::size_t, std::size_t>, dlin::Integer> memo;
    if (k > n) {
        return 0;
    }
    if (k == 0 || k == n) {
        return 1;
    }
    auto key = std::make_pair(n, k);
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    dlin::Integer v = pascal(n - 1, k - 1) + pascal(n - 1, k);
    memo.emplace(key, v);
    return v;
}

inline FieldElem pascal_elem(Field f, std::size_t n, std::size_t k) { return FieldElem(f, Rational(pascal(n, k))); }

// Direct Hurwitz convolution.
inline Seq hurwitz_product(const Seq& a, const Seq& b) {
    const std::size_t len = std::min(a.size(), b.size());
    std::vector<FieldElem> out;
    for (std::size_t n = 0; n < len; ++n) {
        FieldElem acc = FieldElem::zero(a.field());
        for (std::size_t k = 0; k <= n; ++k) {
            acc += pascal_elem(a.field(), n, k) * a[k] * b[n - k];
        }
        out.push_back(acc);
    }
    return Seq(a.field(), out);
}

// Right action evaluated straight from sum_i t(c_i) N^i(a).
inline Seq right_action(const Seq& a, const OrePoly& p) {
    const std::size_t d = static_cast<std::size_t>(p.degree());
    const std::size_t len = a.size() - d;
    Seq acc = dlin::zero_seq(a.field(), len);
    for (std::size_t i = 0; i <= d; ++i) {
        std::vector<FieldElem> shifted(a.terms().begin() + static_cast<std::ptrdiff_t>(i),
                                       a.terms().begin() + static_cast<std::ptrdiff_t>(i + len));
        std::vector<FieldElem> t;
        for (std::size_t n = 0; n < len; ++n) {
            t.push_back(nth_derivative(p.coeffs()[i], n));
        }
        const Seq term = hurwitz_product(Seq(a.field(), t), Seq(a.field(), shifted));
        std::vector<FieldElem> sum;
        for (std::size_t n = 0; n < len; ++n) {
            sum.push_back(acc[n] + term[n]);
        }
        acc = Seq(a.field(), sum);
    }
    return acc;
}

inline bool all_zero(const Seq& s) {
    for (const auto& x : s.terms()) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

inline bool same(const Seq& a, const Seq& b) { return a.size() == b.size() && a.terms() == b.terms(); }

} // namespace oracle

#endif
