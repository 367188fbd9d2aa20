#ifndef DLIN_HURWITZ_HPP
#define DLIN_HURWITZ_HPP

#include "dlin/field.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dlin {

/// Finite prefix (a(0), ..., a(L-1)) of a Hurwitz series over one field.
/// Operations return the longest prefix their inputs determine.
class Seq {
public:
    explicit Seq(Field field) : field_(field) {}
    /// Throws FieldMismatch if a term is not in `field`.
    Seq(Field field, std::vector<FieldElem> terms);

    Field field() const noexcept { return field_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    const FieldElem& operator[](std::size_t n) const { return terms_[n]; }
    const std::vector<FieldElem>& terms() const noexcept { return terms_; }

    Seq prefix(std::size_t length) const;

private:
    Field field_;
    std::vector<FieldElem> terms_;
};

/// Result of comparing two prefixes on their common length.
struct SeqComparison {
    bool equal = true;
    std::size_t compared = 0;
    std::optional<std::size_t> first_mismatch;
};

SeqComparison compare(const Seq& a, const Seq& b);
/// Equal on the common prefix.
bool agree(const Seq& a, const Seq& b);

Seq zero_seq(Field field, std::size_t length);

/// (a b)(n) = sum_k C(n,k) a(k) b(n-k).
Seq hmul(const Seq& a, const Seq& b);
Seq hadd(const Seq& a, const Seq& b);
Seq hsub(const Seq& a, const Seq& b);
Seq hneg(const Seq& a);
/// s(x) a, i.e. x a(n) entrywise.
Seq hscale_left(const FieldElem& x, const Seq& a);
/// a t(x).
Seq hscale_right(const Seq& a, const FieldElem& x);

/// N: drop the first entry. Throws EmptyPrefix on an empty prefix.
Seq shift(const Seq& a);
Seq shift(const Seq& a, std::size_t times);
/// Componentwise derivative.
Seq nabla(const Seq& a);

/// s(x) = (x, 0, 0, ...).
Seq source(const FieldElem& x, std::size_t length);
/// t(x) = (x, dx, d^2 x, ...).
Seq target(const FieldElem& x, std::size_t length);

/// Hurwitz inverse. Throws NotInvertible when a(0) = 0.
Seq hinv(const Seq& a);

/// nabla(a) - shift(a); one entry shorter than a.
Seq ker_derivation(const Seq& a);

/// "[a0, a1, ...]".
std::string to_string(const Seq& a);

} // namespace dlin

#endif
