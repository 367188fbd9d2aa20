#ifndef DLIN_FIELD_HPP
#define DLIN_FIELD_HPP

#include "dlin/poly.hpp"
#include "dlin/ratfunc.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

namespace dlin {

/// The two supported differential fields: Q with the zero derivation and
/// Q(z) with d/dz.
enum class Field { Q, QZ };

std::string_view field_name(Field f) noexcept; // "q" | "qz"
Field parse_field_name(std::string_view name);

class FieldElem {
public:
    /// Zero of Q.
    FieldElem() : value_(Rational(0)) {}
    FieldElem(Field field, const Rational& c);
    explicit FieldElem(const RatFunc& f) : value_(f) {}

    static FieldElem zero(Field field) { return FieldElem(field, Rational(0)); }
    static FieldElem one(Field field) { return FieldElem(field, Rational(1)); }
    static FieldElem integer(Field field, const Integer& n) { return FieldElem(field, Rational(n)); }
    /// The generator z of Q(z).
    static FieldElem variable() { return FieldElem(RatFunc::variable()); }

    Field field() const noexcept { return value_.index() == 0 ? Field::Q : Field::QZ; }
    bool is_zero() const noexcept;
    bool is_one() const;

    const Rational& rational() const { return std::get<Rational>(value_); }
    const RatFunc& ratfunc() const { return std::get<RatFunc>(value_); }

    FieldElem inv() const;

    FieldElem& operator+=(const FieldElem& rhs);
    FieldElem& operator-=(const FieldElem& rhs);
    FieldElem& operator*=(const FieldElem& rhs);
    FieldElem& operator/=(const FieldElem& rhs);

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
    friend FieldElem operator-(const FieldElem& a);
    friend bool operator==(const FieldElem& a, const FieldElem& b);

private:
    std::variant<Rational, RatFunc> value_;
};

/// Throws FieldMismatch unless both operands live in the same field.
void require_same_field(const FieldElem& a, const FieldElem& b);
void require_same_field(Field a, Field b);

enum class ArithOp { Add, Sub, Mul, Div, Neg, Inv };

/// Single entry point for the field operations; Neg and Inv ignore `b`.
FieldElem field_arith(const FieldElem& a, const FieldElem& b, ArithOp op);

FieldElem derive(const FieldElem& x);
FieldElem derive_iter(const FieldElem& x, std::size_t n);

/// Binomial coefficient as an exact integer.
Integer binomial(std::size_t n, std::size_t k);
FieldElem binomial(Field field, std::size_t n, std::size_t k);

/// Canonical text: "p/q" over Q, integer-coefficient fraction in z over Q(z).
std::string to_string(const FieldElem& x);

/// True when the canonical text starts with a minus sign.
bool has_negative_form(const FieldElem& x);

} // namespace dlin

#endif
