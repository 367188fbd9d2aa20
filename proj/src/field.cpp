#include "dlin/field.hpp"

#include "dlin/error.hpp"

#include <string>

namespace dlin {

std::string_view field_name(Field f) noexcept { return f == Field::Q ? "q" : "qz"; }

Field parse_field_name(std::string_view name) {
    if (name == "q") {
        return Field::Q;
    }
    if (name == "qz") {
        return Field::QZ;
    }
    throw Error(ErrorKind::SyntaxError, "unknown field '" + std::string(name) + "' (expected q or qz)");
}

FieldElem::FieldElem(Field field, const Rational& c) {
    if (field == Field::Q) {
        value_ = c;
    } else {
        value_ = RatFunc(c);
    }
}

bool FieldElem::is_zero() const noexcept {
    if (value_.index() == 0) {
        return std::get<0>(value_) == 0;
    }
    return std::get<1>(value_).is_zero();
}

bool FieldElem::is_one() const {
    if (value_.index() == 0) {
        return std::get<0>(value_) == 1;
    }
    const RatFunc& f = std::get<1>(value_);
    return f.is_constant() && !f.is_zero() && f.num().lead() == 1;
}

void require_same_field(Field a, Field b) {
    if (a != b) {
        throw Error(ErrorKind::FieldMismatch, "operands from fields " + std::string(field_name(a)) +
                                                  " and " + std::string(field_name(b)));
    }
}

void require_same_field(const FieldElem& a, const FieldElem& b) { require_same_field(a.field(), b.field()); }

FieldElem FieldElem::inv() const {
    if (is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    }
    if (value_.index() == 0) {
        return FieldElem(Field::Q, 1 / std::get<0>(value_));
    }
    return FieldElem(std::get<1>(value_).inv());
}

FieldElem& FieldElem::operator+=(const FieldElem& rhs) {
    require_same_field(*this, rhs);
    if (value_.index() == 0) {
        std::get<0>(value_) += std::get<0>(rhs.value_);
    } else {
        std::get<1>(value_) = std::get<1>(value_) + std::get<1>(rhs.value_);
    }
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& rhs) {
    require_same_field(*this, rhs);
    if (value_.index() == 0) {
        std::get<0>(value_) -= std::get<0>(rhs.value_);
    } else {
        std::get<1>(value_) = std::get<1>(value_) - std::get<1>(rhs.value_);
    }
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& rhs) {
    require_same_field(*this, rhs);
    if (value_.index() == 0) {
        std::get<0>(value_) *= std::get<0>(rhs.value_);
    } else {
        std::get<1>(value_) = std::get<1>(value_) * std::get<1>(rhs.value_);
    }
    return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& rhs) {
    require_same_field(*this, rhs);
    if (rhs.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "division by zero");
    }
    if (value_.index() == 0) {
        std::get<0>(value_) /= std::get<0>(rhs.value_);
    } else {
        std::get<1>(value_) = std::get<1>(value_) / std::get<1>(rhs.value_);
    }
    return *this;
}

FieldElem operator-(const FieldElem& a) {
    if (a.value_.index() == 0) {
        return FieldElem(Field::Q, -std::get<0>(a.value_));
    }
    return FieldElem(-std::get<1>(a.value_));
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    if (a.value_.index() != b.value_.index()) {
        return false;
    }
    return a.value_ == b.value_;
}

FieldElem field_arith(const FieldElem& a, const FieldElem& b, ArithOp op) {
    switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    case ArithOp::Neg: return -a;
    case ArithOp::Inv: return a.inv();
    }
    return a;
}

FieldElem derive(const FieldElem& x) {
    if (x.field() == Field::Q) {
        return FieldElem::zero(Field::Q);
    }
    return FieldElem(x.ratfunc().derivative());
}

FieldElem derive_iter(const FieldElem& x, std::size_t n) {
    FieldElem r = x;
    for (std::size_t i = 0; i < n && !r.is_zero(); ++i) {
        r = derive(r);
    }
    return r;
}

Integer binomial(std::size_t n, std::size_t k) {
    Integer r;
    if (k > n) {
        return r;
    }
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

FieldElem binomial(Field field, std::size_t n, std::size_t k) { return FieldElem::integer(field, binomial(n, k)); }

std::string to_string(const FieldElem& x) {
    if (x.field() == Field::Q) {
        return x.rational().get_str();
    }
    return to_string(x.ratfunc());
}

bool has_negative_form(const FieldElem& x) {
    if (x.field() == Field::Q) {
        return x.rational() < 0;
    }
    return !x.is_zero() && x.ratfunc().num().lead() < 0;
}

} // namespace dlin
