#include "dlin/parse.hpp"

#include "dlin/error.hpp"

#include <cctype>

namespace dlin {

namespace {

constexpr unsigned long max_exponent = 256;

class Parser {
public:
    Parser(std::string_view text, Field field, bool allow_y) : text_(text), field_(field), allow_y_(allow_y) {}

    OrePoly parse() {
        OrePoly v = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
        throw Error(ErrorKind::SyntaxError, msg, at);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    OrePoly expr() {
        OrePoly acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    OrePoly term() {
        OrePoly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = ore_mul(acc, unary());
            } else if (accept('/')) {
                skip_ws();
                const std::size_t at = pos_;
                const OrePoly d = unary();
                acc = ore_scale_right(acc, scalar_inverse(d, at));
            } else {
                return acc;
            }
        }
    }

    FieldElem scalar_inverse(const OrePoly& d, std::size_t at) const {
        if (d.degree() > 0) {
            fail_at("division by an expression involving Y", at);
        }
        if (d.is_zero()) {
            throw Error(ErrorKind::ZeroDenominator, "division by zero", at);
        }
        return d.lead().inv();
    }

    OrePoly unary() {
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    OrePoly power() {
        OrePoly base = atom();
        while (accept('^')) {
            skip_ws();
            const std::size_t at = pos_;
            const bool negative = accept('-');
            skip_ws();
            const std::size_t digits_at = pos_;
            const std::string digits = read_digits();
            if (digits.empty()) {
                fail_at("expected an integer exponent", digits_at);
            }
            if (digits.size() > 3 || std::stoul(digits) > max_exponent) {
                fail_at("exponent too large", digits_at);
            }
            const unsigned long e = std::stoul(digits);
            if (negative) {
                base = OrePoly::constant(scalar_inverse(base, at));
            }
            OrePoly result = OrePoly::constant(FieldElem::one(field_));
            for (unsigned long i = 0; i < e; ++i) {
                result = ore_mul(result, base);
            }
            base = std::move(result);
        }
        return base;
    }

    std::string read_digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    OrePoly atom() {
        skip_ws();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const std::size_t at = pos_;
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return OrePoly::constant(FieldElem::integer(field_, Integer(read_digits())));
        }
        if (c == '(') {
            ++pos_;
            OrePoly inner = expr();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return inner;
        }
        if (c == 'z') {
            if (field_ != Field::QZ) {
                fail_at("'z' is not available over q", at);
            }
            ++pos_;
            return OrePoly::constant(FieldElem::variable());
        }
        if (c == 'Y') {
            if (!allow_y_) {
                fail_at("'Y' is not allowed in a field element", at);
            }
            ++pos_;
            return OrePoly::y_power(field_, 1);
        }
        fail_at("unexpected '" + std::string(1, c) + "'", at);
    }

    std::string_view text_;
    Field field_;
    bool allow_y_;
    std::size_t pos_ = 0;
};

bool has_top_level_sign(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            --depth;
        } else if ((c == '+' || c == '-') && depth == 0 && i > 0) {
            return true;
        }
    }
    return false;
}

bool is_plain_atom(const std::string& s) {
    if (s == "z") {
        return true;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return !s.empty();
}

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

} // namespace

FieldElem parse_field_expr(std::string_view text, Field field) {
    const OrePoly p = Parser(text, field, false).parse();
    return p.is_zero() ? FieldElem::zero(field) : p.coeffs()[0];
}

OrePoly parse_ore_expr(std::string_view text, Field field) { return Parser(text, field, true).parse(); }

std::string to_string(const OrePoly& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const FieldElem& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = has_negative_form(c);
        const FieldElem mag = negative ? -c : c;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string coeff = to_string(mag);
        if (i == 0) {
            out += has_top_level_sign(coeff) && negative ? "(" + coeff + ")" : coeff;
            continue;
        }
        out += i == 1 ? "Y" : "Y^" + std::to_string(i);
        if (!mag.is_one()) {
            out += is_plain_atom(coeff) ? "*" + coeff : "*(" + coeff + ")";
        }
    }
    return out;
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '(' || c == '[') {
            ++depth;
        } else if (c == ')' || c == ']') {
            --depth;
        } else if (c == sep && depth == 0) {
            out.push_back(trim(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(text.substr(start)));
    if (out.size() == 1 && out[0].empty()) {
        out.clear();
    }
    return out;
}

std::vector<FieldElem> parse_csv(std::string_view text, Field field) {
    std::vector<FieldElem> out;
    for (const auto& piece : split_top_level(text, ',')) {
        out.push_back(parse_field_expr(piece, field));
    }
    return out;
}

Seq parse_seq(std::string_view text, Field field) {
    std::string body = trim(text);
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') {
            throw Error(ErrorKind::SyntaxError, "missing ']'", body.size());
        }
        body = body.substr(1, body.size() - 2);
    }
    return Seq(field, parse_csv(body, field));
}

} // namespace dlin
