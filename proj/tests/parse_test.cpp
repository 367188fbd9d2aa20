#include "dlin/error.hpp"
#include "dlin/parse.hpp"
#include "dlin/random.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace dlin;
using oracle::q;
using oracle::qz;

TEST(ParseField, Examples) {
    const FieldElem a = parse_field_expr("1/(z-1)^2", Field::QZ);
    EXPECT_EQ(a, FieldElem(RatFunc(Poly::constant(Rational(1)), Poly(std::vector<Rational>{1, -2, 1}))));
    EXPECT_EQ(parse_field_expr("(z^2-1)/(z-1)", Field::QZ), FieldElem(RatFunc(Poly(std::vector<Rational>{1, 1}))));
    EXPECT_EQ(parse_field_expr("3/4", Field::Q), q(3, 4));
    EXPECT_EQ(parse_field_expr("  - 2 ^ 3 ", Field::Q), q(-8));
    EXPECT_EQ(parse_field_expr("z^-2", Field::QZ), parse_field_expr("1/z^2", Field::QZ));
}

TEST(ParseField, Errors) {
    auto error = [](const char* text, Field f) {
        try {
            parse_field_expr(text, f);
        } catch (const Error& e) {
            return std::make_pair(e.kind(), e.position());
        }
        return std::make_pair(ErrorKind::ArityMismatch, std::optional<std::size_t>());
    };
    EXPECT_EQ(error("1 +", Field::Q).first, ErrorKind::SyntaxError);
    EXPECT_EQ(error("z", Field::Q), std::make_pair(ErrorKind::SyntaxError, std::optional<std::size_t>(0)));
    EXPECT_EQ(error("2*Y", Field::QZ), std::make_pair(ErrorKind::SyntaxError, std::optional<std::size_t>(2)));
    EXPECT_EQ(error("(1", Field::Q).first, ErrorKind::SyntaxError);
    EXPECT_EQ(error("1/(z-z)", Field::QZ).first, ErrorKind::ZeroDenominator);
    EXPECT_EQ(error("1 $ 2", Field::Q), std::make_pair(ErrorKind::SyntaxError, std::optional<std::size_t>(2)));
}

TEST(ParseOre, Examples) {
    const OrePoly p = parse_ore_expr("Y^2 - Y*(1/(z-1)) + 1/(z-1)^2", Field::QZ);
    const FieldElem c = qz("1/(z-1)");
    EXPECT_EQ(p, OrePoly(Field::QZ, {c * c, -c, qz("1")}));
    EXPECT_EQ(parse_ore_expr("Y - z", Field::QZ), OrePoly(Field::QZ, {-qz("z"), qz("1")}));
    EXPECT_EQ(parse_ore_expr("z*Y", Field::QZ), OrePoly(Field::QZ, {qz("1"), qz("z")}));
    EXPECT_EQ(parse_ore_expr("(Y - z)*(Y + z)", Field::QZ), parse_ore_expr("Y^2 - 1 - z^2", Field::QZ));
    EXPECT_THROW(parse_ore_expr("1/Y", Field::QZ), Error);
}

TEST(ParseOre, LeftCoefficientsMatchBinomialRewrite) {
    // x Y^n = sum_k C(n,k) Y^k d^(n-k)(x)
    const FieldElem x = qz("z^4/(z+1)");
    for (std::size_t n = 0; n <= 4; ++n) {
        const std::string text = "(z^4/(z+1))*Y^" + std::to_string(n);
        const OrePoly p = parse_ore_expr(text, Field::QZ);
        for (std::size_t k = 0; k <= n; ++k) {
            EXPECT_EQ(p.coeff(k), oracle::pascal_elem(Field::QZ, n, k) * oracle::nth_derivative(x, n - k));
        }
    }
}

TEST(Print, OreForm) {
    EXPECT_EQ(to_string(parse_ore_expr("Y^2 - Y*(1/(z-1)) + 1/(z-1)^2", Field::QZ)),
              "Y^2 - Y*(1/(z-1)) + 1/(z^2-2*z+1)");
    EXPECT_EQ(to_string(parse_ore_expr("Y - z", Field::QZ)), "Y - z");
    EXPECT_EQ(to_string(parse_ore_expr("z*Y", Field::QZ)), "Y*z + 1");
    EXPECT_EQ(to_string(parse_ore_expr("Y + 1 - z", Field::QZ)), "Y - (z-1)");
    EXPECT_EQ(to_string(parse_ore_expr("-Y^3 + 3*Y", Field::Q)), "-Y^3 + Y*3");
    EXPECT_EQ(to_string(OrePoly(Field::Q)), "0");
}

TEST(Print, RandomRoundTrip) {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 100; ++t) {
        const Field f = t % 2 ? Field::Q : Field::QZ;
        const OrePoly p = random_monic(f, t % 4, rng) + OrePoly::y_power(f, 0);
        EXPECT_EQ(parse_ore_expr(to_string(p), f), p) << to_string(p);
        const FieldElem x = random_elem(f, rng);
        EXPECT_EQ(parse_field_expr(to_string(x), f), x) << to_string(x);
    }
}

TEST(Lists, SeqAndCsv) {
    const Seq s = parse_seq("[1, z/(z+1), (z-1)^2]", Field::QZ);
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[1], qz("z/(z+1)"));
    EXPECT_EQ(parse_seq("1/2, 3", Field::Q).size(), 2u);
    EXPECT_TRUE(parse_seq("[]", Field::Q).empty());
    EXPECT_EQ(parse_csv("2, 1/z", Field::QZ), (std::vector<FieldElem>{qz("2"), qz("1/z")}));
    EXPECT_EQ(split_top_level("a, (b, c), [d, e]", ','), (std::vector<std::string>{"a", "(b, c)", "[d, e]"}));
    EXPECT_THROW(parse_seq("[1, 2", Field::Q), Error);
}
