#include "dlin/error.hpp"
#include "dlin/hurwitz.hpp"
#include "dlin/random.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace dlin;
using oracle::q;
using oracle::qz;

namespace {

Seq random_seq(Field f, std::size_t len, std::mt19937_64& rng) {
    std::vector<FieldElem> t;
    for (std::size_t i = 0; i < len; ++i) {
        t.push_back(random_elem(f, rng));
    }
    return Seq(f, t);
}

Seq S(Field f, std::vector<FieldElem> t) { return Seq(f, std::move(t)); }

} // namespace

TEST(Hurwitz, ProductMatchesConvolution) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 30; ++t) {
        const Field f = t % 2 ? Field::Q : Field::QZ;
        const Seq a = random_seq(f, 7, rng);
        const Seq b = random_seq(f, 5 + t % 4, rng);
        EXPECT_TRUE(oracle::same(hmul(a, b), oracle::hurwitz_product(a, b)));
    }
}

TEST(Hurwitz, SourceTimesTarget) {
    const FieldElem x = qz("z^2+1");
    const FieldElem y = qz("1/(z-2)");
    const Seq p = hmul(source(x, 8), target(y, 8));
    for (std::size_t n = 0; n < 8; ++n) {
        EXPECT_EQ(p[n], x * oracle::nth_derivative(y, n));
    }
}

TEST(Hurwitz, UnitAndScaling) {
    std::mt19937_64 rng(32);
    const Seq a = random_seq(Field::QZ, 6, rng);
    EXPECT_TRUE(oracle::same(hmul(a, source(qz("1"), 6)), a));
    const FieldElem x = qz("3*z-1");
    const Seq l = hscale_left(x, a);
    for (std::size_t n = 0; n < a.size(); ++n) {
        EXPECT_EQ(l[n], x * a[n]);
    }
    EXPECT_TRUE(oracle::same(hscale_right(source(qz("1"), 6), x), target(x, 6)));
    EXPECT_TRUE(oracle::all_zero(hadd(a, hneg(a))));
    EXPECT_TRUE(oracle::all_zero(hsub(a, a)));
}

TEST(Hurwitz, TruncationUsesCommonLength) {
    const Seq a = S(Field::Q, {q(1), q(2), q(3)});
    const Seq b = S(Field::Q, {q(1), q(1)});
    EXPECT_EQ(hmul(a, b).size(), 2u);
    EXPECT_EQ(hadd(a, b).size(), 2u);
    const SeqComparison c = compare(a, S(Field::Q, {q(1), q(2)}));
    EXPECT_TRUE(c.equal);
    EXPECT_EQ(c.compared, 2u);
    const SeqComparison d = compare(a, S(Field::Q, {q(1), q(5), q(3)}));
    EXPECT_FALSE(d.equal);
    EXPECT_EQ(d.first_mismatch, std::optional<std::size_t>(1));
}

TEST(Hurwitz, FieldMismatch) {
    EXPECT_THROW(hmul(source(q(1), 3), source(qz("1"), 3)), Error);
}

TEST(Hurwitz, ShiftExamples) {
    EXPECT_TRUE(oracle::all_zero(shift(source(qz("z"), 6))));
    const FieldElem x = qz("1/(z+1)");
    EXPECT_TRUE(oracle::same(shift(target(x, 7)), target(derive(x), 6)));
    const Seq p = S(Field::QZ, {qz("1"), qz("z"), qz("z^2"), qz("z^3")});
    EXPECT_TRUE(oracle::same(shift(p), S(Field::QZ, {qz("z"), qz("z^2"), qz("z^3")})));
    try {
        shift(Seq(Field::Q));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::EmptyPrefix);
    }
}

TEST(Hurwitz, NablaExamples) {
    const FieldElem x = qz("z^3/(z-1)");
    EXPECT_TRUE(oracle::same(nabla(target(x, 6)), shift(target(x, 7))));
    EXPECT_TRUE(oracle::all_zero(nabla(S(Field::Q, {q(3), q(1, 2)}))));
    EXPECT_TRUE(oracle::same(nabla(S(Field::QZ, {qz("z"), qz("z^2")})), S(Field::QZ, {qz("1"), qz("2*z")})));
}

TEST(Hurwitz, SourceAndTarget) {
    EXPECT_TRUE(oracle::same(target(qz("1/z"), 4), S(Field::QZ, {qz("1/z"), qz("-1/z^2"), qz("2/z^3"), qz("-6/z^4")})));
    const Seq s = source(qz("z"), 5);
    EXPECT_EQ(s[0], qz("z"));
    for (std::size_t n = 1; n < 5; ++n) {
        EXPECT_TRUE(s[n].is_zero());
    }
    EXPECT_TRUE(oracle::same(target(q(7, 2), 6), source(q(7, 2), 6)));
}

TEST(Hurwitz, InverseExamples) {
    EXPECT_TRUE(oracle::same(hinv(target(qz("z"), 8)), target(qz("1/z"), 8)));
    EXPECT_TRUE(oracle::same(hinv(source(qz("z+1"), 6)), source(qz("1/(z+1)"), 6)));
    std::mt19937_64 rng(33);
    for (int t = 0; t < 10; ++t) {
        Seq a = random_seq(Field::QZ, 6, rng);
        if (a[0].is_zero()) {
            continue;
        }
        EXPECT_TRUE(oracle::same(hmul(a, hinv(a)), source(qz("1"), 6)));
    }
    try {
        hinv(source(qz("0"), 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
    }
}

TEST(Hurwitz, KerDerivation) {
    EXPECT_TRUE(oracle::all_zero(ker_derivation(target(qz("1/(z^2+1)"), 8))));
    EXPECT_TRUE(oracle::all_zero(ker_derivation(source(q(4), 5))));
    EXPECT_EQ(ker_derivation(source(q(4), 5)).size(), 4u);
    EXPECT_THROW(ker_derivation(Seq(Field::Q)), Error);
}

TEST(Hurwitz, AlgebraProperties) {
    std::mt19937_64 rng(34);
    for (int t = 0; t < 20; ++t) {
        const Field f = t % 2 ? Field::Q : Field::QZ;
        const Seq a = random_seq(f, 7, rng);
        const Seq b = random_seq(f, 7, rng);
        const Seq c = random_seq(f, 7, rng);
        EXPECT_TRUE(oracle::same(hmul(a, b), hmul(b, a)));
        EXPECT_TRUE(oracle::same(hmul(hmul(a, b), c), hmul(a, hmul(b, c))));
        // N is a derivation of the product
        EXPECT_TRUE(oracle::same(shift(hmul(a, b)), hadd(hmul(shift(a), b), hmul(a, shift(b)))));
        EXPECT_TRUE(oracle::same(nabla(shift(a)), shift(nabla(a))));
    }
}

TEST(Hurwitz, EmbeddingsAreMorphisms) {
    std::mt19937_64 rng(35);
    for (int t = 0; t < 20; ++t) {
        const FieldElem x = random_elem(Field::QZ, rng);
        const FieldElem y = random_elem(Field::QZ, rng);
        EXPECT_TRUE(oracle::same(target(x * y, 7), hmul(target(x, 7), target(y, 7))));
        EXPECT_TRUE(oracle::same(shift(target(x, 8)), target(derive(x), 7)));
        EXPECT_TRUE(oracle::same(source(x * y, 7), hmul(source(x, 7), source(y, 7))));
        EXPECT_TRUE(oracle::all_zero(shift(source(x, 7))));
    }
}

TEST(Hurwitz, Printing) {
    EXPECT_EQ(to_string(Seq(Field::Q, {q(1), q(-1, 2)})), "[1, -1/2]");
}
