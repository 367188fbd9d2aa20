#include "dlin/corpus.hpp"

namespace dlin {

namespace {

FieldElem q(long num, long den = 1) { return FieldElem(Field::Q, Rational(num, den)); }

FieldElem qq(long num, long den = 1) { return FieldElem(Field::QZ, Rational(num, den)); }

FieldElem qz(const Poly& num, const Poly& den = Poly::constant(Rational(1))) {
    return FieldElem(RatFunc(num, den));
}

Poly zpoly(std::vector<Rational> coeffs) { return Poly(std::move(coeffs)); }

} // namespace

std::vector<CorpusEntry> regression_corpus() {
    const Poly z = Poly::variable();
    const Poly one = Poly::constant(Rational(1));
    const Poly zm1 = zpoly({Rational(-1), Rational(1)});
    const FieldElem c = qz(one, zm1);
    const Field Q = Field::Q;
    const Field QZ = Field::QZ;

    std::vector<CorpusEntry> out;
    out.push_back({"geometric-2", DRSeq(OrePoly(Q, {q(-2), q(1)}), {q(1)})});
    out.push_back({"fibonacci", DRSeq(OrePoly(Q, {q(-1), q(-1), q(1)}), {q(0), q(1)})});
    out.push_back({"oscillator-4", DRSeq(OrePoly(Q, {q(4), q(0), q(1)}), {q(1), q(0)})});
    out.push_back({"cubic-q", DRSeq(OrePoly(Q, {q(1), q(-2), q(0), q(1)}), {q(1), q(2), q(-1, 3)})});
    out.push_back({"target-1/z", DRSeq(OrePoly(QZ, {qz(one, z), FieldElem::one(QZ)}), {qz(one, z)})});
    out.push_back({"power-3/z", DRSeq(OrePoly(QZ, {qz(zpoly({Rational(-3)}), z), FieldElem::one(QZ)}), {FieldElem::one(QZ)})});
    out.push_back({"exp-z", DRSeq(OrePoly(QZ, {-FieldElem::variable(), FieldElem::one(QZ)}), {FieldElem::one(QZ)})});
    out.push_back({"companion-c", DRSeq(OrePoly(QZ, {c * c, -c, FieldElem::one(QZ)}), {qq(2), qq(3)})});
    out.push_back({"alpha-beta", DRSeq(OrePoly(QZ, {-FieldElem::variable(), -qz(one, z), FieldElem::one(QZ)}),
                                       {FieldElem::one(QZ), FieldElem::zero(QZ)})});
    out.push_back({"airy-like", DRSeq(OrePoly(QZ, {FieldElem::variable(), FieldElem::zero(QZ), FieldElem::one(QZ)}),
                                      {FieldElem::zero(QZ), FieldElem::one(QZ)})});
    out.push_back({"cubic-qz", DRSeq(OrePoly(QZ, {FieldElem::integer(QZ, -1), FieldElem::zero(QZ),
                                                  -FieldElem::variable(), FieldElem::one(QZ)}),
                                     {FieldElem::one(QZ), FieldElem::zero(QZ), FieldElem::one(QZ)})});
    return out;
}

std::vector<DRSeq> regression_sequences() {
    std::vector<DRSeq> out;
    for (auto& e : regression_corpus()) {
        out.push_back(std::move(e.seq));
    }
    return out;
}

} // namespace dlin
