#ifndef DLIN_HOPF_HPP
#define DLIN_HOPF_HPP

#include "dlin/drs.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dlin {

/// Delta(alpha) = sum_i N^i(alpha) (x) o_i, kept as the list of leg pairs.
struct ComultLegs {
    std::vector<std::pair<Seq, Seq>> pairs;
    std::size_t degree = 0;
    std::size_t length = 0;
};

/// alpha(0). Throws EmptyPrefix.
FieldElem counit(const Seq& a);

/// Legs of length L. Throws PrefixTooShort if L < order.
ComultLegs comult(const DRSeq& r, std::size_t length);

/// S(a)(n) = sum_k C(n,k) (-1)^(n-k) d^k(a(n-k)).
Seq antipode(const Seq& a);

/// Outcome of one axiom check. `first_failure` lists key/value details of the
/// first violation in a fixed order.
struct CheckReport {
    std::string check;
    bool pass = true;
    std::vector<std::pair<std::string, std::string>> first_failure;
    std::string note;
};

/// a(n) = sum_i a(i) o_i(n) for n < L, and sum_i N^i(a) o_i(0) = a.
CheckReport check_counit_axiom(const DRSeq& r, std::size_t length);

/// a(h+k) = sum_j C(k,j) sum_i (N^i a)(j) d^(k-j)(o_i(h)).
CheckReport check_takeuchi(const DRSeq& r, std::size_t h, std::size_t k);
/// check_takeuchi for every h + k <= max_sum.
CheckReport check_takeuchi_all(const DRSeq& r, std::size_t max_sum);

/// (i) S(S(a)) = a; (ii) S(s(x)) = t(x) and S(t(x)) = s(x) for the leading
/// entries x of a; (iii) S(a)(n) = ((nabla - N)^n a)(0).
CheckReport check_antipode(const Seq& a);

/// sum_i S(N^i a) o_i = t(a(0)) on a prefix of length L. When it fails the
/// note carries the outcome of sum_i N^i(a) S(o_i) = s(a(0)).
CheckReport check_antipode_axiom(const DRSeq& r, std::size_t length);

/// S(a) is again differentially recursive of order <= order(a).
CheckReport check_antipode_closure(const DRSeq& r);

/// Every check above over the given sequences; one report per check name.
std::vector<CheckReport> hopf_suite(const std::vector<DRSeq>& corpus);

} // namespace dlin

#endif
