#ifndef DLIN_DRS_HPP
#define DLIN_DRS_HPP

#include "dlin/hurwitz.hpp"
#include "dlin/ore.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace dlin {

/// A differentially recursive sequence given by its generator: a monic
/// annihilator P of degree d >= 1 and the initial values a(0..d-1).
class DRSeq {
public:
    /// Throws NotMonic or ArityMismatch when the invariants fail.
    DRSeq(OrePoly annihilator, std::vector<FieldElem> inits);

    const OrePoly& annihilator() const noexcept { return annihilator_; }
    const std::vector<FieldElem>& inits() const noexcept { return inits_; }
    std::size_t order() const noexcept { return inits_.size(); }
    Field field() const noexcept { return annihilator_.field(); }

    friend bool operator==(const DRSeq& a, const DRSeq& b) {
        return a.annihilator_ == b.annihilator_ && a.inits_ == b.inits_;
    }

private:
    OrePoly annihilator_;
    std::vector<FieldElem> inits_;
};

/// The solutions o_0..o_{d-1} of a monic P whose first d x d block is the
/// identity; row i is the sequence n -> y_i^*(y_n).
struct FundMatrix {
    std::vector<Seq> solutions;
    std::size_t degree = 0;
    std::size_t length = 0;
};

/// Right action a <| P = sum_i t(c_i) N^i(a). The result is deg P entries
/// shorter than `a`. Throws PrefixTooShort when a has at most deg P entries.
Seq act(const Seq& a, const OrePoly& p);

/// Prefix of length L generated by the scalar recursion
/// a(n+d) = sum_i sum_k C(n,k) d^k(c_i) a(n-k+i), where Y^d = sum_i Y^i c_i
/// modulo the annihilator.
Seq materialize(const DRSeq& r, std::size_t length);

/// Companion-matrix recursion v(k+1) = d(v(k)) + A v(k), v(0) = e_0.
/// Throws NotMonic unless p is monic of degree >= 1, PrefixTooShort if length < deg p.
FundMatrix fundamental_matrix(const OrePoly& p, std::size_t length);

/// sum_i a_i o_i. Throws ArityMismatch unless |a| = deg p.
Seq from_initial(const OrePoly& p, const std::vector<FieldElem>& a, std::size_t length);

std::size_t default_window(std::size_t bound);

/// Least-degree monic annihilator of degree <= bound, found from the linear
/// system sum_i c_i sum_k C(n,k) (-1)^k d^k(a(n-k+i)) = 0, n < bound, and
/// confirmed by a <| P = 0 on the first `window` entries of `a`. The answer is
/// certified under the assumption that the true order is at most `bound`.
/// Requires a.size() >= 2 * bound (PrefixTooShort); a window below `bound`
/// is raised to `bound`. When the chosen solution fails the window, the same
/// degree is retried with every row the prefix determines.
std::optional<OrePoly> min_annihilator(const Seq& a, std::size_t bound, std::size_t window);
std::optional<OrePoly> min_annihilator(const Seq& a, std::size_t bound);

/// Generator of the Hurwitz product; the annihilator is searched up to
/// order d_x * d_y on a prefix of at least `length` entries.
DRSeq product(const DRSeq& x, const DRSeq& y, std::size_t length = 0);

/// Generator of the entrywise sum; annihilator searched up to d_x + d_y.
DRSeq sum(const DRSeq& x, const DRSeq& y, std::size_t length = 0);

enum class Embedding { Source, Target };

/// s(x) as (Y, [x]); t(x) as (Y - d(x)/x, [x]), falling back to Y for x = 0.
DRSeq embed_as_drs(const FieldElem& x, Embedding which);

struct InclusionReport {
    bool divides = false;         // B = A Q exactly
    std::size_t samples = 0;      // random solutions of A checked
    std::size_t killed = 0;       // how many of them B annihilated
    bool holds() const noexcept { return divides && killed == samples; }
};

/// Whether A is a left factor of B, and if so whether sampled solutions of A
/// are annihilated by B. Throws NotMonic unless both are monic.
InclusionReport divisibility_inclusion(const OrePoly& a, const OrePoly& b, std::size_t samples,
                                       std::uint64_t seed = 0x5eed);

/// Least-order recurrence sum_j p_j a(n+j) = 0 for n < window with
/// p_d = 1 and d <= bound (coefficients applied without derivation).
/// Throws PrefixTooShort unless a.size() >= window + bound.
std::optional<std::vector<FieldElem>> find_linear_recurrence(const Seq& a, std::size_t bound,
                                                             std::size_t window);

} // namespace dlin

#endif
