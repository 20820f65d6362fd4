#ifndef LWCQ_QUASI_SHUFFLE_HPP
#define LWCQ_QUASI_SHUFFLE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "lwcq/lincomb.hpp"
#include "lwcq/lwc.hpp"

namespace lwcq {

inline constexpr std::size_t kDefaultTermBudget = 10'000'000;

/// Quasi-shuffle (stuffle) of two weak-composition sequences via the
/// three-branch recursion: pull the first part of either side, or merge
/// the two first parts by addition.  Throws BudgetError when more than
/// term_budget terms are generated.
LinComb<WeakSeq> stuffle(const WeakSeq& a, const WeakSeq& b,
                         std::size_t term_budget = kDefaultTermBudget);

/// The same product on left weak compositions; every summand is again a
/// left weak composition.
LinComb<Lwc> quasi_shuffle(const Lwc& a, const Lwc& b,
                           std::size_t term_budget = kDefaultTermBudget);

/// Number of quasi-shuffle terms (with multiplicity) of sequences of
/// lengths p and q.
BigInt quasi_shuffle_count(int p, int q);

// ---- generic words ------------------------------------------------------

using Word = std::vector<int>;

/// Classical shuffle product of two words (letters kept apart).
LinComb<Word> shuffle(const Word& u, const Word& v);

/// Mixable shuffle: enumerate all interleavings of u and v, then merge
/// any subset of adjacent pairs (u-letter immediately followed by a
/// v-letter) with the letter product (integer addition).  A separate
/// code path from the stuffle recursion; their agreement is a theorem
/// under x^{a_1} ⊗ ... ⊗ x^{a_k} <-> (a_1, ..., a_k).
LinComb<Word> mixable_shuffle(const Word& u, const Word& v);

// ---- augmented (head-tagged) algebra ------------------------------------

/// Basis element x_0^{head} · M_{tail} of the head-extended algebra.
/// flatten() prepends the head to the tail; it is a valid nonempty LWC
/// except for the unit-like element (0, ∅) of the ambient unitary
/// algebra, which diamond admits but p_q does not.
struct MbarElement {
    int head = 0;
    Lwc tail;

    MbarElement() = default;
    MbarElement(int h, Lwc t);

    WeakSeq flatten() const;
    bool is_basis() const { return head > 0 || !tail.empty(); }
    long long size() const { return head + tail.size(); }

    bool operator==(const MbarElement& o) const { return head == o.head && tail == o.tail; }
};

bool grlex_less(const MbarElement& a, const MbarElement& b);

using MbarComb = LinComb<MbarElement>;

/// Augmented mixable shuffle: heads add; tails quasi-shuffle when both
/// nonempty, otherwise the nonempty tail survives.
MbarComb diamond(const MbarElement& a, const MbarElement& b,
                 std::size_t term_budget = kDefaultTermBudget);
MbarComb diamond(const MbarComb& x, const MbarComb& y,
                 std::size_t term_budget = kDefaultTermBudget);

/// The Rota–Baxter operator: \bar M_{(a_0, a')} -> \bar M_{(0, a_0, a')},
/// extended linearly.  Requires basis elements.
MbarComb p_q(const MbarComb& x);

/// P(x)⋄P(y) − P(x⋄P(y)) − P(P(x)⋄y) − P(x⋄y); identically zero when
/// p_q is a Rota–Baxter operator of weight 1.
MbarComb rb_residual(const MbarComb& x, const MbarComb& y,
                     std::size_t term_budget = kDefaultTermBudget);

// ---- closed stuffle formulas (cross-checked against the recursion) ------

/// 0^m * (0^n, b) as a double binomial sum.
LinComb<WeakSeq> closed_zero_zero_b(int m, int n, int b);
/// 0^m * 0^n as a single binomial sum.
LinComb<WeakSeq> closed_zero_zero(int m, int n);
/// (0^m, a) * (0^n, b) as a three-part binomial sum.
LinComb<WeakSeq> closed_0a_0b(int a, int b, int m, int n);

/// Spitzer's identity at the level of M-basis expansions: left side is
/// the singleton key (k,...,k) (n copies); right side is
/// (−1)^n Σ_{α⊨n} (−1)^{ℓ(α)} / (ℓ(α)!·α_1⋯α_ℓ) · M_{kα_1}⋯M_{kα_ℓ}
/// with the products expanded by iterated quasi-shuffle.
std::pair<LinComb<Lwc>, LinComb<Lwc>> spitzer_check(
    int k, int n, std::size_t term_budget = kDefaultTermBudget);

}  // namespace lwcq

#endif
