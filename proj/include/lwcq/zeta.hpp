#ifndef LWCQ_ZETA_HPP
#define LWCQ_ZETA_HPP

#include <map>
#include <string>
#include <vector>

#include "lwcq/lincomb.hpp"
#include "lwcq/lwc.hpp"

namespace lwcq {

/// ζ(s_1,...,s_k; i_1,...,i_k) = ζ((0^{i_1}, s_1, ..., 0^{i_k}, s_k)):
/// the nested sum over 1 <= n_1 < ... < n_k with binomial gap weights
/// C(n_p − n_{p−1} − 1, i_p) and factors n_p^{-s_p}.
struct ZetaSymbol {
    std::vector<int> s;  // positive exponents
    std::vector<int> I;  // nonnegative binomial orders, same length

    ZetaSymbol() = default;
    ZetaSymbol(std::vector<int> s_, std::vector<int> I_);

    static ZetaSymbol single(int a, int m = 0) { return ZetaSymbol({a}, {m}); }
    static ZetaSymbol from_lwc(const Lwc& a);

    Lwc flat() const;
    std::size_t depth() const { return s.size(); }

    /// True convergence of the nested sum: every suffix satisfies
    /// Σ_{r≥p} (s_r − i_r − 1) >= 1.  Weaker than the per-part
    /// condition s_p >= i_p + 2, which is sufficient but not necessary.
    bool is_convergent() const;
    /// The per-part sufficient condition s_p >= i_p + 2 for all p.
    bool is_partwise_convergent() const;

    bool operator==(const ZetaSymbol& o) const { return s == o.s && I == o.I; }
};

bool grlex_less(const ZetaSymbol& a, const ZetaSymbol& b);

/// Grammar "s_1,...,s_k;i_1,...,i_k"; ";0,...,0" may be omitted.
ZetaSymbol parse_zeta_symbol(const std::string& text);
std::string format_zeta_symbol(const ZetaSymbol& sym);

// ---- numeric evaluation --------------------------------------------------

struct EvalOptions {
    double tol = 1e-8;
    long long iter_cap = (1LL << 31);
    long long initial_cutoff = 1024;
};

struct EvalResult {
    double value = 0.0;
    double tail = 0.0;   // certified bound on the discarded remainder
    long long cutoff = 0;
    bool certified = false;  // tail bound established
    bool tol_met = false;    // certified and tail <= tol
    double decay = 0.0;      // tail ~ N^{-decay}
};

/// Single pass at a fixed cutoff: forward prefix-sum dynamic
/// programming over the flat index sequence (cost O(k·N)), compensated
/// summation, and a per-level polynomial-envelope tail certificate.
EvalResult zeta_flat_at_cutoff(const WeakSeq& flat, long long cutoff);

/// Adaptive cutoff: grows the cutoff until the certified tail reaches
/// tol or the iteration cap is hit (then tol_met stays false).
/// Throws DivergenceError for non-convergent symbols.
EvalResult zeta_lwc(const ZetaSymbol& sym, const EvalOptions& opts = {});

/// Memoizing wrapper used by relation verification.
class ZetaEvaluator {
public:
    explicit ZetaEvaluator(EvalOptions opts = {}) : opts_(opts) {}
    const EvalResult& eval(const ZetaSymbol& sym);
    const EvalOptions& options() const { return opts_; }

private:
    EvalOptions opts_;
    std::map<Lwc, EvalResult> cache_;
};

// ---- Stirling reduction ---------------------------------------------------

/// Signed Stirling numbers of the first kind:
/// t(t−1)...(t−i+1) = Σ_k s(i,k) t^k.
class StirlingTable {
public:
    explicit StirlingTable(int max_i = 16);
    const BigInt& operator()(int i, int k) const;
    int max_order() const { return max_i_; }

private:
    int max_i_;
    std::vector<std::vector<BigInt>> rows_;
};

/// ζ(a;m) as a rational combination of single zeta values:
/// Σ_{k=0}^m s(m,k)/m!·ζ(a−k) − Σ_{k=0}^m s(m,k)/(m−1)!·ζ(a−k+1),
/// the second sum absent for m = 0.  Requires a >= m+2.
LinComb<ZetaSymbol> stirling_reduce(int a, int m);

// ---- relations -------------------------------------------------------------

/// Product of one or two zeta symbols (a single key of a relation side).
struct ZetaProduct {
    std::vector<ZetaSymbol> factors;  // kept sorted

    ZetaProduct() = default;
    explicit ZetaProduct(ZetaSymbol one) : factors{std::move(one)} {}
    ZetaProduct(ZetaSymbol a, ZetaSymbol b);

    bool operator==(const ZetaProduct& o) const { return factors == o.factors; }
};

bool grlex_less(const ZetaProduct& a, const ZetaProduct& b);
std::string format_zeta_product(const ZetaProduct& p);

using ZetaComb = LinComb<ZetaProduct>;

/// A candidate identity lhs = rhs between rational combinations of
/// (products of) zeta symbols.
struct Relation {
    std::string name;
    ZetaComb lhs;
    ZetaComb rhs;
};

/// ζ(a;m)·ζ(b;n) = three-part binomial expansion; coefficients come
/// from the closed quasi-shuffle formula, not an independent
/// derivation.  Requires a >= m+2 and b >= n+2.
Relation stuffle_relation(int a, int b, int m, int n);

/// ζ(a;m)·ζ(b;n) = Σ_i C(a+i−1,i) ζ(b−i,a+i;n,m)
///               + Σ_j C(b+j−1,j) ζ(a−j,b+j;m,n).
Relation shuffle_relation(int a, int b, int m, int n);

/// The m = n = 0 case of the shuffle relation.  Requires a, b >= 2.
Relation euler_decomposition(int a, int b);

/// stuffle rhs − shuffle rhs with common terms cancelled; positive part
/// on the left, negated negative part on the right.
Relation double_shuffle_relation(int a, int b, int m, int n);

struct SymbolReport {
    ZetaSymbol symbol;
    double value = 0.0;
    double tail = 0.0;
    long long cutoff = 0;
    bool partwise_convergent = true;  // per-term report on the stricter condition
};

struct VerifyReport {
    double lhs_value = 0.0;
    double rhs_value = 0.0;
    double residual = 0.0;
    double tail_bound = 0.0;  // combined over all terms
    double tolerance = 0.0;
    bool verified = false;
    std::vector<SymbolReport> per_symbol;
};

/// Evaluates both sides; verified iff |lhs − rhs| <= tol + combined
/// tails.  Throws DivergenceError when a divergent symbol is present.
VerifyReport verify(const Relation& rel, double tol, ZetaEvaluator& eval);

/// Adds delta to the coefficient of the first rhs term (negative
/// control helper).
Relation perturb_relation(const Relation& rel, const Rational& delta);

}  // namespace lwcq

#endif
