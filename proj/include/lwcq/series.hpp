#ifndef LWCQ_SERIES_HPP
#define LWCQ_SERIES_HPP

#include <map>
#include <string>
#include <vector>

#include "lwcq/lincomb.hpp"
#include "lwcq/lwc.hpp"
#include "lwcq/quasi_shuffle.hpp"

namespace lwcq {

/// Sparse monomial: sorted (variable index, exponent) pairs, exponents
/// positive.  Variable 0 is reserved for the head variable x_0 of the
/// augmented algebra; ordinary expansions use x_1..x_N.
struct Monomial {
    std::vector<std::pair<int, int>> factors;

    int degree() const {
        int d = 0;
        for (auto [v, e] : factors) d += e;
        return d;
    }
    bool operator==(const Monomial& o) const { return factors == o.factors; }
};

bool grlex_less(const Monomial& a, const Monomial& b);

/// Exact multivariate polynomial truncated at total degree D in the
/// variables x_0..x_N.  Truncation is an ideal: products re-truncate.
class TruncatedSeries {
public:
    TruncatedSeries(int var_count, int degree_cap)
        : var_count_(var_count), degree_cap_(degree_cap) {}

    static TruncatedSeries constant(int var_count, int degree_cap, const Rational& c);

    int var_count() const { return var_count_; }
    int degree_cap() const { return degree_cap_; }

    void add_term(const Monomial& m, const Rational& c);
    Rational coeff(const Monomial& m) const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& s);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    /// Exact product, re-truncated at the shared degree cap.
    friend TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

    bool operator==(const TruncatedSeries& o) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational, GrlexLess<Monomial>>& terms() const { return terms_; }

    /// Exact evaluation at x_v = values[v]; every variable occurring in
    /// the series must have a value.
    Rational specialize(const std::map<int, Rational>& values) const;
    double specialize_real(const std::map<int, double>& values) const;

private:
    int var_count_;
    int degree_cap_;
    std::map<Monomial, Rational, GrlexLess<Monomial>> terms_;
};

/// Monomial expansion via the binomial gap formula: over chains
/// 1 <= n_1 < ... < n_k <= N the coefficient is the product of
/// C(n_p − n_{p−1} − 1, i_p) with n_0 = 0.
TruncatedSeries expand_M(const Lwc& a, int vars, int degree_cap);

/// The defining expansion: chains with explicit exponent-0 positions,
/// enumerated literally.  Independent route kept for cross-checking.
TruncatedSeries expand_M_by_definition(const Lwc& a, int vars, int degree_cap);

/// Fundamental expansion: weakly increasing index chains over all flat
/// positions of a, strict exactly after each block boundary
/// a_p = i_1 + s_1 + ... + i_p + s_p, p < k.  Exponent-0 positions
/// contribute factor 1 but constrain the chain.
TruncatedSeries expand_F(const Lwc& a, int vars, int degree_cap);

/// Labeled chain poset of Construction-style block data: zero chains
/// C_1..C_k labeled first in order, then the positive chains in reverse
/// block order; sigma marks which elements carry exponent 1.
struct LabeledPoset {
    std::vector<int> labels;  // label of the r-th chain element (1-based values)
    std::vector<int> sigma;   // 0 on zero blocks, 1 on positive blocks
};

LabeledPoset build_poset(const Lwc& a);

/// Generating function of the labeled poset: sum of weights over all
/// order- and label-compatible maps into {1..N}.  Independent oracle
/// for expand_F; the strict/weak pattern is read off the labels.
TruncatedSeries gamma_P(const Lwc& a, int vars, int degree_cap);

/// x_0^{head} · expand_M(tail).
TruncatedSeries expand_Mbar(const MbarElement& a, int vars, int degree_cap);

/// Linear extension of expand_M over an M-basis combination.
TruncatedSeries expand_M_lincomb(const LinComb<Lwc>& x, int vars, int degree_cap);
TruncatedSeries expand_Mbar_lincomb(const MbarComb& x, int vars, int degree_cap);

std::string format_series(const TruncatedSeries& s);

}  // namespace lwcq

#endif
