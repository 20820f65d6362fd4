#ifndef LWCQ_STANDARD_RBA_HPP
#define LWCQ_STANDARD_RBA_HPP

#include <vector>

#include "lwcq/series.hpp"

namespace lwcq {

/// Finite truncation of a sequence with polynomial entries in
/// x_1..x_L; componentwise ring operations.  Entry m of the summation
/// operator depends only on x_1..x_{m−1}.
struct PolySeq {
    std::vector<TruncatedSeries> entries;

    static PolySeq zero(int length, int vars, int degree_cap);
    /// The generator sequence (x_1, x_2, ..., x_L).
    static PolySeq generator(int length, int degree_cap);
    /// Componentwise power of the generator, (x_1^k, x_2^k, ...).
    static PolySeq generator_power(int k, int length, int degree_cap);

    std::size_t length() const { return entries.size(); }
    PolySeq& operator+=(const PolySeq& o);
    PolySeq& operator-=(const PolySeq& o);
    friend PolySeq operator+(PolySeq a, const PolySeq& b) { return a += b; }
    friend PolySeq operator-(PolySeq a, const PolySeq& b) { return a -= b; }
    friend PolySeq hadamard(const PolySeq& a, const PolySeq& b);  // entrywise product
    bool operator==(const PolySeq& o) const { return entries == o.entries; }
};

/// The summation Rota–Baxter operator: (a_1, a_2, ...) ->
/// (0, a_1, a_1+a_2, ...), truncated to the sequence length.
PolySeq p_r(const PolySeq& a);

/// (P x)^{[n]} via the recursion (P x)^{[n+1]} = P(x · (P x)^{[n]});
/// entry m equals e_n(x_1, ..., x_{m−1}).
PolySeq iterate_Pn(int n, int length, int degree_cap);

/// P(x^k): entry m equals the power sum p_k(x_1, ..., x_{m−1}).
PolySeq power_sum_seq(int k, int length, int degree_cap);

/// Elementary symmetric polynomial e_n(x_1..x_m) by direct subset
/// enumeration (test oracle grade, small n).
TruncatedSeries elementary_symmetric(int n, int m, int degree_cap);
/// Power sum p_k(x_1..x_m).
TruncatedSeries power_sum(int k, int m, int degree_cap);

struct WaringReport {
    bool equal = false;
    std::vector<TruncatedSeries> lhs;  // coefficients of t^0..t^deg of exp(−Σ (−t)^k p_k/k)
    std::vector<TruncatedSeries> rhs;  // e_0, e_1, ..., e_deg
};

/// Coefficientwise comparison of exp(−Σ_{k≥1} (−1)^k t^k p_k / k) with
/// Σ_n e_n t^n in x_1..x_m, truncated at t-order deg.
WaringReport waring_check(int m, int deg);

}  // namespace lwcq

#endif
