#ifndef LWCQ_QMZV_HPP
#define LWCQ_QMZV_HPP

#include <string>
#include <vector>

#include "lwcq/lincomb.hpp"
#include "lwcq/lwc.hpp"
#include "lwcq/zeta.hpp"

namespace lwcq {

/// Exact univariate polynomial in q with rational coefficients.
class QPoly {
public:
    QPoly() = default;
    QPoly(Rational c) { if (c != 0) coeffs_.push_back(std::move(c)); }  // NOLINT(google-explicit-constructor)
    static QPoly variable();      // q
    static QPoly one_minus_q();   // 1 - q

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int k) const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }

    Rational eval(const Rational& q) const;
    double eval_real(double q) const;
    std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;  // ascending powers of q
};

inline bool coeff_is_zero(const QPoly& p) { return p.is_zero(); }

/// Word over the two-letter alphabet {ρ, y}, stored as 'r'/'y' text.
using RhoYWord = std::string;

bool is_admissible(const RhoYWord& w);           // nonempty, starts with ρ
RhoYWord parse_word(const std::string& text);    // validates the alphabet
bool grlex_less(const RhoYWord&, const RhoYWord&) = delete;  // use WordLess

struct WordLess {
    bool operator()(const RhoYWord& a, const RhoYWord& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

using QWordComb = LinComb<RhoYWord, QPoly, WordLess>;

/// q-shuffle: 𝟙 is the unit, leading y letters migrate out front, and
/// ρu ⧢ ρv = ρ(u⧢ρv) + ρ(ρu⧢v) + (1−q)ρ(u⧢v).
QWordComb qshuffle(const RhoYWord& u, const RhoYWord& v);

/// The closed q = 1 form of ρ^a y^m ⧢ ρ^b y^n:
/// Σ_{i<b} C(a+i−1,i) ρ^{a+i}y^mρ^{b−i}y^n
/// + Σ_{j<a} C(b+j−1,j) ρ^{b+j}y^nρ^{a−j}y^m.
LinComb<RhoYWord, Rational, WordLess> q1_word_formula(int a, int b, int m, int n);

/// Specialize the q-shuffle coefficients at a rational q.
LinComb<RhoYWord, Rational, WordLess> specialize_q(const QWordComb& x, const Rational& q);

/// Index tuple of a y-terminated admissible word: ρ^{c_1}y ... ρ^{c_k}y
/// maps to (c_k, ..., c_1), always a left weak composition.
Lwc word_to_index(const RhoYWord& w);

// ---- numeric layer ---------------------------------------------------------

struct QEvalOptions {
    double tol = 1e-10;
    long long iter_cap = (1LL << 22);
    long long initial_cutoff = 256;
};

/// ζ_q(α) = Σ_{n_1<...<n_k} q^{Σ n_p α_p} / Π [n_p]_q^{α_p} by the same
/// forward prefix-sum scheme as the classical layer, with a geometric
/// tail certificate driven by q^{n·α_k}.
EvalResult zeta_q(const Lwc& alpha, double q, const QEvalOptions& opts = {});
EvalResult zeta_q_flat_at_cutoff(const WeakSeq& flat, double q, long long cutoff);

/// Evaluate a y-terminated admissible word (𝟙 evaluates to 1).
EvalResult zeta_q_word(const RhoYWord& w, double q, const QEvalOptions& opts = {});

class QZetaEvaluator {
public:
    QZetaEvaluator(double q, QEvalOptions opts = {}) : q_(q), opts_(opts) {}
    const EvalResult& eval(const Lwc& alpha);
    double q() const { return q_; }

private:
    double q_;
    QEvalOptions opts_;
    std::map<Lwc, EvalResult> cache_;
};

struct QCheckReport {
    double lhs_value = 0.0;
    double rhs_value = 0.0;
    double residual = 0.0;
    double tail_bound = 0.0;
    double tolerance = 0.0;
    bool verified = false;
};

/// ζ_q(t_1,...,t_k; s_1−1,...,s_k−1) vs ζ_q(s_k,...,s_1; t_k−1,...,t_1−1).
QCheckReport duality_check(const std::vector<int>& s, const std::vector<int>& t, double q,
                           double tol, const QEvalOptions& opts = {});

/// The stuffle pattern with ζ replaced by ζ_q, verified numerically.
QCheckReport stuffle_q_check(int a, int b, int m, int n, double q, double tol,
                             const QEvalOptions& opts = {});

/// Verify any symbol relation under the ζ_q evaluation.
QCheckReport verify_q(const Relation& rel, double q, double tol, const QEvalOptions& opts = {});

/// |ζ_q(u)·ζ_q(v) − Σ coeff(q)·ζ_q(w)| over the q-shuffle expansion.
QCheckReport homomorphism_check(const RhoYWord& u, const RhoYWord& v, double q, double tol,
                                const QEvalOptions& opts = {});

}  // namespace lwcq

#endif
