#include "lwcq/qmzv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "lwcq/errors.hpp"

namespace lwcq {

QPoly QPoly::variable() {
    QPoly p;
    p.coeffs_ = {Rational(0), Rational(1)};
    return p;
}

QPoly QPoly::one_minus_q() {
    QPoly p;
    p.coeffs_ = {Rational(1), Rational(-1)};
    return p;
}

Rational QPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Rational QPoly::eval(const Rational& q) const {
    Rational r(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * q + coeffs_[i];
    return r;
}

double QPoly::eval_real(double q) const {
    double r = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * q + static_cast<double>(coeffs_[i]);
    return r;
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << rational_to_string(coeffs_[i]);
        if (i >= 1) os << "*q";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

bool is_admissible(const RhoYWord& w) { return !w.empty() && w.front() == 'r'; }

RhoYWord parse_word(const std::string& text) {
    for (char c : text) {
        if (c != 'r' && c != 'y') throw ParseError("word must be over {r, y}: '" + text + "'");
    }
    return text;
}

namespace {

using Memo = std::map<std::pair<RhoYWord, RhoYWord>, QWordComb>;

const QWordComb& qshuffle_memo(const RhoYWord& u, const RhoYWord& v, Memo& memo) {
    auto key = std::make_pair(u, v);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    QWordComb out;
    if (u.empty()) {
        out.add(v, QPoly(Rational(1)));
    } else if (v.empty()) {
        out.add(u, QPoly(Rational(1)));
    } else if (u.front() == 'y') {
        for (const auto& [w, c] : qshuffle_memo(u.substr(1), v, memo).terms()) {
            out.add("y" + w, c);
        }
    } else if (v.front() == 'y') {
        for (const auto& [w, c] : qshuffle_memo(u, v.substr(1), memo).terms()) {
            out.add("y" + w, c);
        }
    } else {
        // both start with ρ
        const RhoYWord ut = u.substr(1), vt = v.substr(1);
        for (const auto& [w, c] : qshuffle_memo(ut, v, memo).terms()) out.add("r" + w, c);
        for (const auto& [w, c] : qshuffle_memo(u, vt, memo).terms()) out.add("r" + w, c);
        const QPoly weight = QPoly::one_minus_q();
        for (const auto& [w, c] : qshuffle_memo(ut, vt, memo).terms()) {
            out.add("r" + w, weight * c);
        }
    }
    return memo.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

QWordComb qshuffle(const RhoYWord& u, const RhoYWord& v) {
    Memo memo;
    return qshuffle_memo(u, v, memo);
}

LinComb<RhoYWord, Rational, WordLess> q1_word_formula(int a, int b, int m, int n) {
    if (a < 1 || b < 1 || m < 1 || n < 1) {
        throw std::invalid_argument("q1_word_formula requires a, b, m, n >= 1");
    }
    auto block = [](int r, int ys) {
        return RhoYWord(static_cast<std::size_t>(r), 'r') + RhoYWord(static_cast<std::size_t>(ys), 'y');
    };
    LinComb<RhoYWord, Rational, WordLess> out;
    for (int i = 0; i <= b - 1; ++i) {
        out.add(block(a + i, m) + block(b - i, n), Rational(binomial(a + i - 1, i)));
    }
    for (int j = 0; j <= a - 1; ++j) {
        out.add(block(b + j, n) + block(a - j, m), Rational(binomial(b + j - 1, j)));
    }
    return out;
}

LinComb<RhoYWord, Rational, WordLess> specialize_q(const QWordComb& x, const Rational& q) {
    LinComb<RhoYWord, Rational, WordLess> out;
    for (const auto& [w, c] : x.terms()) out.add(w, c.eval(q));
    return out;
}

Lwc word_to_index(const RhoYWord& w) {
    if (w.empty()) return Lwc{};
    if (!is_admissible(w)) throw ParseError("word is not admissible (must start with r)");
    if (w.back() != 'y') throw ParseError("word has a trailing r and is not evaluable");
    std::vector<int> runs;  // c_1, ..., c_k
    int rho = 0;
    for (char c : w) {
        if (c == 'r') {
            ++rho;
        } else {
            runs.push_back(rho);
            rho = 0;
        }
    }
    std::reverse(runs.begin(), runs.end());
    return Lwc(std::move(runs));  // last entry is c_1 >= 1
}

namespace {

struct Kahan {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

double qpow(double q, double e) { return std::pow(q, e); }

}  // namespace

EvalResult zeta_q_flat_at_cutoff(const WeakSeq& flat, double q, long long cutoff) {
    EvalResult res;
    res.cutoff = cutoff;
    const std::size_t K = flat.size();
    if (K == 0) {
        res.value = 1.0;
        res.certified = true;
        res.tol_met = true;
        return res;
    }
    std::vector<Kahan> acc(K);
    const double one_minus_q = 1.0 - q;
    for (long long m = 1; m <= cutoff; ++m) {
        const double qm = qpow(q, static_cast<double>(m));
        const double bracket_inv = one_minus_q / (1.0 - qm);  // 1/[m]_q
        for (std::size_t j = K; j-- > 0;) {
            const double below = (j == 0) ? 1.0 : acc[j - 1].sum;
            if (below == 0.0) continue;
            const int e = flat[j];
            double w = 1.0;
            for (int t = 0; t < e; ++t) w *= qm * bracket_inv;
            acc[j].add(below * w);
        }
    }
    res.value = acc[K - 1].sum;

    // geometric tail: terms after the cutoff are bounded by
    // C(m−1, K−1) · q^{m·s_K}, with ratio r below 1 once m > cutoff
    const int last = flat.back();
    const double Q = qpow(q, static_cast<double>(last));
    const double denom = static_cast<double>(cutoff + 2 - static_cast<long long>(K));
    if (denom <= 0.0) {
        res.certified = false;
        res.tail = std::numeric_limits<double>::infinity();
        return res;
    }
    const double r = Q * static_cast<double>(cutoff + 1) / denom;
    if (r >= 1.0) {
        res.certified = false;
        res.tail = std::numeric_limits<double>::infinity();
        return res;
    }
    double comb = 1.0;  // C(cutoff, K−1)
    for (std::size_t t = 1; t < K; ++t) {
        comb *= static_cast<double>(cutoff - static_cast<long long>(t) + 1) / static_cast<double>(t);
    }
    res.tail = comb * qpow(Q, static_cast<double>(cutoff + 1)) / (1.0 - r);
    res.tail = res.tail * 1.01 + 1e-300;
    res.certified = true;
    return res;
}

EvalResult zeta_q(const Lwc& alpha, double q, const QEvalOptions& opts) {
    if (!(q > 0.0 && q < 1.0)) throw DivergenceError("q must lie in (0,1)");
    const WeakSeq& flat = alpha.parts();
    long long n = std::min(opts.initial_cutoff, opts.iter_cap);
    while (true) {
        EvalResult res = zeta_q_flat_at_cutoff(flat, q, n);
        res.tol_met = res.certified && res.tail <= opts.tol;
        if (res.tol_met || n >= opts.iter_cap) return res;
        n = std::min(2 * n, opts.iter_cap);
    }
}

EvalResult zeta_q_word(const RhoYWord& w, double q, const QEvalOptions& opts) {
    return zeta_q(word_to_index(w), q, opts);
}

const EvalResult& QZetaEvaluator::eval(const Lwc& alpha) {
    auto it = cache_.find(alpha);
    if (it != cache_.end()) return it->second;
    EvalResult res = zeta_q(alpha, q_, opts_);
    return cache_.emplace(alpha, res).first->second;
}

namespace {

Lwc symbol_to_lwc(const std::vector<int>& s, const std::vector<int>& I) {
    WeakSeq parts;
    for (std::size_t p = 0; p < s.size(); ++p) {
        parts.insert(parts.end(), static_cast<std::size_t>(I[p]), 0);
        parts.push_back(s[p]);
    }
    return Lwc(std::move(parts));
}

}  // namespace

QCheckReport duality_check(const std::vector<int>& s, const std::vector<int>& t, double q,
                           double tol, const QEvalOptions& opts) {
    if (s.size() != t.size() || s.empty()) {
        throw std::invalid_argument("duality requires tuples of equal positive length");
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || t[i] < 1) throw std::invalid_argument("duality tuples must be positive");
    }
    const std::size_t k = s.size();
    std::vector<int> ls(t), li(k), rs(k), ri(k);
    for (std::size_t p = 0; p < k; ++p) {
        li[p] = s[p] - 1;
        rs[p] = s[k - 1 - p];
        ri[p] = t[k - 1 - p] - 1;
    }
    QCheckReport rep;
    rep.tolerance = tol;
    EvalResult lhs = zeta_q(symbol_to_lwc(ls, li), q, opts);
    EvalResult rhs = zeta_q(symbol_to_lwc(rs, ri), q, opts);
    rep.lhs_value = lhs.value;
    rep.rhs_value = rhs.value;
    rep.residual = std::abs(lhs.value - rhs.value);
    rep.tail_bound = lhs.tail + rhs.tail;
    rep.verified = rep.residual <= tol + rep.tail_bound;
    return rep;
}

QCheckReport verify_q(const Relation& rel, double q, double tol, const QEvalOptions& opts) {
    QZetaEvaluator eval(q, opts);
    QCheckReport rep;
    rep.tolerance = tol;
    auto eval_side = [&](const ZetaComb& side, double& value_out) {
        Kahan value;
        double tails = 0.0;
        for (const auto& [prod, coeff] : side.terms()) {
            double term = 1.0;
            double term_tail = 0.0;
            for (const auto& sym : prod.factors) {
                const EvalResult& r = eval.eval(sym.flat());
                term_tail = term_tail * (std::abs(r.value) + r.tail) + std::abs(term) * r.tail;
                term *= r.value;
            }
            const double c = static_cast<double>(coeff);
            value.add(c * term);
            tails += std::abs(c) * term_tail;
        }
        value_out = value.sum;
        return tails;
    };
    rep.tail_bound = eval_side(rel.lhs, rep.lhs_value);
    rep.tail_bound += eval_side(rel.rhs, rep.rhs_value);
    rep.residual = std::abs(rep.lhs_value - rep.rhs_value);
    rep.verified = rep.residual <= tol + rep.tail_bound;
    return rep;
}

QCheckReport stuffle_q_check(int a, int b, int m, int n, double q, double tol,
                             const QEvalOptions& opts) {
    return verify_q(stuffle_relation(a, b, m, n), q, tol, opts);
}

QCheckReport homomorphism_check(const RhoYWord& u, const RhoYWord& v, double q, double tol,
                                const QEvalOptions& opts) {
    if (!u.empty() && !is_admissible(u)) throw ParseError("u is not admissible");
    if (!v.empty() && !is_admissible(v)) throw ParseError("v is not admissible");
    QZetaEvaluator eval(q, opts);
    QCheckReport rep;
    rep.tolerance = tol;

    const EvalResult ru = u.empty() ? EvalResult{1.0, 0.0, 0, true, true, 0.0}
                                    : zeta_q(word_to_index(u), q, opts);
    const EvalResult rv = v.empty() ? EvalResult{1.0, 0.0, 0, true, true, 0.0}
                                    : zeta_q(word_to_index(v), q, opts);
    rep.lhs_value = ru.value * rv.value;
    rep.tail_bound = ru.tail * (std::abs(rv.value) + rv.tail) + std::abs(ru.value) * rv.tail;

    Kahan rhs;
    const QWordComb expansion = qshuffle(u, v);
    for (const auto& [w, poly] : expansion.terms()) {
        const double c = poly.eval_real(q);
        if (w.empty()) {  // both inputs empty
            rhs.add(c);
            continue;
        }
        const EvalResult& r = eval.eval(word_to_index(w));
        rhs.add(c * r.value);
        rep.tail_bound += std::abs(c) * r.tail;
    }
    rep.rhs_value = rhs.sum;
    rep.residual = std::abs(rep.lhs_value - rep.rhs_value);
    rep.verified = rep.residual <= tol + rep.tail_bound;
    return rep;
}

}  // namespace lwcq
