#include "lwcq/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lwcq/errors.hpp"
#include "lwcq/quasi_shuffle.hpp"

namespace lwcq {

ZetaSymbol::ZetaSymbol(std::vector<int> s_, std::vector<int> I_)
    : s(std::move(s_)), I(std::move(I_)) {
    if (s.size() != I.size()) throw ParseError("zeta symbol: s and I lengths differ");
    for (int v : s) {
        if (v < 1) throw ParseError("zeta symbol: exponents must be positive");
    }
    for (int v : I) {
        if (v < 0) throw ParseError("zeta symbol: binomial orders must be nonnegative");
    }
}

ZetaSymbol ZetaSymbol::from_lwc(const Lwc& a) {
    ZetaSymbol sym;
    for (const auto& b : blocks(a)) {
        sym.I.push_back(b.zeros);
        sym.s.push_back(b.part);
    }
    return sym;
}

Lwc ZetaSymbol::flat() const {
    WeakSeq parts;
    for (std::size_t p = 0; p < s.size(); ++p) {
        parts.insert(parts.end(), static_cast<std::size_t>(I[p]), 0);
        parts.push_back(s[p]);
    }
    return Lwc(std::move(parts));
}

bool ZetaSymbol::is_convergent() const {
    long long margin = 0;
    for (std::size_t p = s.size(); p-- > 0;) {
        margin += s[p] - I[p] - 1;
        if (margin < 1) return false;
    }
    return true;
}

bool ZetaSymbol::is_partwise_convergent() const {
    for (std::size_t p = 0; p < s.size(); ++p) {
        if (s[p] < I[p] + 2) return false;
    }
    return true;
}

bool grlex_less(const ZetaSymbol& a, const ZetaSymbol& b) {
    return grlex_less(a.flat(), b.flat());
}

ZetaSymbol parse_zeta_symbol(const std::string& text) {
    auto parse_list = [&](const std::string& part) {
        std::vector<int> out;
        std::stringstream ss(part);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t idx = 0;
            int v;
            try {
                v = std::stoi(item, &idx);
            } catch (const std::exception&) {
                throw ParseError("bad zeta symbol entry '" + item + "'");
            }
            while (idx < item.size() && std::isspace(static_cast<unsigned char>(item[idx]))) ++idx;
            if (idx != item.size()) throw ParseError("bad zeta symbol entry '" + item + "'");
            out.push_back(v);
        }
        if (out.empty()) throw ParseError("empty list in zeta symbol '" + text + "'");
        return out;
    };
    auto semi = text.find(';');
    std::vector<int> s = parse_list(semi == std::string::npos ? text : text.substr(0, semi));
    std::vector<int> I;
    if (semi == std::string::npos) {
        I.assign(s.size(), 0);
    } else {
        I = parse_list(text.substr(semi + 1));
    }
    return ZetaSymbol(std::move(s), std::move(I));
}

std::string format_zeta_symbol(const ZetaSymbol& sym) {
    std::ostringstream os;
    for (std::size_t p = 0; p < sym.s.size(); ++p) {
        if (p) os << ',';
        os << sym.s[p];
    }
    if (std::any_of(sym.I.begin(), sym.I.end(), [](int v) { return v != 0; })) {
        os << ';';
        for (std::size_t p = 0; p < sym.I.size(); ++p) {
            if (p) os << ',';
            os << sym.I[p];
        }
    }
    return os.str();
}

namespace {

inline double ipow_inv(double inv, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= inv;
    return r;
}

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

// Envelope P_j(t) <= A_j * t^{e_j} for t >= N, derived level by level
// from the prefix values at N.  Returns false when the final level
// cannot be certified (tail exponent >= -1).
bool tail_envelope(const WeakSeq& flat, const std::vector<double>& prefix_at_n, long long n,
                   double& tail_out, double& decay_out) {
    const std::size_t K = flat.size();
    const double N = static_cast<double>(n);
    double A = 1.0;  // level 0 envelope: P_0(t) = 1
    double e = 0.0;
    for (std::size_t j = 0; j + 1 < K; ++j) {
        const double u = e - flat[j];
        const double Pn = prefix_at_n[j];
        if (u < -1.0) {
            A = Pn + A * std::pow(N, u + 1.0) / (-u - 1.0);
            e = 0.0;
        } else if (u == -1.0) {
            A = (Pn + 2.0 * A) / std::sqrt(N);
            e = 0.5;
        } else {  // u > -1
            const double enew = u + 1.0;
            double growth = (u >= 0.0) ? std::pow(1.0 + 1.0 / N, enew) : 1.0;
            A = Pn / std::pow(N, enew) + A * growth / enew;
            e = enew;
        }
    }
    const double ustar = e - flat[K - 1];
    if (ustar >= -1.0) {
        tail_out = std::numeric_limits<double>::infinity();
        decay_out = 0.0;
        return false;
    }
    tail_out = A * std::pow(N, ustar + 1.0) / (-ustar - 1.0);
    tail_out = tail_out * 1.01 + 1e-300;  // float-rounding slack
    decay_out = -ustar - 1.0;
    return true;
}

}  // namespace

EvalResult zeta_flat_at_cutoff(const WeakSeq& flat, long long cutoff) {
    EvalResult res;
    res.cutoff = cutoff;
    const std::size_t K = flat.size();
    if (K == 0) {
        res.value = 1.0;
        res.certified = true;
        res.tol_met = true;
        res.decay = std::numeric_limits<double>::infinity();
        return res;
    }
    // collapse the leading zero run: its prefix sums are C(t, z) exactly
    std::size_t z = 0;
    while (z < K && flat[z] == 0) ++z;
    // flat ends positive, so z < K
    const std::size_t levels = K - z;
    std::vector<Kahan> acc(levels);
    double zfact = 1.0;
    for (std::size_t t = 2; t <= z; ++t) zfact *= static_cast<double>(t);

    for (long long m = 1; m <= cutoff; ++m) {
        const double inv = 1.0 / static_cast<double>(m);
        // C(m-1, z)
        double base = 1.0;
        for (std::size_t t = 0; t < z; ++t) base *= static_cast<double>(m - 1 - static_cast<long long>(t));
        base /= zfact;
        if (z > 0 && m <= static_cast<long long>(z)) base = 0.0;
        for (std::size_t j = levels; j-- > 0;) {
            const double below = (j == 0) ? base : acc[j - 1].sum;
            if (below == 0.0) continue;
            acc[j].add(below * ipow_inv(inv, flat[z + j]));
        }
    }
    res.value = acc[levels - 1].sum;

    std::vector<double> prefix(K);
    // leading zero levels: P_j(N) = C(N, j+1) for j < z
    double comb = 1.0;
    for (std::size_t j = 0; j < z; ++j) {
        comb *= static_cast<double>(cutoff - static_cast<long long>(j)) / static_cast<double>(j + 1);
        prefix[j] = comb;
    }
    for (std::size_t j = 0; j < levels; ++j) prefix[z + j] = acc[j].sum;

    res.certified = tail_envelope(flat, prefix, cutoff, res.tail, res.decay);
    return res;
}

EvalResult zeta_lwc(const ZetaSymbol& sym, const EvalOptions& opts) {
    if (!sym.is_convergent()) {
        throw DivergenceError("divergent symbol " + format_zeta_symbol(sym));
    }
    const WeakSeq flat = sym.flat().parts();
    long long n = std::min(opts.initial_cutoff, opts.iter_cap);
    while (true) {
        EvalResult res = zeta_flat_at_cutoff(flat, n);
        res.tol_met = res.certified && res.tail <= opts.tol;
        if (res.tol_met || n >= opts.iter_cap) return res;
        long long next = 2 * n;
        if (res.certified && res.tail > opts.tol && res.decay > 0.0) {
            const double factor = std::pow(res.tail / opts.tol, 1.0 / res.decay) * 1.1;
            if (factor > 2.0 && factor < 1e18) {
                next = std::max(next, static_cast<long long>(static_cast<double>(n) * factor));
            }
        }
        n = std::min(next, opts.iter_cap);
    }
}

const EvalResult& ZetaEvaluator::eval(const ZetaSymbol& sym) {
    Lwc key = sym.flat();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    EvalResult res = zeta_lwc(sym, opts_);
    return cache_.emplace(std::move(key), res).first->second;
}

StirlingTable::StirlingTable(int max_i) : max_i_(max_i) {
    rows_.resize(static_cast<std::size_t>(max_i) + 1);
    rows_[0] = {BigInt(1)};
    for (int i = 1; i <= max_i; ++i) {
        auto& row = rows_[static_cast<std::size_t>(i)];
        row.assign(static_cast<std::size_t>(i) + 1, BigInt(0));
        const auto& prev = rows_[static_cast<std::size_t>(i) - 1];
        for (int k = 0; k <= i; ++k) {
            BigInt v = 0;
            if (k >= 1) v += prev[static_cast<std::size_t>(k) - 1];
            if (k <= i - 1) v -= BigInt(i - 1) * prev[static_cast<std::size_t>(k)];
            row[static_cast<std::size_t>(k)] = v;
        }
    }
}

const BigInt& StirlingTable::operator()(int i, int k) const {
    static const BigInt zero(0);
    if (i < 0 || i > max_i_ || k < 0 || k > i) return zero;
    return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
}

LinComb<ZetaSymbol> stirling_reduce(int a, int m) {
    if (m < 0 || a < m + 2) {
        throw std::invalid_argument("stirling_reduce requires a >= m + 2");
    }
    static const StirlingTable table(32);
    LinComb<ZetaSymbol> out;
    const BigInt mfact = factorial(m);
    for (int k = 0; k <= m; ++k) {
        Rational c(table(m, k), mfact);
        out.add(ZetaSymbol::single(a - k), c);
    }
    if (m >= 1) {
        const BigInt m1fact = factorial(m - 1);
        for (int k = 0; k <= m; ++k) {
            Rational c(table(m, k), m1fact);
            out.add(ZetaSymbol::single(a - k + 1), -c);
        }
    }
    return out;
}

ZetaProduct::ZetaProduct(ZetaSymbol a, ZetaSymbol b) {
    factors = {std::move(a), std::move(b)};
    if (grlex_less(factors[1], factors[0])) std::swap(factors[0], factors[1]);
}

bool grlex_less(const ZetaProduct& a, const ZetaProduct& b) {
    if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        if (grlex_less(a.factors[i], b.factors[i])) return true;
        if (grlex_less(b.factors[i], a.factors[i])) return false;
    }
    return false;
}

std::string format_zeta_product(const ZetaProduct& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.factors.size(); ++i) {
        if (i) os << "*";
        os << "z(" << format_zeta_symbol(p.factors[i]) << ")";
    }
    return os.str();
}

namespace {

void require_hypotheses(int a, int b, int m, int n) {
    if (m < 0 || n < 0 || a < m + 2 || b < n + 2) {
        throw std::invalid_argument("relation requires a >= m+2 and b >= n+2");
    }
}

ZetaComb product_lhs(int a, int b, int m, int n) {
    ZetaComb lhs;
    lhs.add(ZetaProduct(ZetaSymbol::single(a, m), ZetaSymbol::single(b, n)), 1);
    return lhs;
}

}  // namespace

Relation stuffle_relation(int a, int b, int m, int n) {
    require_hypotheses(a, b, m, n);
    Relation rel;
    rel.name = "stuffle";
    rel.lhs = product_lhs(a, b, m, n);
    const LinComb<WeakSeq> expansion = closed_0a_0b(a, b, m, n);
    for (const auto& [key, c] : expansion.terms()) {
        rel.rhs.add(ZetaProduct(ZetaSymbol::from_lwc(Lwc(key))), c);
    }
    return rel;
}

Relation shuffle_relation(int a, int b, int m, int n) {
    require_hypotheses(a, b, m, n);
    Relation rel;
    rel.name = "shuffle";
    rel.lhs = product_lhs(a, b, m, n);
    for (int i = 0; i <= b - 1; ++i) {
        Rational c(binomial(a + i - 1, i));
        rel.rhs.add(ZetaProduct(ZetaSymbol({b - i, a + i}, {n, m})), c);
    }
    for (int j = 0; j <= a - 1; ++j) {
        Rational c(binomial(b + j - 1, j));
        rel.rhs.add(ZetaProduct(ZetaSymbol({a - j, b + j}, {m, n})), c);
    }
    return rel;
}

Relation euler_decomposition(int a, int b) {
    if (a < 2 || b < 2) throw std::invalid_argument("euler decomposition requires a, b >= 2");
    Relation rel = shuffle_relation(a, b, 0, 0);
    rel.name = "euler";
    return rel;
}

Relation double_shuffle_relation(int a, int b, int m, int n) {
    require_hypotheses(a, b, m, n);
    Relation st = stuffle_relation(a, b, m, n);
    Relation sh = shuffle_relation(a, b, m, n);
    ZetaComb diff = st.rhs;
    diff -= sh.rhs;
    Relation rel;
    rel.name = "double-shuffle";
    for (const auto& [k, c] : diff.terms()) {
        if (c > 0) rel.lhs.add(k, c);
        else rel.rhs.add(k, -c);
    }
    return rel;
}

VerifyReport verify(const Relation& rel, double tol, ZetaEvaluator& eval) {
    VerifyReport report;
    report.tolerance = tol;
    std::map<Lwc, SymbolReport> seen;

    auto eval_side = [&](const ZetaComb& side, double& value_out) {
        Kahan value;
        double tails = 0.0;
        for (const auto& [prod, coeff] : side.terms()) {
            double term = 1.0;
            double term_tail = 0.0;
            for (const auto& sym : prod.factors) {
                const EvalResult& r = eval.eval(sym);
                Lwc key = sym.flat();
                if (!seen.count(key)) {
                    seen.emplace(key, SymbolReport{sym, r.value, r.tail, r.cutoff,
                                                   sym.is_partwise_convergent()});
                }
                // |v̂1·v̂2 − v1·v2| <= t1·(|v̂2|+t2) + |v̂1|·t2
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

    report.tail_bound = eval_side(rel.lhs, report.lhs_value);
    report.tail_bound += eval_side(rel.rhs, report.rhs_value);
    report.residual = std::abs(report.lhs_value - report.rhs_value);
    report.verified = report.residual <= tol + report.tail_bound;
    for (auto& [k, sr] : seen) report.per_symbol.push_back(sr);
    return report;
}

Relation perturb_relation(const Relation& rel, const Rational& delta) {
    Relation out = rel;
    if (!out.rhs.is_zero()) {
        const auto& first = *out.rhs.begin();
        out.rhs.add(first.first, delta);
    }
    return out;
}

}  // namespace lwcq
