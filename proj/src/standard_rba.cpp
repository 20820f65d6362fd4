#include "lwcq/standard_rba.hpp"

#include <stdexcept>

namespace lwcq {

PolySeq PolySeq::zero(int length, int vars, int degree_cap) {
    PolySeq s;
    s.entries.assign(static_cast<std::size_t>(length), TruncatedSeries(vars, degree_cap));
    return s;
}

PolySeq PolySeq::generator(int length, int degree_cap) {
    PolySeq s = zero(length, length, degree_cap);
    for (int m = 1; m <= length; ++m) {
        s.entries[static_cast<std::size_t>(m) - 1].add_term(Monomial{{{m, 1}}}, 1);
    }
    return s;
}

PolySeq PolySeq::generator_power(int k, int length, int degree_cap) {
    PolySeq s = zero(length, length, degree_cap);
    for (int m = 1; m <= length; ++m) {
        s.entries[static_cast<std::size_t>(m) - 1].add_term(Monomial{{{m, k}}}, 1);
    }
    return s;
}

PolySeq& PolySeq::operator+=(const PolySeq& o) {
    if (o.length() != length()) throw std::invalid_argument("sequence length mismatch");
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += o.entries[i];
    return *this;
}

PolySeq& PolySeq::operator-=(const PolySeq& o) {
    if (o.length() != length()) throw std::invalid_argument("sequence length mismatch");
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] -= o.entries[i];
    return *this;
}

PolySeq hadamard(const PolySeq& a, const PolySeq& b) {
    if (a.length() != b.length()) throw std::invalid_argument("sequence length mismatch");
    PolySeq out = a;
    for (std::size_t i = 0; i < out.entries.size(); ++i) {
        out.entries[i] = multiply(a.entries[i], b.entries[i]);
    }
    return out;
}

PolySeq p_r(const PolySeq& a) {
    PolySeq out = a;
    if (a.entries.empty()) return out;
    TruncatedSeries run(a.entries[0].var_count(), a.entries[0].degree_cap());
    for (std::size_t m = 0; m < a.entries.size(); ++m) {
        TruncatedSeries next = run;
        run += a.entries[m];
        out.entries[m] = next;
    }
    return out;
}

PolySeq iterate_Pn(int n, int length, int degree_cap) {
    const PolySeq x = PolySeq::generator(length, degree_cap);
    PolySeq cur = p_r(x);
    for (int it = 2; it <= n; ++it) cur = p_r(hadamard(x, cur));
    return cur;
}

PolySeq power_sum_seq(int k, int length, int degree_cap) {
    return p_r(PolySeq::generator_power(k, length, degree_cap));
}

TruncatedSeries elementary_symmetric(int n, int m, int degree_cap) {
    TruncatedSeries out(m, degree_cap);
    if (n == 0) {
        out.add_term(Monomial{}, 1);
        return out;
    }
    if (n > m) return out;  // e_n vanishes
    std::vector<int> idx(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos == n) {
            Monomial mono;
            for (int t = 0; t < n; ++t) mono.factors.emplace_back(idx[static_cast<std::size_t>(t)], 1);
            out.add_term(mono, 1);
            return;
        }
        for (int v = lo; v <= m; ++v) {
            idx[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
    return out;
}

TruncatedSeries power_sum(int k, int m, int degree_cap) {
    TruncatedSeries out(m, degree_cap);
    for (int v = 1; v <= m; ++v) out.add_term(Monomial{{{v, k}}}, 1);
    return out;
}

WaringReport waring_check(int m, int deg) {
    WaringReport rep;
    const int degree_cap = deg + 1;
    const TruncatedSeries zero(m, degree_cap);
    // S(t) = −Σ_{k=1..deg} (−1)^k t^k p_k / k, as coefficients of t
    std::vector<TruncatedSeries> S(static_cast<std::size_t>(deg) + 1, zero);
    for (int k = 1; k <= deg; ++k) {
        TruncatedSeries pk = power_sum(k, m, degree_cap);
        pk *= Rational(BigInt((k % 2 == 0) ? -1 : 1), BigInt(k));
        S[static_cast<std::size_t>(k)] = pk;
    }
    // exp(S) = Σ_j S^j / j!; S has t-order >= 1 so j <= deg suffices
    std::vector<TruncatedSeries> expS(static_cast<std::size_t>(deg) + 1, zero);
    expS[0] = TruncatedSeries::constant(m, degree_cap, 1);
    std::vector<TruncatedSeries> power(static_cast<std::size_t>(deg) + 1, zero);
    power[0] = TruncatedSeries::constant(m, degree_cap, 1);
    BigInt jfact = 1;
    for (int j = 1; j <= deg; ++j) {
        // power <- power * S (t-truncated convolution)
        std::vector<TruncatedSeries> next(static_cast<std::size_t>(deg) + 1, zero);
        for (int d1 = 0; d1 <= deg; ++d1) {
            if (power[static_cast<std::size_t>(d1)].is_zero()) continue;
            for (int d2 = 1; d1 + d2 <= deg; ++d2) {
                if (S[static_cast<std::size_t>(d2)].is_zero()) continue;
                next[static_cast<std::size_t>(d1 + d2)] +=
                    multiply(power[static_cast<std::size_t>(d1)], S[static_cast<std::size_t>(d2)]);
            }
        }
        power = std::move(next);
        jfact *= j;
        for (int d = 0; d <= deg; ++d) {
            TruncatedSeries contrib = power[static_cast<std::size_t>(d)];
            contrib *= Rational(BigInt(1), jfact);
            expS[static_cast<std::size_t>(d)] += contrib;
        }
    }
    rep.lhs = std::move(expS);
    rep.rhs.reserve(static_cast<std::size_t>(deg) + 1);
    for (int n = 0; n <= deg; ++n) rep.rhs.push_back(elementary_symmetric(n, m, degree_cap));
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace lwcq
