#include "lwcq/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lwcq {

bool grlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.factors < b.factors;
}

TruncatedSeries TruncatedSeries::constant(int var_count, int degree_cap, const Rational& c) {
    TruncatedSeries s(var_count, degree_cap);
    s.add_term(Monomial{}, c);
    return s;
}

void TruncatedSeries::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    if (m.degree() > degree_cap_) return;  // truncation ideal
    for (auto [v, e] : m.factors) {
        if (v < 0 || v > var_count_) throw std::invalid_argument("variable index out of range");
        if (e <= 0) throw std::invalid_argument("monomial exponents must be positive");
    }
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational TruncatedSeries::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (o.var_count_ != var_count_ || o.degree_cap_ != degree_cap_) {
        throw std::invalid_argument("series parameter mismatch");
    }
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (o.var_count_ != var_count_ || o.degree_cap_ != degree_cap_) {
        throw std::invalid_argument("series parameter mismatch");
    }
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

namespace {

Monomial merge_monomials(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto ia = a.factors.begin(), ib = b.factors.begin();
    while (ia != a.factors.end() || ib != b.factors.end()) {
        if (ib == b.factors.end() || (ia != a.factors.end() && ia->first < ib->first)) {
            out.factors.push_back(*ia++);
        } else if (ia == a.factors.end() || ib->first < ia->first) {
            out.factors.push_back(*ib++);
        } else {
            out.factors.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return out;
}

}  // namespace

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.var_count_ != b.var_count_ || a.degree_cap_ != b.degree_cap_) {
        throw std::invalid_argument("series parameter mismatch");
    }
    TruncatedSeries out(a.var_count_, a.degree_cap_);
    for (const auto& [ma, ca] : a.terms_) {
        const int da = ma.degree();
        for (const auto& [mb, cb] : b.terms_) {
            if (da + mb.degree() > a.degree_cap_) continue;
            out.add_term(merge_monomials(ma, mb), ca * cb);
        }
    }
    return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return var_count_ == o.var_count_ && degree_cap_ == o.degree_cap_ && terms_ == o.terms_;
}

Rational TruncatedSeries::specialize(const std::map<int, Rational>& values) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (auto [v, e] : m.factors) {
            auto it = values.find(v);
            if (it == values.end()) {
                throw std::invalid_argument("missing value for variable x_" + std::to_string(v));
            }
            for (int r = 0; r < e; ++r) term *= it->second;
        }
        total += term;
    }
    return total;
}

double TruncatedSeries::specialize_real(const std::map<int, double>& values) const {
    double total = 0.0;
    for (const auto& [m, c] : terms_) {
        double term = static_cast<double>(c);
        for (auto [v, e] : m.factors) {
            auto it = values.find(v);
            if (it == values.end()) {
                throw std::invalid_argument("missing value for variable x_" + std::to_string(v));
            }
            for (int r = 0; r < e; ++r) term *= it->second;
        }
        total += term;
    }
    return total;
}

TruncatedSeries expand_M(const Lwc& a, int vars, int degree_cap) {
    if (a.size() > degree_cap) throw std::invalid_argument("|alpha| exceeds the degree cap");
    TruncatedSeries out(vars, degree_cap);
    if (a.empty()) {
        out.add_term(Monomial{}, 1);
        return out;
    }
    const auto bs = blocks(a);
    const int k = static_cast<int>(bs.size());
    // chains 1 <= n_1 < ... < n_k <= vars with binomial gap weights
    std::vector<int> ns(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int p, int prev, const BigInt& w) -> void {
        if (p == k) {
            Monomial m;
            for (int t = 0; t < k; ++t) {
                m.factors.emplace_back(ns[static_cast<std::size_t>(t)],
                                       bs[static_cast<std::size_t>(t)].part);
            }
            out.add_term(m, Rational(w));
            return;
        }
        for (int n = prev + 1; n <= vars; ++n) {
            BigInt c = binomial(n - prev - 1, bs[static_cast<std::size_t>(p)].zeros);
            if (c == 0) continue;
            ns[static_cast<std::size_t>(p)] = n;
            self(self, p + 1, n, w * c);
        }
    };
    rec(rec, 0, 0, BigInt(1));
    return out;
}

TruncatedSeries expand_M_by_definition(const Lwc& a, int vars, int degree_cap) {
    if (a.size() > degree_cap) throw std::invalid_argument("|alpha| exceeds the degree cap");
    TruncatedSeries out(vars, degree_cap);
    const auto& parts = a.parts();
    const int len = static_cast<int>(parts.size());
    if (len == 0) {
        out.add_term(Monomial{}, 1);
        return out;
    }
    // strictly increasing chains over every flat position, zeros included
    std::vector<int> ns(static_cast<std::size_t>(len));
    auto rec = [&](auto&& self, int p, int prev) -> void {
        if (p == len) {
            Monomial m;
            for (int t = 0; t < len; ++t) {
                if (parts[static_cast<std::size_t>(t)] > 0) {
                    m.factors.emplace_back(ns[static_cast<std::size_t>(t)],
                                           parts[static_cast<std::size_t>(t)]);
                }
            }
            out.add_term(m, 1);
            return;
        }
        for (int n = prev + 1; n <= vars; ++n) {
            ns[static_cast<std::size_t>(p)] = n;
            self(self, p + 1, n);
        }
    };
    rec(rec, 0, 0);
    return out;
}

namespace {

// Positions after which the chain must increase strictly: exactly the
// block boundaries a_p = i_1 + s_1 + ... + i_p + s_p, p < k.  Each block
// contributes i_p exponent-0 elements and s_p exponent-1 elements.
std::vector<bool> strict_after_flags(const Lwc& a) {
    const auto bs = blocks(a);
    std::vector<bool> strict(a.length(), false);
    std::size_t cursor = 0;
    for (std::size_t p = 0; p < bs.size(); ++p) {
        cursor += static_cast<std::size_t>(bs[p].zeros) + static_cast<std::size_t>(bs[p].part);
        if (p + 1 < bs.size()) strict[cursor - 1] = true;
    }
    return strict;
}

std::vector<int> sigma_flags(const Lwc& a) {
    std::vector<int> sigma;
    for (const auto& b : blocks(a)) {
        sigma.insert(sigma.end(), static_cast<std::size_t>(b.zeros), 0);
        sigma.insert(sigma.end(), static_cast<std::size_t>(b.part), 1);
    }
    return sigma;
}

TruncatedSeries chain_sum(const std::vector<int>& sigma, const std::vector<bool>& strict_after,
                          int vars, int degree_cap) {
    TruncatedSeries out(vars, degree_cap);
    const int len = static_cast<int>(sigma.size());
    if (len == 0) {
        out.add_term(Monomial{}, 1);
        return out;
    }
    std::vector<int> ns(static_cast<std::size_t>(len));
    auto rec = [&](auto&& self, int p, int lo) -> void {
        if (p == len) {
            Monomial m;
            for (int t = 0; t < len; ++t) {
                if (sigma[static_cast<std::size_t>(t)] == 0) continue;
                int v = ns[static_cast<std::size_t>(t)];
                if (!m.factors.empty() && m.factors.back().first == v) {
                    m.factors.back().second += 1;
                } else {
                    m.factors.emplace_back(v, 1);
                }
            }
            out.add_term(m, 1);
            return;
        }
        for (int n = lo; n <= vars; ++n) {
            ns[static_cast<std::size_t>(p)] = n;
            self(self, p + 1, strict_after[static_cast<std::size_t>(p)] ? n + 1 : n);
        }
    };
    rec(rec, 0, 1);
    return out;
}

}  // namespace

TruncatedSeries expand_F(const Lwc& a, int vars, int degree_cap) {
    if (a.size() > degree_cap) throw std::invalid_argument("|alpha| exceeds the degree cap");
    return chain_sum(sigma_flags(a), strict_after_flags(a), vars, degree_cap);
}

LabeledPoset build_poset(const Lwc& a) {
    const auto bs = blocks(a);
    const int k = static_cast<int>(bs.size());
    int zeros_total = 0;
    for (const auto& b : bs) zeros_total += b.zeros;

    LabeledPoset poset;
    // chain order: C_1, P_1, C_2, P_2, ..., C_k, P_k
    // labels: zero chains first (1..zeros_total, in order), then the
    // positive chains in reverse block order
    std::vector<int> pstart(static_cast<std::size_t>(k));
    int acc = zeros_total;
    for (int p = k - 1; p >= 0; --p) {
        pstart[static_cast<std::size_t>(p)] = acc + 1;
        acc += bs[static_cast<std::size_t>(p)].part;
    }
    int zlabel = 1;
    for (int p = 0; p < k; ++p) {
        for (int t = 0; t < bs[static_cast<std::size_t>(p)].zeros; ++t) {
            poset.labels.push_back(zlabel++);
            poset.sigma.push_back(0);
        }
        for (int t = 0; t < bs[static_cast<std::size_t>(p)].part; ++t) {
            poset.labels.push_back(pstart[static_cast<std::size_t>(p)] + t);
            poset.sigma.push_back(1);
        }
    }
    return poset;
}

TruncatedSeries gamma_P(const Lwc& a, int vars, int degree_cap) {
    if (a.size() > degree_cap) throw std::invalid_argument("|alpha| exceeds the degree cap");
    const LabeledPoset poset = build_poset(a);
    const std::size_t len = poset.labels.size();
    // strictness read off the labels: consecutive chain elements q_r < q_{r+1}
    // in the poset force f(q_r) < f(q_{r+1}) exactly when label(q_r) > label(q_{r+1})
    std::vector<bool> strict_after(len, false);
    for (std::size_t r = 0; r + 1 < len; ++r) {
        strict_after[r] = poset.labels[r] > poset.labels[r + 1];
    }
    return chain_sum(poset.sigma, strict_after, vars, degree_cap);
}

TruncatedSeries expand_Mbar(const MbarElement& a, int vars, int degree_cap) {
    if (a.size() > degree_cap) throw std::invalid_argument("degree exceeds the cap");
    TruncatedSeries tail = expand_M(a.tail, vars, degree_cap);
    if (a.head == 0) return tail;
    TruncatedSeries head(vars, degree_cap);
    head.add_term(Monomial{{{0, a.head}}}, 1);
    return multiply(head, tail);
}

TruncatedSeries expand_M_lincomb(const LinComb<Lwc>& x, int vars, int degree_cap) {
    TruncatedSeries out(vars, degree_cap);
    for (const auto& [k, c] : x.terms()) {
        TruncatedSeries s = expand_M(k, vars, degree_cap);
        s *= c;
        out += s;
    }
    return out;
}

TruncatedSeries expand_Mbar_lincomb(const MbarComb& x, int vars, int degree_cap) {
    TruncatedSeries out(vars, degree_cap);
    for (const auto& [k, c] : x.terms()) {
        TruncatedSeries s = expand_Mbar(k, vars, degree_cap);
        s *= c;
        out += s;
    }
    return out;
}

std::string format_series(const TruncatedSeries& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : s.terms()) {
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        Rational a = neg ? Rational(-c) : c;
        bool need_coeff = (a != 1) || m.factors.empty();
        if (need_coeff) {
            if (denominator(a) == 1) os << numerator(a);
            else os << numerator(a) << "/" << denominator(a);
        }
        for (std::size_t i = 0; i < m.factors.size(); ++i) {
            if (need_coeff || i > 0) os << "*";
            os << "x" << m.factors[i].first;
            if (m.factors[i].second != 1) os << "^" << m.factors[i].second;
        }
        first = false;
    }
    return os.str();
}

}  // namespace lwcq
