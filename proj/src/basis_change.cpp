#include "lwcq/basis_change.hpp"

#include <algorithm>

namespace lwcq {

namespace {

// Recover the block writing of beta aligned to alpha's blocks.  Forced:
// positive parts of beta must group by prefix sums to alpha's positive
// parts, and each zero run of beta lies in exactly one slot.  Returns
// the per-block zero counts j_p, or empty when beta does not refine.
bool align_blocks(const Lwc& alpha, const Lwc& beta, std::vector<int>& js) {
    if (alpha.size() != beta.size()) return false;
    const auto ab = blocks(alpha);
    const auto& bp = beta.parts();
    js.assign(ab.size(), 0);
    std::size_t pos = 0;
    for (std::size_t p = 0; p < ab.size(); ++p) {
        int zeros = 0;
        while (pos < bp.size() && bp[pos] == 0) { ++zeros; ++pos; }
        if (zeros > ab[p].zeros) return false;
        js[p] = zeros;
        long long acc = 0;
        while (acc < ab[p].part) {
            if (pos >= bp.size() || bp[pos] == 0) return false;
            acc += bp[pos];
            ++pos;
        }
        if (acc != ab[p].part) return false;
    }
    return pos == bp.size();
}

}  // namespace

BigInt coeff_c(const Lwc& alpha, const Lwc& beta) {
    if (alpha.empty() || beta.empty()) return alpha == beta ? BigInt(1) : BigInt(0);
    std::vector<int> js;
    if (!align_blocks(alpha, beta, js)) return 0;
    const auto ab = blocks(alpha);
    BigInt c = 1;
    for (std::size_t p = 0; p < ab.size(); ++p) c *= binomial(ab[p].zeros, js[p]);
    return c;
}

namespace {

// Enumerate β ≼ α together with c_{α,β} and apply f(β, c).
template <class F>
void for_each_refinement(const Lwc& alpha, F&& f) {
    if (alpha.empty()) {
        f(alpha, BigInt(1));
        return;
    }
    const auto bs = blocks(alpha);
    std::vector<std::vector<std::vector<int>>> comps;
    comps.reserve(bs.size());
    for (const auto& b : bs) comps.push_back(compositions_of(b.part));

    WeakSeq cur;
    auto rec = [&](auto&& self, std::size_t p, BigInt coeff) -> void {
        if (p == bs.size()) {
            f(Lwc(cur), coeff);
            return;
        }
        for (int j = 0; j <= bs[p].zeros; ++j) {
            BigInt cj = coeff * binomial(bs[p].zeros, j);
            for (const auto& c : comps[p]) {
                std::size_t mark = cur.size();
                cur.insert(cur.end(), static_cast<std::size_t>(j), 0);
                cur.insert(cur.end(), c.begin(), c.end());
                self(self, p + 1, cj);
                cur.resize(mark);
            }
        }
    };
    rec(rec, 0, BigInt(1));
}

}  // namespace

LinComb<Lwc> f_to_m(const Lwc& alpha) {
    LinComb<Lwc> out;
    for_each_refinement(alpha, [&](const Lwc& beta, const BigInt& c) {
        out.add(beta, Rational(c));
    });
    return out;
}

LinComb<Lwc> m_to_f(const Lwc& alpha) {
    LinComb<Lwc> out;
    const auto la = alpha.length();
    for_each_refinement(alpha, [&](const Lwc& beta, const BigInt& c) {
        Rational coeff(c);
        if ((beta.length() - la) % 2 != 0) coeff = -coeff;
        out.add(beta, coeff);
    });
    return out;
}

TransitionMatrix transition_matrix(int n, int zero_budget, BasisDirection dir) {
    TransitionMatrix out;
    out.keys = lwcs_of_size(n, zero_budget);
    // linear extension of ≼ with finer elements first: more positive
    // parts first, then fewer zeros, then flat lex for determinism
    std::sort(out.keys.begin(), out.keys.end(), [](const Lwc& a, const Lwc& b) {
        if (a.positive_count() != b.positive_count()) {
            return a.positive_count() > b.positive_count();
        }
        if (a.zero_count() != b.zero_count()) return a.zero_count() < b.zero_count();
        return a.parts() < b.parts();
    });
    const std::size_t d = out.keys.size();
    out.entries.assign(d * d, BigInt(0));
    for (std::size_t row = 0; row < d; ++row) {
        LinComb<Lwc> expansion =
            dir == BasisDirection::FtoM ? f_to_m(out.keys[row]) : m_to_f(out.keys[row]);
        for (std::size_t col = 0; col < d; ++col) {
            Rational c = expansion.coeff(out.keys[col]);
            out.entries[row * d + col] = numerator(c);  // integer coefficients
        }
    }
    return out;
}

}  // namespace lwcq
