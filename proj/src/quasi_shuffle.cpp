#include "lwcq/quasi_shuffle.hpp"

#include <algorithm>
#include <optional>

#include "lwcq/errors.hpp"

namespace lwcq {

namespace {

// Memoized recursion over suffix index pairs of the two inputs.
class StuffleWorker {
public:
    StuffleWorker(const WeakSeq& a, const WeakSeq& b, std::size_t budget)
        : a_(a), b_(b), budget_(budget),
          memo_(a.size() + 1, std::vector<std::optional<LinComb<WeakSeq>>>(b.size() + 1)) {}

    const LinComb<WeakSeq>& run() { return compute(0, 0); }

private:
    const LinComb<WeakSeq>& compute(std::size_t i, std::size_t j) {
        auto& slot = memo_[i][j];
        if (slot) return *slot;
        LinComb<WeakSeq> out;
        if (i == a_.size()) {
            out.add(WeakSeq(b_.begin() + static_cast<long>(j), b_.end()), 1);
        } else if (j == b_.size()) {
            out.add(WeakSeq(a_.begin() + static_cast<long>(i), a_.end()), 1);
        } else {
            accumulate(out, a_[i], compute(i + 1, j));
            accumulate(out, b_[j], compute(i, j + 1));
            accumulate(out, a_[i] + b_[j], compute(i + 1, j + 1));
        }
        charge(out.term_count());
        slot = std::move(out);
        return *slot;
    }

    void accumulate(LinComb<WeakSeq>& out, int head, const LinComb<WeakSeq>& sub) {
        for (const auto& [key, c] : sub.terms()) {
            WeakSeq k;
            k.reserve(key.size() + 1);
            k.push_back(head);
            k.insert(k.end(), key.begin(), key.end());
            out.add(k, c);
        }
    }

    void charge(std::size_t n) {
        generated_ += n;
        if (generated_ > budget_) throw BudgetError("quasi-shuffle term budget exceeded");
    }

    const WeakSeq& a_;
    const WeakSeq& b_;
    std::size_t budget_;
    std::size_t generated_ = 0;
    std::vector<std::vector<std::optional<LinComb<WeakSeq>>>> memo_;
};

}  // namespace

LinComb<WeakSeq> stuffle(const WeakSeq& a, const WeakSeq& b, std::size_t term_budget) {
    StuffleWorker w(a, b, term_budget);
    return w.run();
}

LinComb<Lwc> quasi_shuffle(const Lwc& a, const Lwc& b, std::size_t term_budget) {
    LinComb<Lwc> out;
    const LinComb<WeakSeq> product = stuffle(a.parts(), b.parts(), term_budget);
    for (const auto& [key, c] : product.terms()) {
        out.add(Lwc(key), c);  // closure: summands of LWC products are LWCs
    }
    return out;
}

BigInt quasi_shuffle_count(int p, int q) {
    BigInt total = 0;
    for (int r = 0; r <= std::min(p, q); ++r) {
        total += factorial(p + q - r) / (factorial(r) * factorial(p - r) * factorial(q - r));
    }
    return total;
}

LinComb<Word> shuffle(const Word& u, const Word& v) {
    LinComb<Word> out;
    Word cur;
    cur.reserve(u.size() + v.size());
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == u.size() && j == v.size()) {
            out.add(cur, 1);
            return;
        }
        if (i < u.size()) {
            cur.push_back(u[i]);
            self(self, i + 1, j);
            cur.pop_back();
        }
        if (j < v.size()) {
            cur.push_back(v[j]);
            self(self, i, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

LinComb<Word> mixable_shuffle(const Word& u, const Word& v) {
    const std::size_t m = u.size(), n = v.size();
    LinComb<Word> out;
    // choose the positions of the u-letters in the interleaving
    std::vector<bool> from_u(m + n, false);
    std::fill(from_u.begin(), from_u.begin() + static_cast<long>(m), true);
    std::sort(from_u.begin(), from_u.end());  // start at the lexicographically least mask
    do {
        Word w(m + n);
        std::vector<bool> origin_u(m + n);
        std::size_t iu = 0, iv = 0;
        for (std::size_t p = 0; p < m + n; ++p) {
            // iterate mask in a fixed order; true marks a u-letter
            if (from_u[p]) {
                w[p] = u[iu++];
                origin_u[p] = true;
            } else {
                w[p] = v[iv++];
            }
        }
        // adjacent u-then-v pairs are pairwise disjoint; merge any subset
        std::vector<std::size_t> mergeable;
        for (std::size_t p = 0; p + 1 < m + n; ++p) {
            if (origin_u[p] && !origin_u[p + 1]) mergeable.push_back(p);
        }
        const std::size_t subsets = std::size_t{1} << mergeable.size();
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            Word merged;
            merged.reserve(m + n);
            std::size_t p = 0;
            std::size_t idx = 0;
            while (p < m + n) {
                bool merge_here = idx < mergeable.size() && mergeable[idx] == p &&
                                  ((mask >> idx) & 1u);
                if (idx < mergeable.size() && mergeable[idx] == p) ++idx;
                if (merge_here) {
                    merged.push_back(w[p] + w[p + 1]);
                    p += 2;
                } else {
                    merged.push_back(w[p]);
                    p += 1;
                }
            }
            out.add(merged, 1);
        }
    } while (std::next_permutation(from_u.begin(), from_u.end()));
    return out;
}

MbarElement::MbarElement(int h, Lwc t) : head(h), tail(std::move(t)) {
    if (head < 0) throw ParseError("head exponent must be nonnegative");
}

WeakSeq MbarElement::flatten() const {
    WeakSeq out;
    out.reserve(tail.length() + 1);
    out.push_back(head);
    out.insert(out.end(), tail.parts().begin(), tail.parts().end());
    return out;
}

bool grlex_less(const MbarElement& a, const MbarElement& b) {
    return grlex_less(a.flatten(), b.flatten());
}

MbarComb diamond(const MbarElement& a, const MbarElement& b, std::size_t term_budget) {
    MbarComb out;
    const int h = a.head + b.head;
    if (a.tail.empty() && b.tail.empty()) {
        out.add(MbarElement(h, Lwc{}), 1);
    } else if (b.tail.empty()) {
        out.add(MbarElement(h, a.tail), 1);
    } else if (a.tail.empty()) {
        out.add(MbarElement(h, b.tail), 1);
    } else {
        const LinComb<Lwc> tails = quasi_shuffle(a.tail, b.tail, term_budget);
        for (const auto& [key, c] : tails.terms()) {
            out.add(MbarElement(h, key), c);
        }
    }
    return out;
}

MbarComb diamond(const MbarComb& x, const MbarComb& y, std::size_t term_budget) {
    return bilinear(x, y, [&](const MbarElement& a, const MbarElement& b) {
        return diamond(a, b, term_budget);
    });
}

MbarComb p_q(const MbarComb& x) {
    MbarComb out;
    for (const auto& [k, c] : x.terms()) {
        if (!k.is_basis()) {
            throw std::invalid_argument("p_q is defined on basis elements only");
        }
        out.add(MbarElement(0, Lwc(k.flatten())), c);
    }
    return out;
}

MbarComb rb_residual(const MbarComb& x, const MbarComb& y, std::size_t term_budget) {
    MbarComb px = p_q(x);
    MbarComb py = p_q(y);
    MbarComb res = diamond(px, py, term_budget);
    res -= p_q(diamond(x, py, term_budget));
    res -= p_q(diamond(px, y, term_budget));
    res -= p_q(diamond(x, y, term_budget));
    return res;
}

namespace {

WeakSeq zero_run_key(int k, int b, int i, bool with_b) {
    WeakSeq key;
    key.insert(key.end(), static_cast<std::size_t>(k), 0);
    if (with_b) key.push_back(b);
    key.insert(key.end(), static_cast<std::size_t>(i), 0);
    return key;
}

}  // namespace

LinComb<WeakSeq> closed_zero_zero_b(int m, int n, int b) {
    LinComb<WeakSeq> out;
    for (int i = 0; i <= m; ++i) {
        for (int k = n; k <= m + n - i; ++k) {
            BigInt c = binomial(k, n) * binomial(n + 1, i + k - m + 1);
            if (c == 0) continue;
            out.add(zero_run_key(k, b, i, true), Rational(c));
        }
    }
    return out;
}

LinComb<WeakSeq> closed_zero_zero(int m, int n) {
    LinComb<WeakSeq> out;
    for (int k = n; k <= m + n; ++k) {
        BigInt c = binomial(k, n) * binomial(n, k - m);
        if (c == 0) continue;
        out.add(zero_run_key(k, 0, 0, false), Rational(c));
    }
    return out;
}

LinComb<WeakSeq> closed_0a_0b(int a, int b, int m, int n) {
    LinComb<WeakSeq> out;
    for (int i = 0; i <= m; ++i) {
        for (int k = n; k <= m + n - i; ++k) {
            BigInt c = binomial(k, n) * binomial(n + 1, i + k - m + 1);
            if (c == 0) continue;
            WeakSeq key = zero_run_key(k, b, i, true);
            key.push_back(a);
            out.add(key, Rational(c));
        }
    }
    for (int i = 0; i <= n; ++i) {
        for (int k = m; k <= m + n - i; ++k) {
            BigInt c = binomial(k, m) * binomial(m + 1, i + k - n + 1);
            if (c == 0) continue;
            WeakSeq key = zero_run_key(k, a, i, true);
            key.push_back(b);
            out.add(key, Rational(c));
        }
    }
    for (int k = n; k <= m + n; ++k) {
        BigInt c = binomial(k, n) * binomial(n, k - m);
        if (c == 0) continue;
        out.add(zero_run_key(k, a + b, 0, true), Rational(c));
    }
    return out;
}

std::pair<LinComb<Lwc>, LinComb<Lwc>> spitzer_check(int k, int n, std::size_t term_budget) {
    if (k < 1 || n < 1) throw std::invalid_argument("spitzer_check requires k, n >= 1");
    LinComb<Lwc> lhs(Lwc(WeakSeq(static_cast<std::size_t>(n), k)));

    LinComb<Lwc> rhs;
    for (const auto& comp : compositions_of(n)) {
        const int ell = static_cast<int>(comp.size());
        BigInt denom = factorial(ell);
        for (int part : comp) denom *= part;
        Rational coeff(1, denom);
        if ((n + ell) % 2 != 0) coeff = -coeff;  // (−1)^n (−1)^ℓ

        LinComb<Lwc> prod(Lwc(WeakSeq{k * comp[0]}));
        for (std::size_t f = 1; f < comp.size(); ++f) {
            LinComb<Lwc> factor(Lwc(WeakSeq{k * comp[f]}));
            prod = bilinear(prod, factor, [&](const Lwc& x, const Lwc& y) {
                return quasi_shuffle(x, y, term_budget);
            });
        }
        prod *= coeff;
        rhs += prod;
    }
    return {lhs, rhs};
}

}  // namespace lwcq
