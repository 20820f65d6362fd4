#include "lwcq/lwc.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace lwcq {

Lwc::Lwc(WeakSeq parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 0) throw ParseError("left weak composition parts must be nonnegative");
    }
    if (!parts_.empty() && parts_.back() == 0) {
        throw ParseError("last part must be positive");
    }
}

long long Lwc::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Lwc::zero_count() const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), 0));
}

int Lwc::positive_count() const {
    return static_cast<int>(parts_.size()) - zero_count();
}

bool Lwc::is_composition() const { return zero_count() == 0; }

std::vector<LwcBlock> blocks(const Lwc& a) {
    std::vector<LwcBlock> out;
    int zeros = 0;
    for (int p : a.parts()) {
        if (p == 0) {
            ++zeros;
        } else {
            out.push_back({zeros, p});
            zeros = 0;
        }
    }
    // a ends in a positive part, so no zeros remain
    return out;
}

Lwc flatten(const std::vector<LwcBlock>& bs) {
    WeakSeq parts;
    for (const auto& b : bs) {
        parts.insert(parts.end(), b.zeros, 0);
        parts.push_back(b.part);
    }
    return Lwc(std::move(parts));
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw ParseError("composition parts must be positive");
    }
}

long long Composition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

std::set<long long> descent_set(const Composition& a) {
    std::set<long long> out;
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < a.parts().size(); ++i) {
        acc += a.parts()[i];
        out.insert(acc);
    }
    return out;
}

bool refines(const Lwc& a, const Lwc& b) {
    if (a.size() != b.size()) return false;
    const auto bb = blocks(b);
    const auto& ap = a.parts();

    // The positive parts of a must split into consecutive groups summing
    // to b's positive parts, with every zero run of a landing between
    // groups (or in front) and fitting in the corresponding run of b.
    std::size_t pos = 0;           // cursor in a
    for (std::size_t p = 0; p < bb.size(); ++p) {
        int zeros = 0;
        while (pos < ap.size() && ap[pos] == 0) { ++zeros; ++pos; }
        if (zeros > bb[p].zeros) return false;
        long long acc = 0;
        while (acc < bb[p].part) {
            if (pos >= ap.size() || ap[pos] == 0) return false;
            acc += ap[pos];
            ++pos;
        }
        if (acc != bb[p].part) return false;
    }
    return pos == ap.size();
}

std::vector<std::vector<int>> compositions_of(int n) {
    std::vector<std::vector<int>> out;
    if (n < 0) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = 1; part <= rem; ++part) {
            cur.push_back(part);
            self(self, rem - part);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

std::vector<Lwc> refinements_below(const Lwc& a) {
    std::vector<Lwc> out;
    if (a.empty()) {
        out.push_back(a);
        return out;
    }
    const auto bs = blocks(a);
    // per-block choices: zero run length in [0, i_p] and a composition of s_p
    std::vector<std::vector<std::vector<int>>> comps;
    comps.reserve(bs.size());
    for (const auto& b : bs) comps.push_back(compositions_of(b.part));

    WeakSeq cur;
    auto rec = [&](auto&& self, std::size_t p) -> void {
        if (p == bs.size()) {
            out.emplace_back(cur);
            return;
        }
        for (int j = 0; j <= bs[p].zeros; ++j) {
            for (const auto& c : comps[p]) {
                std::size_t mark = cur.size();
                cur.insert(cur.end(), j, 0);
                cur.insert(cur.end(), c.begin(), c.end());
                self(self, p + 1);
                cur.resize(mark);
            }
        }
    };
    rec(rec, 0);
    return out;
}

Lwc parse_lwc(const std::string& text) {
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i >= text.size() || text[i] != '(') throw ParseError("expected '(' in '" + text + "'");
    ++i;
    WeakSeq parts;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
        ++i;
        skip_ws();
        if (i != text.size()) throw ParseError("trailing characters in '" + text + "'");
        return Lwc{};
    }
    auto read_int = [&]() -> long long {
        skip_ws();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) {
            throw ParseError("expected integer in '" + text + "'");
        }
        return std::stoll(text.substr(start, i - start));
    };
    while (true) {
        long long v = read_int();
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            if (v != 0) throw ParseError("run sugar is only allowed for zeros in '" + text + "'");
            ++i;
            long long rep = read_int();
            if (rep < 0) throw ParseError("negative zero-run exponent in '" + text + "'");
            parts.insert(parts.end(), static_cast<std::size_t>(rep), 0);
            skip_ws();
        } else {
            if (v < 0) throw ParseError("negative part in '" + text + "'");
            parts.push_back(static_cast<int>(v));
        }
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    if (i >= text.size() || text[i] != ')') throw ParseError("expected ')' in '" + text + "'");
    ++i;
    skip_ws();
    if (i != text.size()) throw ParseError("trailing characters in '" + text + "'");
    return Lwc(std::move(parts));  // validates the last part
}

std::string format_lwc(const Lwc& a) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.parts().size(); ++i) {
        if (i) os << ',';
        os << a.parts()[i];
    }
    os << ')';
    return os.str();
}

std::vector<Lwc> lwcs_of_size(int n, int zero_budget) {
    return lwcs_of_size_maxlen(n, zero_budget, n + zero_budget);
}

std::vector<Lwc> lwcs_of_size_maxlen(int n, int zero_budget, int max_len) {
    std::vector<Lwc> out;
    if (n <= 0) {
        if (n == 0) out.emplace_back();
        return out;
    }
    for (const auto& comp : compositions_of(n)) {
        int k = static_cast<int>(comp.size());
        if (k > max_len) continue;
        int zmax = std::min(zero_budget, max_len - k);
        // distribute up to zmax zeros over the k slots in front of each part
        std::vector<int> zs(static_cast<std::size_t>(k), 0);
        auto rec = [&](auto&& self, int slot, int left) -> void {
            if (slot == k) {
                WeakSeq parts;
                for (int p = 0; p < k; ++p) {
                    parts.insert(parts.end(), zs[static_cast<std::size_t>(p)], 0);
                    parts.push_back(comp[static_cast<std::size_t>(p)]);
                }
                out.emplace_back(std::move(parts));
                return;
            }
            for (int take = 0; take <= left; ++take) {
                zs[static_cast<std::size_t>(slot)] = take;
                self(self, slot + 1, left - take);
            }
            zs[static_cast<std::size_t>(slot)] = 0;
        };
        rec(rec, 0, zmax);
    }
    return out;
}

bool grlex_less(const WeakSeq& a, const WeakSeq& b) {
    long long sa = std::accumulate(a.begin(), a.end(), 0LL);
    long long sb = std::accumulate(b.begin(), b.end(), 0LL);
    if (sa != sb) return sa < sb;
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

bool grlex_less(const Lwc& a, const Lwc& b) { return grlex_less(a.parts(), b.parts()); }

}  // namespace lwcq
