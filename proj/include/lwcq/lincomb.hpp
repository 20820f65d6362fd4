#ifndef LWCQ_LINCOMB_HPP
#define LWCQ_LINCOMB_HPP

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "lwcq/lwc.hpp"
#include "lwcq/rational.hpp"

namespace lwcq {

inline bool coeff_is_zero(const Rational& c) { return c == 0; }

/// Sparse linear combination of basis keys with exact coefficients.
/// Zero coefficients are never stored; iteration order is the key
/// type's graded-lex order, which is also the serialization order.
template <class Key, class Coeff = Rational, class Less = GrlexLess<Key>>
class LinComb {
public:
    using Map = std::map<Key, Coeff, Less>;
    using const_iterator = typename Map::const_iterator;

    LinComb() = default;
    explicit LinComb(const Key& k, Coeff c = Coeff(1)) { add(k, std::move(c)); }

    void add(const Key& k, const Coeff& c) {
        if (coeff_is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    LinComb& operator*=(const Coeff& s) {
        if (coeff_is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Coeff& s) { return a *= s; }
    friend LinComb operator*(const Coeff& s, LinComb a) { return a *= s; }

    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
    bool operator!=(const LinComb& o) const { return !(*this == o); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }

    Coeff coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    /// Linear extension of a key map f: Key -> LinComb<K2,...>.
    template <class F>
    auto map_keys(F&& f) const {
        using Out = decltype(f(std::declval<const Key&>()));
        Out out;
        for (const auto& [k, c] : terms_) {
            Out img = f(k);
            img *= c;
            out += img;
        }
        return out;
    }

    Coeff coefficient_sum() const {
        Coeff s(0);
        for (const auto& [k, c] : terms_) s += c;
        return s;
    }

private:
    Map terms_;
};

/// Bilinear extension of a product on keys.
template <class Key, class Coeff, class Less, class Prod>
LinComb<Key, Coeff, Less> bilinear(const LinComb<Key, Coeff, Less>& a,
                                   const LinComb<Key, Coeff, Less>& b, Prod&& prod) {
    LinComb<Key, Coeff, Less> out;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            auto p = prod(ka, kb);  // LinComb over the same key type
            p *= ca * cb;
            out += p;
        }
    }
    return out;
}

/// Human form, e.g. "2·(1,1) + (2)" or "F(2) − F(1,1)".
template <class Key, class Coeff, class Less, class KeyFmt>
std::string format_lincomb(const LinComb<Key, Coeff, Less>& x, KeyFmt&& fmt_key) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : x.terms()) {
        Rational r = c;
        bool neg = r < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        Rational a = neg ? Rational(-r) : r;
        if (a != 1) {
            if (denominator(a) == 1) os << numerator(a);
            else os << numerator(a) << "/" << denominator(a);
            os << "·";
        }
        os << fmt_key(k);
        first = false;
    }
    return os.str();
}

}  // namespace lwcq

#endif
