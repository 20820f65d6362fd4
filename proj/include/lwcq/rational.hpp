#ifndef LWCQ_RATIONAL_HPP
#define LWCQ_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace lwcq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Single home of the binomial convention: C(p,q) = 0 when p < q or q < 0.
inline BigInt binomial(long long p, long long q) {
    if (q < 0 || p < q) return 0;
    BigInt num = 1;
    // C(p,q) = C(p, p-q); use the smaller loop.
    long long k = q;
    if (p - q < k) k = p - q;
    for (long long i = 1; i <= k; ++i) {
        num *= (p - k + i);
        num /= i;  // exact at every step
    }
    return num;
}

inline BigInt factorial(long long n) {
    BigInt f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
}

// Canonical "num/den" form, denominator always printed.
inline std::string rational_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::runtime_error("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational: '" + text + "'");
    }
}

}  // namespace lwcq

#endif
