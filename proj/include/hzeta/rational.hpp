#ifndef HZETA_RATIONAL_HPP
#define HZETA_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace hzeta {

// Exact coefficient ring used everywhere: GMP-backed integers and rationals.
// mpq keeps values canonical (lowest terms, positive denominator).
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.backend().data(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.backend().data(), n);
    return r;
}

// n^k for signed n, k >= 0
inline Int int_pow(const Int& n, unsigned long k) {
    Int r;
    mpz_pow_ui(r.backend().data(), n.backend().data(), k);
    return r;
}

inline Rational rat_pow(const Rational& x, unsigned long k) {
    Rational r(1);
    Rational base = x;
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

inline Int rat_num(const Rational& x) { return numerator(x); }
inline Int rat_den(const Rational& x) { return denominator(x); }

// Serialized as "p/q", or "p" alone when q == 1.
inline std::string rat_to_string(const Rational& x) {
    if (rat_den(x) == 1) return rat_num(x).str();
    return rat_num(x).str() + "/" + rat_den(x).str();
}

inline Rational rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rational(p, q);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: \"" + s + "\"");
    }
}

} // namespace hzeta

#endif
