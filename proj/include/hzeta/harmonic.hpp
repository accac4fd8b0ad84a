#ifndef HZETA_HARMONIC_HPP
#define HZETA_HARMONIC_HPP

#include <mutex>
#include <vector>

#include "hzeta/bernoulli.hpp"
#include "hzeta/bigfloat.hpp"
#include "hzeta/rational.hpp"

namespace hzeta {

namespace detail {
struct HarmonicCache {
    std::mutex mu;
    std::vector<Rational> prefix{Rational(0)}; // prefix[n] = H_n
};
inline HarmonicCache& harmonic_cache() {
    static HarmonicCache c;
    return c;
}
} // namespace detail

/// Exact H_n = 1 + 1/2 + ... + 1/n. The prefix cache is grow-only and
/// synchronized, so a sweep over n = 1..N costs O(N) rational additions.
inline Rational harmonic_number(unsigned long n) {
    if (n == 0) return Rational(0);
    auto& c = detail::harmonic_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    while (c.prefix.size() <= n) {
        unsigned long k = c.prefix.size();
        c.prefix.push_back(c.prefix.back() + Rational(Int(1), Int(k)));
    }
    return c.prefix[n];
}

/// H_n as a float at the given precision without touching the exact cache;
/// Theta(n) float additions.
inline BigFloat harmonic_number_float(unsigned long n, long prec) {
    BigFloat h(0L, prec + 16);
    BigFloat one(1L, prec + 16);
    for (unsigned long k = 1; k <= n; ++k) h += one / (long)k;
    return h.round_to(prec);
}

/// Truncated asymptotic expansion
///   log n + gamma + 1/(2n) - sum_{a=1}^{order} B_{2a} / (2a n^{2a}).
/// The discarded remainder is bounded in magnitude by the first omitted
/// Bernoulli term; tail bounds elsewhere rely on exactly this contract.
inline BigFloat harmonic_asymptotic(const BigFloat& n, int order) {
    long prec = n.precision();
    BigFloat v = log(n) + const_euler_gamma(prec);
    BigFloat inv_n = BigFloat(1L, prec) / n;
    v += ldexp2(inv_n, -1); // 1/(2n)
    BigFloat inv_n2 = inv_n * inv_n;
    BigFloat p = BigFloat(1L, prec);
    for (int a = 1; a <= order; ++a) {
        p *= inv_n2;
        v -= BigFloat(bernoulli(2 * a) / Rational(2 * a), prec) * p;
    }
    return v;
}

/// Magnitude bound for what harmonic_asymptotic(n, order) discards.
inline BigFloat harmonic_asymptotic_remainder_bound(const BigFloat& n, int order) {
    long prec = n.precision();
    BigFloat b(bernoulli(2 * (order + 1)) / Rational(2 * (order + 1)), prec);
    return abs(b) * pow_si(n, -2 * (order + 1));
}

/// H_n - (its asymptotic expansion at `order`), evaluated exactly enough to
/// serve as the periodic-Bernoulli remainder term in Euler-Maclaurin
/// relations: decays like n^(-2 order - 2).
inline BigFloat harmonic_remainder(unsigned long n, int order, long prec) {
    BigFloat h = harmonic_number_float(n, prec + 32);
    BigFloat nn((long)n, prec + 32);
    return (h - harmonic_asymptotic(nn, order)).round_to(prec);
}

} // namespace hzeta

#endif
