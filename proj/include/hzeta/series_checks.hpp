#ifndef HZETA_SERIES_CHECKS_HPP
#define HZETA_SERIES_CHECKS_HPP

#include <string>
#include <vector>

#include "hzeta/trunc_series.hpp"

namespace hzeta {

struct SeriesCheckReport {
    bool pass = true;
    int first_mismatch = -1; // x-power of the first differing coefficient
    std::string detail;
    explicit operator bool() const { return pass; }
};

namespace detail {

// n^e as an exact rational, e possibly negative.
inline Rational int_power_rat(unsigned long n, long e) {
    if (e >= 0) return Rational(int_pow(Int(n), (unsigned long)e));
    return Rational(Int(1), int_pow(Int(n), (unsigned long)(-e)));
}

template <class R>
SeriesCheckReport compare_series(const TruncSeries<R>& lhs, const TruncSeries<R>& rhs,
                                 const std::string& what) {
    unsigned ord = std::min(lhs.order(), rhs.order());
    for (unsigned i = 0; i <= ord; ++i) {
        if (!(lhs.coeff(i) == rhs.coeff(i))) {
            return {false, (int)i, what + ": first mismatch at x^" + std::to_string(i)};
        }
    }
    return {true, -1, what + ": ok"};
}

} // namespace detail

/// Weighted series Sum_{n>=1} a_n n^k x^n from a coefficient sequence
/// a[0..order] (a[0] is the n=0 value and does not enter).
template <class R>
TruncSeries<R> weighted_series(const std::vector<R>& a, long k, unsigned order) {
    TruncSeries<R> s(order, ring_zero_like(a[0]));
    for (unsigned n = 1; n <= order && n < a.size(); ++n)
        s.coeff(n) = ring_scale(a[n], detail::int_power_rat(n, k));
    return s;
}

/// Li_s(x) truncation, coefficients n^(-s) injected into R (s <= 0 gives the
/// integer-coefficient expansions of the negative-order polylogarithms).
template <class R>
TruncSeries<R> polylog_series(long s, unsigned order, const R& sample) {
    TruncSeries<R> out(order, ring_zero_like(sample));
    R one = ring_one_like(sample);
    for (unsigned n = 1; n <= order; ++n)
        out.coeff(n) = ring_scale(one, detail::int_power_rat(n, -s));
    return out;
}

/// Checks Phi_k(x) = phi_k(x) + sum_{j=0}^k C(k,j) Li_{j-k}(x) phi_j(x)
/// coefficientwise to x^order, where Phi_k = sum a_n n^k x^n and
/// phi_k = sum b_n n^k x^n with b_n = a_n - a_{n-1}. Requires a[0] = 0.
template <class R>
SeriesCheckReport master_relation_check(const std::vector<R>& a, unsigned k, unsigned order) {
    if (a.empty() || !(a[0] == ring_zero_like(a[0])))
        return {false, -1, "master_relation_check: a_0 must be 0"};
    if (a.size() <= order)
        return {false, -1, "master_relation_check: need a_n up to the truncation order"};

    std::vector<R> b;
    b.reserve(a.size());
    b.push_back(a[0]);
    for (std::size_t n = 1; n < a.size(); ++n) b.push_back(a[n] - a[n - 1]);

    TruncSeries<R> lhs = weighted_series(a, (long)k, order);
    TruncSeries<R> rhs = weighted_series(b, (long)k, order);
    for (unsigned j = 0; j <= k; ++j) {
        TruncSeries<R> li = polylog_series((long)j - (long)k, order, a[0]);
        TruncSeries<R> term = li * weighted_series(b, (long)j, order);
        rhs += ring_scale(term, Rational(binomial(k, j)));
    }
    return detail::compare_series(lhs, rhs, "master k=" + std::to_string(k));
}

/// Checks the convolution relation: with a_n = sum_i b_i c_{n-i},
///   A_0 = -a_0 + b_0 c_0 + c_0 B_0 + b_0 C_0 + B_0 C_0
///   A_k = c_0 B_k + b_0 C_k + sum_j C(k,j) B_j C_{k-j},
/// where X_k = sum_{n>=1} x_n n^k x^n.
template <class R>
SeriesCheckReport cauchy_relation_check(const std::vector<R>& b, const std::vector<R>& c,
                                        unsigned k, unsigned order) {
    if (b.size() <= order || c.size() <= order)
        return {false, -1, "cauchy_relation_check: need sequences up to the order"};
    R zero = ring_zero_like(b[0]);
    std::vector<R> a(order + 1, zero);
    for (unsigned n = 0; n <= order; ++n)
        for (unsigned i = 0; i <= n; ++i) a[n] += b[i] * c[n - i];

    TruncSeries<R> lhs = weighted_series(a, (long)k, order);
    TruncSeries<R> rhs(order, zero);
    if (k == 0) {
        rhs.coeff(0) = zero - a[0] + b[0] * c[0];
        rhs += weighted_series(b, 0, order) * c[0];
        rhs += weighted_series(c, 0, order) * b[0];
        rhs += weighted_series(b, 0, order) * weighted_series(c, 0, order);
    } else {
        rhs += weighted_series(b, (long)k, order) * c[0];
        rhs += weighted_series(c, (long)k, order) * b[0];
        for (unsigned j = 0; j <= k; ++j) {
            TruncSeries<R> term =
                weighted_series(b, (long)j, order) * weighted_series(c, (long)(k - j), order);
            rhs += ring_scale(term, Rational(binomial(k, j)));
        }
    }
    return detail::compare_series(lhs, rhs, "cauchy k=" + std::to_string(k));
}

/// Exponential-twist expansion of sum a_n x^n e^(i theta n): component k holds
/// the theta^k/k! coefficient including the i^k twist, i.e.
///   component(k) = (-1)^(floor(k/2)) / k! * sum_n a_n n^k x^n,
/// imaginary for odd k. This is the layout in which the theta-comparison
/// arguments of the alternating-value sections proceed.
template <class R>
struct ThetaExpansion {
    std::vector<TruncSeries<R>> components; // index = theta power
    bool imaginary(unsigned k) const { return k % 2 == 1; }
};

template <class R>
ThetaExpansion<R> theta_expand(const std::vector<R>& a, unsigned x_order, unsigned theta_order) {
    ThetaExpansion<R> out;
    Rational kfact(1);
    for (unsigned k = 0; k <= theta_order; ++k) {
        if (k > 0) kfact *= Rational((long)k);
        Rational scale = Rational(1) / kfact;
        if ((k / 2) % 2 == 1) scale = -scale; // sign of i^k (odd k: sign of the imaginary unit part)
        out.components.push_back(ring_scale(weighted_series(a, (long)k, x_order), scale));
    }
    return out;
}

} // namespace hzeta

#endif
