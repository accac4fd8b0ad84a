#ifndef HZETA_LAURENT_HPP
#define HZETA_LAURENT_HPP

#include <mutex>
#include <vector>

#include "hzeta/bernoulli.hpp"
#include "hzeta/errors.hpp"
#include "hzeta/gamma_poly.hpp"
#include "hzeta/trunc_series.hpp"

namespace hzeta {

/// Order of the pole of H^m(z) at integer z <= 1:
///   m+1 at z = 1; m at z = 0 and z = -1; then m at odd and m-1 at even
///   negative integers. For m = 0 the "-1 at negative even z" reading is a
///   simple zero (the trivial zeros of zeta).
inline int pole_order(unsigned m, long z) {
    if (z > 1) throw std::domain_error("pole_order: defined for integer z <= 1");
    if (z == 1) return (int)m + 1;
    if (z == 0 || z == -1) return (int)m;
    return (z % 2 == 0) ? (int)m - 1 : (int)m;
}

namespace detail {

struct ACoeffTable {
    std::mutex mu;
    // a[n][l], 0 <= l <= n; a_n(0) = [n == 0], a_n(l+1) = sum_{k=1}^{n-l} (-1)^k zeta(1-k) a_{n-k}(l)
    std::vector<std::vector<Rational>> a;

    void ensure(std::size_t n_max) {
        if (a.size() > n_max) return;
        std::size_t old = a.size();
        a.resize(n_max + 1);
        for (std::size_t n = old; n <= n_max; ++n) a[n].assign(n + 1, Rational(0));
        if (old == 0) a[0][0] = 1;
        for (std::size_t n = std::max<std::size_t>(old, 1); n <= n_max; ++n) {
            for (std::size_t l = 0; l < n; ++l) {
                Rational s(0);
                for (std::size_t k = 1; k + l <= n; ++k) {
                    std::size_t nn = n - k;
                    if (l >= a[nn].size() || a[nn][l] == 0) continue;
                    Rational z = zeta_nonpos((unsigned)k - 1); // zeta(1-k)
                    if (k % 2 == 1) z = -z;
                    s += z * a[nn][l];
                }
                a[n][l + 1] = s;
            }
        }
    }
};

inline ACoeffTable& a_table() {
    static ACoeffTable t;
    return t;
}

} // namespace detail

/// a_n(l) from the reduction recurrence; memoized, default table up to n = 64.
inline Rational a_coeff(unsigned n, unsigned l) {
    if (l > n) return Rational(0); // upper-triangular complement
    auto& t = detail::a_table();
    std::lock_guard<std::mutex> lock(t.mu);
    t.ensure(std::max<std::size_t>(n, 64));
    return t.a[n][l];
}

/// Residue of H^m at the point 1-n as a polynomial in gamma:
///   H^m(1-n) = sum_l C(m,l) gamma^(m-l) a_n(l).
/// Points right of 1 carry no pole; the zero polynomial is returned so the
/// recursion ladders can be written uniformly.
inline GammaPoly residue(unsigned m, long point) {
    if (point > 1) return GammaPoly();
    unsigned n = (unsigned)(1 - point);
    GammaPoly out;
    for (unsigned l = 0; l <= std::min(m, n); ++l) {
        Rational a = a_coeff(n, l);
        if (a == 0) continue;
        out += GammaPoly::monomial(Rational(binomial(m, l)) * a, m - l);
    }
    return out;
}

struct LaurentCoeffValue {
    GammaPoly value;
    bool above_pole_order = false; // k exceeded the pole order; value is zero
};

/// Coefficient of (s - point)^(-k) of H^m at an integer point = 1-n:
///   H^m(1-n, k) = sum_l C(m,l) gamma^(m-l) * l(l-1)...(l-k+2) * a_n(l-k+1).
/// k = 1 is the residue. k beyond m+1 is rejected; k between the pole order
/// and m+1 yields the zero polynomial, flagged rather than thrown.
inline LaurentCoeffValue laurent_coeff(unsigned m, long point, unsigned k) {
    if (k < 1 || k > m + 1)
        throw order_exceeded_error("laurent_coeff: k must satisfy 1 <= k <= m+1");
    if (point > 1) return {GammaPoly(), true};
    unsigned n = (unsigned)(1 - point);
    GammaPoly out;
    for (unsigned l = 0; l <= m; ++l) {
        if (l + 1 < k) continue;        // falling factorial vanishes
        unsigned idx = l - k + 1;       // a_n(l-k+1)
        if (idx > n) continue;
        Rational ff(1);
        for (unsigned t = 0; t + 1 < k; ++t) ff *= Rational(Int(l - t));
        Rational a = a_coeff(n, idx);
        if (a == 0 || ff == 0) continue;
        out += GammaPoly::monomial(Rational(binomial(m, l)) * ff * a, m - l);
    }
    int po = pole_order(m, point);
    return {out, (int)k > po};
}

/// The generating series f(z) = z/2 + zeta(-1) z^2 + zeta(-3) z^4 + ... whose
/// m-th power collects a_n(m), as a series over GammaPoly (so gamma can ride
/// along as the constant term).
inline TruncSeries<GammaPoly> residue_genfn(unsigned order, bool with_gamma) {
    TruncSeries<GammaPoly> f(order, GammaPoly());
    if (with_gamma) f.coeff(0) = GammaPoly::monomial(Rational(1), 1);
    for (unsigned n = 1; n <= order; ++n) {
        Rational z = zeta_nonpos(n - 1); // zeta(1-n)
        if (n % 2 == 1) z = -z;
        if (z != 0) f.coeff(n) = GammaPoly(z);
    }
    return f;
}

/// Coefficientwise check of
///   sum_n H^m(1-n, k+1) x^n = m(m-1)...(m-k+1) (gamma + f(x))^(m-k)
/// to the given order; exact on both routes.
inline bool laurent_genfn_check(unsigned m, unsigned k, unsigned order) {
    if (k > m) throw std::domain_error("laurent_genfn_check: needs k <= m");
    TruncSeries<GammaPoly> rhs = series_pow(residue_genfn(order, true), m - k);
    Rational ff(1);
    for (unsigned t = 0; t < k; ++t) ff *= Rational(Int(m - t));
    rhs = ring_scale(rhs, ff);
    for (unsigned n = 0; n <= order; ++n) {
        GammaPoly lhs = laurent_coeff(m, 1 - (long)n, k + 1).value;
        if (lhs != rhs.coeff(n)) return false;
    }
    return true;
}

/// Exact verification of the residue ladder
///   H^(m+1)(p) = gamma H^m(p) + 1/2 H^m(p+1) + sum_{2k+p <= 1} zeta(1-2k) H^m(2k+p)
/// for all 0 <= m < m_max and points 1 >= p >= -n_max.
inline bool residue_recursion_check(unsigned m_max, unsigned n_max) {
    GammaPoly gamma = GammaPoly::monomial(Rational(1), 1);
    for (unsigned m = 0; m < m_max; ++m) {
        for (long p = 1; p >= -(long)n_max; --p) {
            GammaPoly rhs = gamma * residue(m, p);
            rhs += residue(m, p + 1) * Rational(1, 2);
            for (long k = 1; 2 * k + p <= 1; ++k)
                rhs += residue(m, 2 * k + p) * zeta_nonpos((unsigned)(2 * k - 1));
            if (residue(m + 1, p) != rhs) return false;
        }
    }
    return true;
}

} // namespace hzeta

#endif
