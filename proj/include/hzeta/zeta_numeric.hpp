#ifndef HZETA_ZETA_NUMERIC_HPP
#define HZETA_ZETA_NUMERIC_HPP

#include "hzeta/bigfloat.hpp"
#include "hzeta/euler_transform.hpp"

namespace hzeta {

/// eta^(j)(s) = sum_{n>=1} (-1)^(n+1) (-log n)^j n^(-s), entire in s,
/// summed by Euler transform (convergent for every real s; this is the
/// alternating route to zeta off the convergence half-plane).
inline BigFloat eta_derivative(unsigned j, const BigFloat& s, long prec) {
    long wprec = prec + 32;
    BigFloat sw = s.round_to(wprec);
    BigFloat target = ldexp2(BigFloat(1L, wprec), -(prec + 8));
    auto term = [&](long n) {
        BigFloat lk = log(BigFloat(n, wprec));
        BigFloat t = pow_si(-lk, (long)j) * exp(-(sw * lk));
        return (n % 2 == 0) ? -t : t;
    };
    return euler_transform_sum(term, target, wprec).value.round_to(prec);
}

inline BigFloat eta_at(const BigFloat& s, long prec) { return eta_derivative(0, s, prec); }

/// zeta and its first two derivatives at real s != 1 through
/// zeta = eta / w with w(s) = 1 - 2^(1-s) = -expm1((1-s) log 2).
struct ZetaDerivs {
    BigFloat z0, z1, z2;
};

inline ZetaDerivs zeta_with_derivs(const BigFloat& s, long prec, int upto = 2) {
    long wprec = prec + 32;
    BigFloat sw = s.round_to(wprec);
    BigFloat ln2 = const_log2(wprec);
    BigFloat w = -expm1((BigFloat(1L, wprec) - sw) * ln2);
    BigFloat two_pow = BigFloat(1L, wprec) - w; // 2^(1-s)
    BigFloat w1 = two_pow * ln2;                // w'
    BigFloat w2 = -(two_pow * ln2 * ln2);       // w''

    ZetaDerivs out{BigFloat(prec), BigFloat(prec), BigFloat(prec)};
    BigFloat e0 = eta_derivative(0, sw, wprec);
    BigFloat z0 = e0 / w;
    out.z0 = z0.round_to(prec);
    if (upto >= 1) {
        BigFloat e1 = eta_derivative(1, sw, wprec);
        BigFloat z1 = (e1 - w1 * z0) / w;
        out.z1 = z1.round_to(prec);
        if (upto >= 2) {
            BigFloat e2 = eta_derivative(2, sw, wprec);
            BigFloat z2 = (e2 - w2 * z0 - (w1 * z1) * 2L) / w;
            out.z2 = z2.round_to(prec);
        }
    }
    return out;
}

} // namespace hzeta

#endif
