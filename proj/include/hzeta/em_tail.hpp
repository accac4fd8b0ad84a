#ifndef HZETA_EM_TAIL_HPP
#define HZETA_EM_TAIL_HPP

#include <vector>

#include "hzeta/bernoulli.hpp"
#include "hzeta/bigfloat.hpp"
#include "hzeta/euler_transform.hpp"

namespace hzeta {

namespace detail {

// Polynomial in t = log x with float coefficients, for the derivative ladder
// of f(x) = t^j x^(-sigma):  f^(r)(x) = Q_r(log x) / x^(sigma + r),
// Q_0 = t^j, Q_{r+1} = Q_r' - (sigma + r) Q_r.
struct LogPoly {
    std::vector<BigFloat> c;

    static LogPoly power(unsigned j, long prec) {
        LogPoly p;
        p.c.assign(j + 1, BigFloat(0L, prec));
        p.c[j] = BigFloat(1L, prec);
        return p;
    }
    LogPoly next(const BigFloat& sigma_plus_r) const {
        LogPoly out;
        out.c.assign(c.size(), BigFloat(0L, c[0].precision()));
        for (std::size_t i = 1; i < c.size(); ++i) out.c[i - 1] = c[i] * (long)i;
        for (std::size_t i = 0; i < c.size(); ++i) out.c[i] -= sigma_plus_r * c[i];
        return out;
    }
    BigFloat eval(const BigFloat& t) const {
        BigFloat acc(0L, t.precision());
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
        return acc;
    }
    BigFloat eval_abs(const BigFloat& t) const { // sum |c_i| t^i, t >= 0
        BigFloat acc(0L, t.precision());
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + abs(c[i]);
        return acc;
    }
};

// I(j, sigma, N) = int_N^inf log^j x / x^sigma dx for sigma > 1:
//   (j! / w^(j+1)) N^(-w) sum_{r=0}^j (w L)^r / r!,  w = sigma - 1, L = log N.
inline BigFloat log_power_integral(unsigned j, const BigFloat& sigma, const BigFloat& N) {
    long prec = N.precision();
    BigFloat w = sigma - BigFloat(1L, prec);
    BigFloat L = log(N);
    BigFloat wL = w * L;
    BigFloat term(1L, prec); // (wL)^r / r!
    BigFloat s = term;
    for (unsigned r = 1; r <= j; ++r) {
        term = term * wL / (long)r;
        s += term;
    }
    BigFloat jf(Rational(factorial(j)), prec);
    return jf / pow_si(w, (long)j + 1) * exp(-(w * L)) * s;
}

} // namespace detail

/// Euler-Maclaurin evaluation of  sum_{k=N}^inf log^j k / k^sigma  (sigma > 1).
/// The remainder after p correction terms is bounded rigorously by
/// (4 / (2 pi)^(2p)) int_N^inf |f^(2p)|, evaluated through the coefficient
/// envelope of the derivative polynomial.
inline SumResult em_tail_convergent(unsigned j, const BigFloat& sigma, unsigned long N,
                                    const BigFloat& target_error, int max_order = 60) {
    long prec = sigma.precision();
    BigFloat Nf((long)N, prec);
    BigFloat L = log(Nf);

    SumResult r;
    r.rigorous = true;
    BigFloat value = detail::log_power_integral(j, sigma, Nf);
    // f(N)/2
    detail::LogPoly Q = detail::LogPoly::power(j, prec);
    BigFloat fN = Q.eval(L) * exp(-(sigma * L));
    value += ldexp2(fN, -1);

    BigFloat inv_two_pi_sq = pow_si(const_pi(prec) * 2L, -2);
    BigFloat env_factor(4L, prec); // 4 / (2 pi)^(2p), maintained incrementally
    BigFloat best_bound(prec);
    BigFloat best_value(prec);
    bool have = false;
    int order = 0;
    long r_idx = 0; // derivative order currently held by Q
    BigFloat corr(0L, prec);
    for (int p = 1; p <= max_order; ++p) {
        while (r_idx < 2 * p - 1) {
            Q = Q.next(sigma + r_idx);
            ++r_idx;
        }
        BigFloat deriv = Q.eval(L) * exp(-((sigma + (long)(2 * p - 1)) * L));
        BigFloat term = BigFloat(bernoulli(2 * p) / Rational(factorial(2 * p)), prec) * deriv;
        corr -= term;

        // remainder bound after including this term
        detail::LogPoly Q2p = Q.next(sigma + (long)(2 * p));
        env_factor *= inv_two_pi_sq;
        BigFloat env(0L, prec);
        for (std::size_t i = 0; i < Q2p.c.size(); ++i) {
            if (Q2p.c[i].is_zero()) continue;
            env += abs(Q2p.c[i]) * detail::log_power_integral((unsigned)i, sigma + (long)(2 * p), Nf);
        }
        BigFloat bound = env_factor * env;
        if (!have || bound < best_bound) {
            best_bound = bound;
            best_value = value + corr;
            order = p;
            have = true;
        }
        if (bound < target_error) break;
        if (have && bound > best_bound * 4L) break; // diverging, keep the best
    }
    r.value = best_value;
    r.error_bound = best_bound;
    r.terms_used = order;
    return r;
}

/// Euler-Maclaurin evaluation of the regularized sum
///   lim_{M->inf} [ sum_{k=N}^M log^j k / k  -  log^(j+1) M / (j+1) ]
///     = -log^(j+1) N / (j+1) + f(N)/2 - sum_p B_{2p}/(2p)! f^(2p-1)(N) + R,
/// with f(x) = log^j x / x.
inline SumResult em_tail_log_over_k(unsigned j, unsigned long N, long prec,
                                    const BigFloat& target_error, int max_order = 60) {
    BigFloat Nf((long)N, prec);
    BigFloat L = log(Nf);
    BigFloat sigma(1L, prec);

    SumResult r;
    r.rigorous = true;
    BigFloat value = -(pow_si(L, (long)j + 1) / ((long)j + 1));
    detail::LogPoly Q = detail::LogPoly::power(j, prec);
    value += ldexp2(Q.eval(L) / Nf, -1);

    BigFloat inv_two_pi_sq = pow_si(const_pi(prec) * 2L, -2);
    BigFloat env_factor(4L, prec);
    BigFloat best_bound(prec), best_value(prec);
    bool have = false;
    int order = 0;
    long r_idx = 0;
    BigFloat corr(0L, prec);
    for (int p = 1; p <= max_order; ++p) {
        while (r_idx < 2 * p - 1) {
            Q = Q.next(sigma + r_idx);
            ++r_idx;
        }
        BigFloat deriv = Q.eval(L) * exp(-((sigma + (long)(2 * p - 1)) * L));
        BigFloat term = BigFloat(bernoulli(2 * p) / Rational(factorial(2 * p)), prec) * deriv;
        corr -= term;

        detail::LogPoly Q2p = Q.next(sigma + (long)(2 * p));
        env_factor *= inv_two_pi_sq;
        BigFloat env(0L, prec);
        for (std::size_t i = 0; i < Q2p.c.size(); ++i) {
            if (Q2p.c[i].is_zero()) continue;
            env += abs(Q2p.c[i]) * detail::log_power_integral((unsigned)i, sigma + (long)(2 * p), Nf);
        }
        BigFloat bound = env_factor * env;
        if (!have || bound < best_bound) {
            best_bound = bound;
            best_value = value + corr;
            order = p;
            have = true;
        }
        if (bound < target_error) break;
        if (have && bound > best_bound * 4L) break;
    }
    r.value = best_value;
    r.error_bound = best_bound;
    r.terms_used = order;
    return r;
}

} // namespace hzeta

#endif
