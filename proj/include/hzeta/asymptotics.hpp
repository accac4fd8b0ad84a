#ifndef HZETA_ASYMPTOTICS_HPP
#define HZETA_ASYMPTOTICS_HPP

#include <functional>
#include <string>
#include <vector>

#include "hzeta/euler_sums.hpp"
#include "hzeta/neg_values.hpp"

namespace hzeta {

enum class AsymptoticFamily { harmonic_over_n, alternating, plain_power };

/// Closed-form evaluator for one of the three sum families, together with its
/// exact-constant part. residual(N) = exact partial sum - evaluate(N) must
/// shrink along any growing N grid; that o(1) contract is what the harness
/// measures.
struct AsymptoticFormula {
    AsymptoticFamily family;
    unsigned m = 0;
    ConstCombo constant_part;
    std::function<BigFloat(unsigned long)> evaluate;
};

namespace detail {

inline BigFloat hfloat(unsigned long n, long prec) {
    return BigFloat(harmonic_number(n), prec);
}

} // namespace detail

/// Right side of the expansion of sum_{n<=N} H_n^m / n:
///   H_{N+1}^(m+1)/(m+1) + (-1)^(m+1) zeta(m+1)/(m+1)
///   + sum_{k=0}^{m-2} C(m+1,k+1) (-1)^(k+m) H^(k+1)(m-k) / (m+1).
inline BigFloat asym_harmonic_over_n(unsigned m, unsigned long N,
                                     long prec = BigFloat::default_precision) {
    if (m < 1 || m > 5) throw std::domain_error("asym_harmonic_over_n: 1 <= m <= 5");
    long wprec = prec + 16;
    BigFloat out = pow_si(detail::hfloat(N + 1, wprec), (long)m + 1) / (long)(m + 1);
    ConstCombo c = zeta_combo(m + 1) * (m % 2 == 1 ? Rational(1, Int(m + 1)) : -Rational(1, Int(m + 1)));
    for (unsigned k = 0; k + 2 <= m; ++k) {
        Rational coef(binomial(m + 1, k + 1), Int(m + 1));
        if ((k + m) % 2 == 1) coef = -coef;
        c += harmonic_zeta_combo(k + 1, m - k) * coef;
    }
    out += c.eval(wprec);
    return out.round_to(prec);
}

/// The constant part of the alternating family, assembled from the
/// theorem's own sum (structurally equal to j_value_at_zero(m)).
inline ConstCombo asym_alternating_constant(unsigned m) {
    ConstCombo c;
    for (unsigned k = 0; k < m; ++k) {
        ConstCombo j = (k == 0) ? eta_combo(m - k) : alternating_zeta_combo(k, m - k);
        Rational coef(binomial(m, k), Int(2));
        if ((m - k - 1) % 2 == 1) coef = -coef;
        c += j * coef;
    }
    return c;
}

/// Right side of sum_{n<=N} (-1)^(n+1) H_n^m: the oscillating half term plus
/// the constant 1/2 sum_k C(m,k)(-1)^(m-k-1) J^k(m-k), which is exactly
/// J^m(0).
inline BigFloat asym_alternating(unsigned m, unsigned long N,
                                 long prec = BigFloat::default_precision) {
    if (m < 1 || m > 4) throw std::domain_error("asym_alternating: 1 <= m <= 4");
    long wprec = prec + 16;
    BigFloat out = ldexp2(pow_si(detail::hfloat(N + 1, wprec), (long)m), -1);
    if (N % 2 == 0) out = -out; // (-1)^(N+1)
    out += asym_alternating_constant(m).eval(wprec);
    return out.round_to(prec);
}

/// Exact closed forms of sum_{n<=N} H_n^M for M = 1, 2 (zero residual).
inline Rational plain_power_exact(unsigned M, unsigned long N) {
    Rational H1 = harmonic_number(N + 1);
    if (M == 1) return Rational(Int(N + 1)) * (H1 - 1);
    if (M == 2)
        return Rational(Int(N + 1)) * H1 * H1 - Rational(Int(2 * N + 3)) * H1 +
               Rational(Int(2 * N + 2));
    throw std::domain_error("plain_power_exact: only M = 1, 2 have exact closed forms");
}

/// Right side of the expansion of sum_{n<=N} H_n^M for M >= 3 (and the exact
/// closed forms for M = 1, 2).
inline BigFloat asym_plain_power(unsigned M, unsigned long N,
                                 long prec = BigFloat::default_precision) {
    if (M < 1 || M > 5) throw std::domain_error("asym_plain_power: 1 <= M <= 5");
    long wprec = prec + 16;
    if (M <= 2) return BigFloat(plain_power_exact(M, N), prec);

    BigFloat H = detail::hfloat(N + 1, wprec);
    BigFloat Nf((long)N, wprec);
    BigFloat out = pow_si(H, (long)M) * (Nf + 1L);
    BigFloat brace(0L, wprec);
    for (unsigned mm = 3; mm < M; ++mm) {
        BigFloat t = pow_si(H, (long)mm) * (Nf + BigFloat(Rational(3, 2), wprec));
        t = t * BigFloat(Rational(1, factorial(mm)), wprec);
        if (mm % 2 == 1) t = -t;
        brace += t;
    }
    brace += Nf + 1L;
    brace += (ldexp2(Nf, -1) + BigFloat(Rational(3, 4), wprec)) * pow_si(H, 2);
    brace -= (Nf + BigFloat(Rational(3, 2), wprec)) * H;
    ConstCombo cc;
    for (unsigned mm = 3; mm <= M; ++mm)
        cc -= zeta_combo(mm - 1) * (Rational(mm, 2) - 1) * Rational(1, factorial(mm));
    for (unsigned mm = 4; mm <= M; ++mm)
        for (unsigned k = 1; k + 3 <= mm; ++k) {
            Rational coef = Rational(binomial(mm - 1, k)) * Rational(mm, 2) - Rational(binomial(mm, k));
            coef /= Rational(factorial(mm));
            if (k % 2 == 0) coef = -coef; // (-1)^(k+1)
            cc += harmonic_zeta_combo(k, mm - k - 1) * coef;
        }
    brace += cc.eval(wprec);
    BigFloat mfact(Rational(factorial(M)), wprec);
    if (M % 2 == 1) mfact = -mfact;
    out += mfact * brace;
    return out.round_to(prec);
}

/// One reduction step (m >= 3):
///   sum_{n<=N} H_n^m = (N+1) H_{N+1}^m - m/2 H_{N+1}^(m-1) - m sum_{n<=N} H_n^(m-1)
///     + (-1)^(m-1) zeta(m-1)(m/2 - 1)
///     + sum_{k=1}^{m-3} [C(m-1,k) m/2 - C(m,k)] (-1)^(m-k-1) H^k(m-k-1) + o(1);
/// verified by a shrinking residual over the N grid.
inline bool reduction_step_check(unsigned m, const std::vector<unsigned long>& grid,
                                 long prec = BigFloat::default_precision) {
    if (m < 3 || m > 5) throw std::domain_error("reduction_step_check: 3 <= m <= 5");
    long wprec = prec + 16;
    ConstCombo cc = zeta_combo(m - 1) * ((m % 2 == 1 ? Rational(1) : Rational(-1)) * (Rational(m, 2) - 1));
    for (unsigned k = 1; k + 3 <= m; ++k) {
        Rational coef = Rational(binomial(m - 1, k)) * Rational(m, 2) - Rational(binomial(m, k));
        if ((m - k - 1) % 2 == 1) coef = -coef;
        cc += harmonic_zeta_combo(k, m - k - 1) * coef;
    }
    BigFloat constant = cc.eval(wprec);

    BigFloat prev_resid(wprec);
    bool first = true;
    for (unsigned long N : grid) {
        BigFloat Sm(0L, wprec), Sm1(0L, wprec), H(0L, wprec);
        for (unsigned long n = 1; n <= N; ++n) {
            H += BigFloat(1L, wprec) / (long)n;
            Sm += pow_si(H, (long)m);
            Sm1 += pow_si(H, (long)m - 1);
        }
        BigFloat HN1 = H + BigFloat(1L, wprec) / (long)(N + 1);
        BigFloat rhs = (BigFloat((long)N, wprec) + 1L) * pow_si(HN1, (long)m);
        rhs -= BigFloat(Rational(m, 2), wprec) * pow_si(HN1, (long)m - 1);
        rhs -= BigFloat((long)m, wprec) * Sm1;
        rhs += constant;
        BigFloat resid = abs(Sm - rhs);
        if (!first && !(resid < prev_resid)) return false;
        prev_resid = resid;
        first = false;
    }
    return true;
}

/// Family wrapper used by the CLI and the residual-decay harness.
inline AsymptoticFormula make_asymptotic(AsymptoticFamily family, unsigned m, long prec) {
    AsymptoticFormula f;
    f.family = family;
    f.m = m;
    switch (family) {
        case AsymptoticFamily::harmonic_over_n: {
            ConstCombo c = zeta_combo(m + 1) *
                           (m % 2 == 1 ? Rational(1, Int(m + 1)) : -Rational(1, Int(m + 1)));
            for (unsigned k = 0; k + 2 <= m; ++k) {
                Rational coef(binomial(m + 1, k + 1), Int(m + 1));
                if ((k + m) % 2 == 1) coef = -coef;
                c += harmonic_zeta_combo(k + 1, m - k) * coef;
            }
            f.constant_part = c;
            f.evaluate = [m, prec](unsigned long N) { return asym_harmonic_over_n(m, N, prec); };
            break;
        }
        case AsymptoticFamily::alternating:
            f.constant_part = asym_alternating_constant(m);
            f.evaluate = [m, prec](unsigned long N) { return asym_alternating(m, N, prec); };
            break;
        case AsymptoticFamily::plain_power:
            if (m >= 3) {
                ConstCombo cc;
                for (unsigned mm = 3; mm <= m; ++mm)
                    cc -= zeta_combo(mm - 1) * (Rational(mm, 2) - 1) * Rational(1, factorial(mm));
                for (unsigned mm = 4; mm <= m; ++mm)
                    for (unsigned k = 1; k + 3 <= mm; ++k) {
                        Rational coef =
                            Rational(binomial(mm - 1, k)) * Rational(mm, 2) - Rational(binomial(mm, k));
                        coef /= Rational(factorial(mm));
                        if (k % 2 == 0) coef = -coef;
                        cc += harmonic_zeta_combo(k, mm - k - 1) * coef;
                    }
                Rational mf(factorial(m));
                if (m % 2 == 1) mf = -mf;
                f.constant_part = cc * mf;
            }
            f.evaluate = [m, prec](unsigned long N) { return asym_plain_power(m, N, prec); };
            break;
    }
    return f;
}

/// Residuals |exact partial sum - formula(N)| over a grid, with float partial
/// sums carried at enough precision that their rounding (~N ulp) sits far
/// below any residual the o(1) harness compares.
inline std::vector<BigFloat> asymptotic_residuals(AsymptoticFamily family, unsigned m,
                                                  const std::vector<unsigned long>& grid,
                                                  long prec = BigFloat::default_precision) {
    long wprec = prec + 32;
    std::vector<BigFloat> out;
    unsigned long n_max = 0;
    for (auto N : grid) n_max = std::max(n_max, N);

    std::vector<BigFloat> partial(grid.size(), BigFloat(0L, wprec));
    BigFloat S(0L, wprec), H(0L, wprec);
    std::size_t gi = 0;
    std::vector<std::pair<unsigned long, std::size_t>> marks;
    for (std::size_t i = 0; i < grid.size(); ++i) marks.push_back({grid[i], i});
    std::sort(marks.begin(), marks.end());
    for (unsigned long n = 1; n <= n_max; ++n) {
        H += BigFloat(1L, wprec) / (long)n;
        BigFloat term;
        switch (family) {
            case AsymptoticFamily::harmonic_over_n: term = pow_si(H, (long)m) / (long)n; break;
            case AsymptoticFamily::alternating:
                term = pow_si(H, (long)m);
                if (n % 2 == 0) term = -term;
                break;
            case AsymptoticFamily::plain_power: term = pow_si(H, (long)m); break;
        }
        S += term;
        while (gi < marks.size() && marks[gi].first == n) {
            partial[marks[gi].second] = S;
            ++gi;
        }
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        BigFloat formula;
        switch (family) {
            case AsymptoticFamily::harmonic_over_n: formula = asym_harmonic_over_n(m, grid[i], wprec); break;
            case AsymptoticFamily::alternating: formula = asym_alternating(m, grid[i], wprec); break;
            case AsymptoticFamily::plain_power: formula = asym_plain_power(m, grid[i], wprec); break;
        }
        out.push_back(abs(partial[i] - formula).round_to(prec));
    }
    return out;
}

} // namespace hzeta

#endif
