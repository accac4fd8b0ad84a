#ifndef HZETA_NEG_VALUES_HPP
#define HZETA_NEG_VALUES_HPP

#include <map>
#include <optional>
#include <mutex>
#include <string>

#include "hzeta/euler_sums.hpp"
#include "hzeta/rational_function.hpp"

namespace hzeta {

// ---------------------------------------------------------------------------
// Dedicated exact formulas for J, J^2, J^3 and H at negative integers
// ---------------------------------------------------------------------------

/// H(-2n) = B_{2n} (2n-1) / (4n), n >= 1 (the only finite negative values of
/// the harmonic zeta function; everything else on that side is a pole).
inline Rational h1_negative_even(unsigned n) {
    if (n < 1) throw std::domain_error("h1_negative_even: n >= 1");
    return bernoulli(2 * n) * Rational(2 * n - 1) / Rational(4 * n);
}

/// J(-k) for k >= 0 as an exact combination of 1 and log 2:
///   J(0)     = 1/2 log 2
///   J(-1)    = 1/4 - 1/4 log 2
///   J(-2n)   = -B_{2n} (4^n - 1)(2n - 1) / (4n)
///   J(1-2n)  = -B_{2n}(4^n-1)/(2n) log 2
///              - sum_{j=1}^{n-1} (2n-1)! B_{2j} B_{2n-2j} (4^j-1)(4^(n-j)-1)
///                                / (2j (2j)! (2n-2j)!)        (n >= 2).
inline ConstCombo j1_negative(unsigned k) {
    const ConstCombo log2 = ConstCombo::atom("log2");
    if (k == 0) return log2 * Rational(1, 2);
    if (k == 1) return ConstCombo(Rational(1, 4)) - log2 * Rational(1, 4);
    if (k % 2 == 0) {
        unsigned n = k / 2;
        Rational v = -bernoulli(2 * n) * (rat_pow(Rational(4), n) - 1) * Rational(2 * n - 1) /
                     Rational(4 * n);
        return ConstCombo(v);
    }
    unsigned n = (k + 1) / 2; // k = 2n - 1, n >= 2
    Rational lc = -bernoulli(2 * n) * (rat_pow(Rational(4), n) - 1) / Rational(2 * n);
    Rational rest(0);
    for (unsigned j = 1; j < n; ++j) {
        Rational t = Rational(factorial(2 * n - 1)) * bernoulli(2 * j) * bernoulli(2 * n - 2 * j) *
                     (rat_pow(Rational(4), j) - 1) * (rat_pow(Rational(4), n - j) - 1);
        t /= Rational(2 * j) * Rational(factorial(2 * j)) * Rational(factorial(2 * n - 2 * j));
        rest += t;
    }
    return log2 * lc - ConstCombo(rest);
}

namespace detail {

// J(s) for any integer s: exact combo for s <= 0 and for the small positive
// weights; named numeric atom otherwise.
inline ConstCombo j1_any(int s) {
    if (s <= 0) return j1_negative((unsigned)(-s));
    if (auto e = alternating_zeta_exact(1, (unsigned)s)) return *e;
    return alternating_zeta_combo(1, (unsigned)s);
}

inline ConstCombo eta_any(int s) {
    if (s <= 0) return ConstCombo(eta_nonpos((unsigned)(-s)));
    return eta_combo((unsigned)s);
}

} // namespace detail

/// J^2(-k) through the paper's reduction to the m = 1 and m = 0 cases:
///   J^2(-k) = J(1-k) - eta(2-k)/2
///             + sum_{j=0}^{k-1} C(k,j) eta(j-k) (eta(2-j) - 2 J(1-j)).
/// Exact over {1, log2, log2^2, pi2}.
inline ConstCombo j2_negative(unsigned k) {
    ConstCombo out = detail::j1_any(1 - (int)k);
    out -= detail::eta_any(2 - (int)k) * Rational(1, 2);
    for (unsigned j = 0; j < k; ++j) {
        Rational etajk = eta_nonpos(k - j); // eta(j-k), j-k < 0
        ConstCombo inner = detail::eta_any(2 - (int)j) - detail::j1_any(1 - (int)j) * Rational(2);
        out += inner * (etajk * Rational(binomial(k, j)));
    }
    return out;
}

namespace detail {
inline ConstCombo j2_any(int s) {
    if (s <= 0) return j2_negative((unsigned)(-s));
    if (auto e = alternating_zeta_exact(2, (unsigned)s)) return *e;
    return alternating_zeta_combo(2, (unsigned)s);
}
} // namespace detail

/// J^3(-k) through the next rung of the same ladder:
///   J^3(-k) = 1/2 (3 J^2(1-k) - 3 J(2-k) + eta(3-k))
///             - sum_{j=0}^{k-1} C(k,j) eta(j-k) (3 J^2(1-j) - 3 J(2-j) + eta(3-j)).
/// May carry named positive-weight atoms (e.g. J2_3) for larger k; numeric
/// evaluation is always defined.
inline ConstCombo j3_negative(unsigned k) {
    auto bracket = [](int j) {
        return detail::j2_any(1 - j) * Rational(3) - detail::j1_any(2 - j) * Rational(3) +
               detail::eta_any(3 - j);
    };
    ConstCombo out = bracket((int)k) * Rational(1, 2);
    for (unsigned j = 0; j < k; ++j)
        out -= bracket((int)j) * (eta_nonpos(k - j) * Rational(binomial(k, j)));
    return out;
}

/// Dirichlet regularization of J^m at 0:
///   J^m(0) = 1/2 sum_{k=1}^m C(m,k) (-1)^(k+1) J^(m-k)(k).
/// Fully exact for m <= 4; for larger m the weight >= 5 values enter as named
/// numeric atoms.
inline ConstCombo j_value_at_zero(unsigned m) {
    if (m < 1) throw std::domain_error("j_value_at_zero: m >= 1");
    ConstCombo out;
    for (unsigned k = 1; k <= m; ++k) {
        ConstCombo j = (m - k == 0) ? eta_combo(k) : alternating_zeta_combo(m - k, k);
        Rational c(binomial(m, k), Int(2));
        if (k % 2 == 0) c = -c;
        out += j * c;
    }
    return out;
}

// ---------------------------------------------------------------------------
// General recursion via the harmonic-polylog reduction at x = -1
// ---------------------------------------------------------------------------

namespace detail {

struct JmCache {
    std::mutex mu;
    // Hl_s^m(-1) by (m, s, precision); covers both the recursive negative
    // arguments and the alternating-series leaves, which would otherwise be
    // transformed again at every call site
    std::map<std::tuple<unsigned, int, long>, BigFloat> values;
};
inline JmCache& jm_cache() {
    static JmCache c;
    return c;
}

// Hl_s^m(-1) = -J^m(s); for s <= 0 through the reduction
//   Hl_{-k}^m(x) = sum_{j=1}^m C(m,j)(-1)^(j+1) [ Hl_{j-k}^{m-j}(x)
//                  + sum_{l=0}^k C(k,l) Li_{l-k}(x) Hl_{j-l}^{m-j}(x) ],
// with Li_{l-k}(-1) = -eta(k-l) exact rationals.
inline BigFloat hl_at_minus_one(unsigned m, int s, long prec);

inline BigFloat jm_negative_impl(unsigned m, unsigned k, long prec) {
    return -hl_at_minus_one(m, -(int)k, prec);
}

inline BigFloat hl_at_minus_one(unsigned m, int s, long prec) {
    if (m == 0 && s <= 0) return BigFloat(-eta_nonpos((unsigned)(-s)), prec);
    {
        auto& c = jm_cache();
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.values.find({m, s, prec});
        if (it != c.values.end()) return it->second;
    }
    BigFloat out(prec);
    if (m == 0) {
        out = -eta_at(BigFloat((long)s, prec), prec); // Li_s(-1) = -eta(s)
    } else if (s > 0) {
        out = -alternating_harmonic_zeta(m, BigFloat((long)s, prec), prec).value;
    } else {
        unsigned k = (unsigned)(-s);
        out = BigFloat(0L, prec);
        for (unsigned j = 1; j <= m; ++j) {
            BigFloat inner = hl_at_minus_one(m - j, (int)j - (int)k, prec);
            for (unsigned l = 0; l <= k; ++l) {
                BigFloat li(-eta_nonpos(k - l), prec);
                inner += BigFloat(Rational(binomial(k, l)), prec) * li *
                         hl_at_minus_one(m - j, (int)j - (int)l, prec);
            }
            BigFloat c(Rational(binomial(m, j)), prec);
            if (j % 2 == 0) c = -c;
            out += c * inner;
        }
    }
    auto& c = jm_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    c.values.emplace(std::make_tuple(m, s, prec), out);
    return out;
}

} // namespace detail

/// J^m(-k) numerically through the general reduction (Abel regularization at
/// x = -1); positive-argument values come from the convergent alternating
/// series, never from divergent summation.
inline BigFloat jm_negative(unsigned m, unsigned k, long prec = BigFloat::default_precision) {
    if (m > 5 || k > 12) throw std::domain_error("jm_negative: envelope is m <= 5, k <= 12");
    if (m == 0) return BigFloat(eta_nonpos(k), prec);
    long wprec = prec + 32;
    return detail::jm_negative_impl(m, k, wprec).round_to(prec);
}

/// A negative-integer value with both faces: the exact combination where a
/// dedicated formula exists (m <= 3) and the numeric value always.
struct NegValue {
    unsigned m = 0;
    unsigned n = 0; // the argument is -n
    std::optional<ConstCombo> exact;
    BigFloat numeric;
    std::string route;
};

inline NegValue j_negative_value(unsigned m, unsigned n,
                                 long prec = BigFloat::default_precision) {
    NegValue v;
    v.m = m;
    v.n = n;
    if (m == 1) v.exact = j1_negative(n);
    else if (m == 2) v.exact = j2_negative(n);
    else if (m == 3) v.exact = j3_negative(n);
    if (v.exact) {
        v.numeric = v.exact->eval(prec);
        v.route = "closed-form";
    } else {
        v.numeric = jm_negative(m, n, prec);
        v.route = "abel-recursion";
    }
    return v;
}

// ---------------------------------------------------------------------------
// Harmonic polylogarithm evaluation
// ---------------------------------------------------------------------------

struct HarmonicPolylogValue {
    unsigned m = 0;
    int s = 0;
    BigFloat x;
    BigFloat value;
    std::string route; // "direct", "abel-recursion", "rational-function", ...
};

inline HarmonicPolylogValue harmonic_polylog(unsigned m, int s, const BigFloat& x,
                                             long prec);

/// Exact-rational argument: converts losslessly at the working precision.
inline HarmonicPolylogValue harmonic_polylog(unsigned m, int s, const Rational& x,
                                             long prec = BigFloat::default_precision) {
    return harmonic_polylog(m, s, BigFloat(x, prec + 32), prec);
}

/// Hl_s^m(x) = sum H_n^m x^n / n^s. Direct summation for |x| < 1; x = -1 via
/// the Abel recursion (s <= 0) or the alternating series (s > 0); x = 1 only
/// where the series converges (s > 1).
inline HarmonicPolylogValue harmonic_polylog(unsigned m, int s, const BigFloat& x,
                                             long prec = BigFloat::default_precision) {
    HarmonicPolylogValue out;
    out.m = m;
    out.s = s;
    out.x = x.round_to(prec);
    long wprec = prec + 32;
    BigFloat one(1L, wprec);
    BigFloat ax = abs(x).round_to(wprec);

    if (x == BigFloat(1L, prec)) {
        if (s <= 1)
            throw divergence_error("harmonic_polylog: x = 1 with s <= 1 is a divergent point");
        if (m == 0) {
            out.value = zeta_ui((unsigned)s, prec);
            out.route = "zeta";
            return out;
        }
        out.value = harmonic_zeta(m, BigFloat((long)s, wprec), prec).value;
        out.route = "harmonic-zeta";
        return out;
    }
    if (x == BigFloat(-1L, prec)) {
        if (s <= 0 && m == 0) {
            out.value = BigFloat(-eta_nonpos((unsigned)(-s)), prec);
            out.route = "eta-exact";
            return out;
        }
        if (s <= 0) {
            out.value = -jm_negative(m, (unsigned)(-s), prec);
            out.route = "abel-recursion";
            return out;
        }
        out.value = (m == 0) ? -eta_at(BigFloat((long)s, wprec), prec)
                             : -alternating_harmonic_zeta(m, BigFloat((long)s, wprec), prec).value;
        out.route = "alternating-series";
        return out;
    }
    if (!(ax < one)) throw divergence_error("harmonic_polylog: need |x| < 1 off the Abel points");

    if (m == 0 && s <= 0) {
        out.value = polylog_neg((unsigned)(-s)).eval(x.round_to(wprec)).round_to(prec);
        out.route = "rational-function";
        return out;
    }

    // direct summation; the tail is geometric once n is past the mild
    // polynomial/log growth of H_n^m n^(-s)
    BigFloat xw = x.round_to(wprec);
    BigFloat H(0L, wprec), acc(0L, wprec), xp(1L, wprec);
    BigFloat target = ldexp2(one, -(prec + 8));
    BigFloat geom = one / (one - ax);
    for (unsigned long n = 1; n < 1000000; ++n) {
        H += one / (long)n;
        xp *= xw;
        BigFloat term = pow_si(H, (long)m) * xp;
        if (s != 0) term *= exp(-(BigFloat((long)s, wprec) * log(BigFloat((long)n, wprec))));
        acc += term;
        if (n > 8 && abs(term) * geom * 4L < target) break;
    }
    out.value = acc.round_to(prec);
    out.route = "direct";
    return out;
}

} // namespace hzeta

#endif
