#ifndef HZETA_NUMBER_THEORY_HPP
#define HZETA_NUMBER_THEORY_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "hzeta/bernoulli.hpp"
#include "hzeta/harmonic.hpp"
#include "hzeta/series_checks.hpp"
#include "hzeta/trunc_series.hpp"

namespace hzeta {

/// Divisors of m with cached power sums sigma_k and their parity-signed
/// variants sigma_k^- = sum_{d|m} (-1)^d d^k. Trial division up to sqrt(m).
class DivisorProfile {
public:
    explicit DivisorProfile(unsigned long m) : m_(m) {
        if (m == 0) throw std::domain_error("DivisorProfile: m >= 1");
        for (unsigned long d = 1; d * d <= m; ++d) {
            if (m % d != 0) continue;
            divisors_.push_back(d);
            if (d != m / d) divisors_.push_back(m / d);
        }
        std::sort(divisors_.begin(), divisors_.end());
    }

    unsigned long m() const { return m_; }
    const std::vector<unsigned long>& divisors() const { return divisors_; }

    /// count of divisors of m that are <= n
    unsigned long count_up_to(unsigned long n) const {
        return (unsigned long)(std::upper_bound(divisors_.begin(), divisors_.end(), n) -
                               divisors_.begin());
    }

    Int sigma(unsigned k) const {
        Int s(0);
        for (auto d : divisors_) s += int_pow(Int(d), k);
        return s;
    }
    Int sigma_minus(unsigned k) const {
        Int s(0);
        for (auto d : divisors_) {
            Int t = int_pow(Int(d), k);
            s += (d % 2 == 0) ? t : -t;
        }
        return s;
    }

private:
    unsigned long m_;
    std::vector<unsigned long> divisors_;
};

/// c_m(n): the number of divisors of m that are <= n.
inline unsigned long c_m_of_n(unsigned long m, unsigned long n) {
    return DivisorProfile(m).count_up_to(n);
}

struct CmIdentityReport {
    bool pass = false;
    Rational lhs;
    Rational rhs;
    explicit operator bool() const { return pass; }
};

namespace detail {

// sum_{n=1}^{t} (-1)^n n^k
inline Int alternating_power_prefix(unsigned long t, unsigned k) {
    Int s(0);
    for (unsigned long n = 1; n <= t; ++n) {
        Int p = int_pow(Int(n), k);
        s += (n % 2 == 0) ? p : -p;
    }
    return s;
}

} // namespace detail

/// Exact check of the divisor-count identity
///   sum_{n=1}^m (-1)^n n^k c_m(n)
///     = sigma_k^-(m) + eta(-k)(sigma_0(m) - sigma_0^-(m))
///       - sigma_0(m) (1^k - 2^k + ... + (-1)^(m+1) m^k)
///       - sum_{j=1}^k C(k,j) eta(j-k) sigma_j^-(m).
inline CmIdentityReport cm_identity_check(unsigned long m, unsigned k) {
    if (m > 100000 || k > 8)
        throw std::domain_error("cm_identity_check: envelope is m <= 1e5, k <= 8");
    DivisorProfile prof(m);
    // LHS via divisor segments: c_m(n) = sum_{d|m} [n >= d]
    Int Pm = detail::alternating_power_prefix(m, k);
    Int lhs(0);
    for (auto d : prof.divisors()) lhs += Pm - detail::alternating_power_prefix(d - 1, k);

    Rational rhs(prof.sigma_minus(k));
    rhs += eta_nonpos(k) * Rational(prof.sigma(0) - prof.sigma_minus(0));
    rhs += Rational(prof.sigma(0)) * Rational(Pm); // -sigma_0 * (1^k-2^k+...) = +sigma_0 * Pm
    for (unsigned j = 1; j <= k; ++j)
        rhs -= Rational(binomial(k, j)) * eta_nonpos(k - j) * Rational(prof.sigma_minus(j));

    CmIdentityReport rep;
    rep.lhs = Rational(lhs);
    rep.rhs = rhs;
    rep.pass = (rep.lhs == rep.rhs);
    return rep;
}

/// The displayed k = 0 and k = 1 parity special cases. For odd m the k = 0
/// sum equals minus the divisor count (the source states the magnitude).
inline bool cm_parity_special_cases(unsigned long m) {
    DivisorProfile prof(m);
    Int lhs0(0);
    for (unsigned long n = 1; n <= m; ++n) {
        Int c((long)prof.count_up_to(n));
        lhs0 += (n % 2 == 0) ? c : -c;
    }
    if (m % 2 == 0) {
        Int evens(0);
        for (auto d : prof.divisors())
            if (d % 2 == 0) evens += 1;
        if (lhs0 != evens) return false;
    } else {
        if (lhs0 != -prof.sigma(0)) return false;
    }

    Int lhs1(0);
    for (unsigned long n = 1; n <= m; ++n) {
        Int c = Int(n) * Int((long)prof.count_up_to(n));
        lhs1 += (n % 2 == 0) ? c : -c;
    }
    Rational rhs1;
    if (m % 2 == 0) {
        rhs1 = Rational(prof.sigma_minus(1)) / 2 - Rational(prof.sigma_minus(0)) / 4 +
               Rational(2 * m + 1, 4) * Rational(prof.sigma(0));
    } else {
        rhs1 = -Rational(prof.sigma(1)) / 2 - Rational(m, 2) * Rational(prof.sigma(0));
    }
    return Rational(lhs1) == rhs1;
}

/// Exact check of c_{n-1}(1) + c_{n-2}(2) + ... + c_1(n-1)
///   = sigma_0(1) + ... + sigma_0(n) - n.
inline bool cm_partial_sum_identity_check(unsigned long n) {
    if (n < 2) throw std::domain_error("cm_partial_sum_identity_check: n >= 2");
    Int lhs(0);
    for (unsigned long j = 1; j < n; ++j) lhs += Int(c_m_of_n(n - j, j));
    Int rhs(0);
    for (unsigned long j = 1; j <= n; ++j) rhs += DivisorProfile(j).sigma(0);
    rhs -= Int(n);
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// q-analog identities, verified as exact bivariate truncations
// ---------------------------------------------------------------------------

using QSeries = TruncSeries<Rational>;          // series in q
using BiSeries = TruncSeries<QSeries>;          // series in x with q-series coefficients

namespace qdetail {

inline QSeries qzero(unsigned q_order) { return QSeries(q_order, Rational(0)); }

// q^k / (1 - q^k) = sum_{t>=1} q^(k t)
inline QSeries lambert_frac(unsigned k, unsigned q_order) {
    QSeries s = qzero(q_order);
    for (unsigned long e = k; e <= q_order; e += k) s.coeff((unsigned)e) += 1;
    return s;
}

// q^(2k) / (1 - q^k)^2 = sum_{t>=0} (t+1) q^(k(t+2))
inline QSeries lambert_frac_sq(unsigned k, unsigned q_order) {
    QSeries s = qzero(q_order);
    unsigned long e = 2ul * k;
    for (unsigned long t = 0; e <= q_order; ++t, e += k) s.coeff((unsigned)e) += Rational(Int(t + 1));
    return s;
}

// Theta_n = sum_{j<=n} q^j/(1-q^j); Theta_0 = 0
inline QSeries theta(unsigned n, unsigned q_order) {
    QSeries s = qzero(q_order);
    for (unsigned j = 1; j <= n; ++j) s += lambert_frac(j, q_order);
    return s;
}

} // namespace qdetail

/// Theta_n as a q-series; its q^j coefficient is exactly c_j(n).
inline QSeries theta_q_series(unsigned n, unsigned q_order) {
    return qdetail::theta(n, q_order);
}

/// phi_j = sum_k k^j x^k q^k/(1-q^k) as a bivariate truncation.
inline BiSeries phi_series(unsigned j, unsigned x_order, unsigned q_order) {
    BiSeries s(x_order, qdetail::qzero(q_order));
    for (unsigned k = 1; k <= x_order; ++k)
        s.coeff(k) = ring_scale(qdetail::lambert_frac(k, q_order), Rational(int_pow(Int(k), j)));
    return s;
}

enum class QIdentity { harmonic_q, theta2 };

/// Exact truncated verification of the q-analogs:
///  harmonic_q: sum_{k>=2} k^n x^k q^k/(1-q^k) Theta_{k-1}
///                = 1/2 (phi_n - phi_{n+1} + sum_j C(n,j) phi_j phi_{n-j})
///  theta2:     sum_k Theta_k^2 k^n x^k
///                = 2 kappa_n + psi_n + sum_k C(n,k) Li_{k-n}(x)(2 kappa_k + psi_k)
inline SeriesCheckReport q_identity_check(QIdentity which, unsigned n, unsigned q_order,
                                          unsigned x_order) {
    using namespace qdetail;
    if (q_order > 24 || x_order > 24)
        throw std::domain_error("q_identity_check: orders <= 24");

    if (which == QIdentity::harmonic_q) {
        BiSeries lhs(x_order, qzero(q_order));
        for (unsigned k = 2; k <= x_order; ++k)
            lhs.coeff(k) = ring_scale(lambert_frac(k, q_order) * theta(k - 1, q_order),
                                      Rational(int_pow(Int(k), n)));
        BiSeries rhs = phi_series(n, x_order, q_order) - phi_series(n + 1, x_order, q_order);
        for (unsigned j = 0; j <= n; ++j) {
            BiSeries prod = phi_series(j, x_order, q_order) * phi_series(n - j, x_order, q_order);
            rhs += ring_scale(prod, Rational(binomial(n, j)));
        }
        rhs = ring_scale(rhs, Rational(1, 2));
        return detail::compare_series(lhs, rhs, "harmonic_q n=" + std::to_string(n));
    }

    // theta2
    auto kappa = [&](unsigned j) {
        BiSeries s(x_order, qzero(q_order));
        for (unsigned k = 2; k <= x_order; ++k)
            s.coeff(k) = ring_scale(lambert_frac(k, q_order) * theta(k - 1, q_order),
                                    Rational(int_pow(Int(k), j)));
        return s;
    };
    auto psi = [&](unsigned j) {
        BiSeries s(x_order, qzero(q_order));
        for (unsigned k = 1; k <= x_order; ++k)
            s.coeff(k) = ring_scale(lambert_frac_sq(k, q_order), Rational(int_pow(Int(k), j)));
        return s;
    };
    BiSeries lhs(x_order, qzero(q_order));
    for (unsigned k = 1; k <= x_order; ++k) {
        QSeries th = theta(k, q_order);
        lhs.coeff(k) = ring_scale(th * th, Rational(int_pow(Int(k), n)));
    }
    BiSeries rhs = ring_scale(kappa(n), Rational(2)) + psi(n);
    for (unsigned k = 0; k <= n; ++k) {
        BiSeries li = polylog_series((long)k - (long)n, x_order, qzero(q_order));
        BiSeries bracket = ring_scale(kappa(k), Rational(2)) + psi(k);
        rhs += ring_scale(li * bracket, Rational(binomial(n, k)));
    }
    return detail::compare_series(lhs, rhs, "theta2 n=" + std::to_string(n));
}

/// q -> 1 limit of the harmonic_q identity multiplied by (1-q)^2, exact per
/// x-coefficient: each surviving factor has an elementary limit
/// ((1-q) q^a/(1-q^a) -> 1/a, (1-q) Theta_{k-1} -> H_{k-1}), so the limit
/// identity is a rational-number identity; for n >= 1 it is checked to be
/// exactly the polylog reduction of Hl at index n-1.
inline SeriesCheckReport q_limit_check(unsigned n, unsigned x_order) {
    if (x_order > 16) throw std::domain_error("q_limit_check: x-order <= 16");
    auto ipow = [](unsigned long b, long e) { return detail::int_power_rat(b, e); };

    for (unsigned K = 1; K <= x_order; ++K) {
        // limit of LHS * (1-q)^2 at x^K
        Rational lhs = (K >= 2) ? ipow(K, (long)n - 1) * harmonic_number(K - 1) : Rational(0);
        // limit of RHS * (1-q)^2: phi terms vanish, products survive termwise
        Rational rhs(0);
        for (unsigned j = 0; j <= n; ++j) {
            Rational inner(0);
            for (unsigned long a = 1; a < K; ++a)
                inner += ipow(a, (long)j - 1) * ipow(K - a, (long)n - (long)j - 1);
            rhs += Rational(binomial(n, j)) * inner;
        }
        rhs /= 2;
        if (lhs != rhs)
            return {false, (int)K, "q_limit n=" + std::to_string(n) + ": limit identity fails"};

        if (n >= 1) {
            // the same statement as the Hl_{-(n-1)} polylog reduction:
            //   H_K K^(n-1) = K^(n-2) + sum_k C(n-1,k) [Li_{k-n+1} Li_{1-k}]_K
            Rational hl = harmonic_number(K) * ipow(K, (long)n - 1);
            Rational red = ipow(K, (long)n - 2);
            for (unsigned k = 0; k + 1 <= n; ++k) {
                Rational conv(0);
                for (unsigned long a = 1; a < K; ++a)
                    conv += ipow(a, (long)(n - 1 - k)) * ipow(K - a, (long)k - 1);
                red += Rational(binomial(n - 1, k)) * conv;
            }
            if (hl != red)
                return {false, (int)K,
                        "q_limit n=" + std::to_string(n) + ": polylog reduction fails"};
        }
    }
    return {true, -1, "q_limit n=" + std::to_string(n) + ": ok"};
}

} // namespace hzeta

#endif
