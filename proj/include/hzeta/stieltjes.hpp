#ifndef HZETA_STIELTJES_HPP
#define HZETA_STIELTJES_HPP

#include <cmath>

#include "hzeta/em_tail.hpp"
#include "hzeta/errors.hpp"
#include "hzeta/harmonic.hpp"

namespace hzeta {

/// Stieltjes constant gamma_n from the defining limit
///   gamma_n = lim_N [ sum_{k<=N} log^n k / k - log^(n+1) N / (n+1) ],
/// accelerated with Euler-Maclaurin corrections at the cutoff. gamma_0 is the
/// Euler-Mascheroni constant. Supported for n <= 32.
inline BigFloat stieltjes_gamma(unsigned n, long prec = BigFloat::default_precision) {
    if (n > 32) throw std::domain_error("stieltjes_gamma: supported range is n <= 32");

    for (unsigned long N = 128; N <= (1ul << 22); N *= 4) {
        // The head sum reaches ~ log^(n+1)N/(n+1) while the result is O(1):
        // allow for that cancellation in the working precision.
        double L = std::log((double)N);
        long cancel_bits = (long)((n + 1) * std::log2(L > 2 ? L : 2)) + 8;
        long wprec = prec + 64 + cancel_bits;

        BigFloat target = ldexp2(BigFloat(1L, wprec), -(prec + 16));
        SumResult tail = em_tail_log_over_k(n, N, wprec, target);
        if (!(tail.error_bound < target)) continue;

        BigFloat head(0L, wprec);
        for (unsigned long k = 1; k < N; ++k) {
            BigFloat lk = log(BigFloat((long)k, wprec));
            head += pow_si(lk, (long)n) / (long)k;
        }
        return (head + tail.value).round_to(prec);
    }
    throw precision_unreachable_error(
        "stieltjes_gamma: correction order cap cannot meet the target; "
        "raise the cutoff ceiling or lower the precision");
}

} // namespace hzeta

#endif
