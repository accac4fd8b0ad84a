#ifndef HZETA_EULER_TRANSFORM_HPP
#define HZETA_EULER_TRANSFORM_HPP

#include <functional>
#include <vector>

#include "hzeta/bigfloat.hpp"
#include "hzeta/errors.hpp"

namespace hzeta {

/// Result of an accelerated or tail-corrected summation.
struct SumResult {
    BigFloat value;
    BigFloat error_bound;
    bool rigorous = false; // true: proven tail estimate; false: last-term heuristic
    long terms_used = 0;
};

struct EulerTransformOptions {
    long max_terms = 4096;  // cap on table size across doubling rounds
    long stall_limit = 24;  // consecutive growing transformed terms tolerated
    long initial_terms = 64;
};

/// Euler-transform summation of sum_{k>=1} term(k), where term(k) carries its
/// own alternating sign. Converges to the ordinary sum for convergent
/// alternating series and to the Abel value for the divergent alternating
/// series in scope (coefficients of polynomial-log growth).
///
/// With a_j = (-1)^j term(j+1) the transformed series is
///   sum_l (-1)^l Delta^l a_0 / 2^(l+1),
/// cut where the omitted-term envelope is smallest; the reported bound is the
/// magnitude of the first omitted terms (heuristic, flagged as such). The
/// difference table runs with enough guard bits that its cancellation cannot
/// eat into the reported result.
inline SumResult euler_transform_sum(const std::function<BigFloat(long)>& term,
                                     const BigFloat& target_error,
                                     long prec = BigFloat::default_precision,
                                     const EulerTransformOptions& opts = {}) {
    BigFloat best_value(prec), best_err(prec);
    bool have_best = false;

    for (long K = opts.initial_terms; K <= opts.max_terms; K *= 2) {
        long wprec = prec + K / 2 + 64;
        std::vector<BigFloat> d;
        d.reserve(K);
        for (long j = 0; j < K; ++j) {
            BigFloat a = term(j + 1).round_to(wprec);
            if (j % 2 == 1) a = -a;
            d.push_back(std::move(a));
        }

        // transformed terms t_l and their partial sums
        std::vector<BigFloat> t, prefix;
        t.reserve(K);
        prefix.reserve(K);
        BigFloat sum(0L, wprec);
        BigFloat neg_half(Rational(-1, 2), wprec);
        BigFloat weight(Rational(1, 2), wprec); // (-1)^l / 2^(l+1)
        BigFloat prev_at(wprec);
        long stall = 0;
        for (long level = 0; level < K; ++level) {
            BigFloat tl = d[0] * weight;
            sum += tl;
            t.push_back(tl);
            prefix.push_back(sum);
            BigFloat at = abs(tl);
            if (level > 0 && at >= prev_at) {
                if (level > 8 && ++stall > opts.stall_limit) break;
            } else {
                stall = 0;
            }
            prev_at = at;
            if (level + 1 < K) {
                for (long i = 0; i + level + 1 < K; ++i) d[i] = d[i + 1] - d[i];
                weight = weight * neg_half;
            }
        }

        // pick the cut with the smallest omitted-term envelope
        long cut = -1;
        BigFloat cut_err(wprec);
        for (long L = 0; L + 1 < (long)t.size(); ++L) {
            BigFloat e = abs(t[L + 1]);
            if (L + 2 < (long)t.size()) {
                BigFloat e2 = abs(t[L + 2]);
                if (e2 > e) e = e2;
            }
            if (cut < 0 || e < cut_err) {
                cut = L;
                cut_err = e;
            }
        }
        if (cut < 0) { // degenerate single-term table
            cut = 0;
            cut_err = abs(t[0]);
        }

        SumResult r;
        r.value = prefix[cut].round_to(prec);
        r.error_bound = (cut_err * 2L).round_to(prec);
        r.rigorous = false;
        r.terms_used = K;
        if (r.error_bound <= target_error) return r;
        if (!have_best || r.error_bound < best_err) {
            best_value = r.value;
            best_err = r.error_bound;
            have_best = true;
        }
    }
    if (!have_best || best_err.is_nan())
        throw nonconvergence_error("euler_transform_sum: transformed tail failed to decrease");
    throw nonconvergence_error(
        "euler_transform_sum: target " + target_error.str(3) +
        " not reached; best bound " + best_err.str(3));
}

} // namespace hzeta

#endif
