#ifndef HZETA_BERNOULLI_HPP
#define HZETA_BERNOULLI_HPP

#include <mutex>
#include <vector>

#include "hzeta/rational.hpp"

namespace hzeta {

namespace detail {

// Tangent numbers T_1, T_2, ... (1, 2, 16, 272, ...) by the boustrophedon
// triangle: all-integer arithmetic, no rational recurrence involved.
inline std::vector<Int> tangent_numbers(std::size_t count) {
    std::vector<Int> tan;
    tan.reserve(count);
    std::vector<Int> row{Int(1)}; // zigzag row a_0
    std::size_t index = 0;        // zigzag index of row.back()
    while (tan.size() < count) {
        std::vector<Int> next(row.size() + 1);
        next[0] = 0;
        for (std::size_t i = 0; i < row.size(); ++i)
            next[i + 1] = next[i] + row[row.size() - 1 - i];
        row = std::move(next);
        ++index;
        if (index % 2 == 1) tan.push_back(row.back()); // a_1, a_3, a_5, ...
    }
    return tan;
}

struct BernoulliCache {
    std::mutex mu;
    std::vector<Rational> values; // values[n] = B_n
};

inline BernoulliCache& bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}

} // namespace detail

/// Bernoulli number B_n in the convention B_1 = -1/2, i.e. the one for which
/// zeta(1-n) = (-1)^(n-1) B_n / n holds verbatim. Memoized and thread-safe.
inline Rational bernoulli(unsigned n) {
    auto& cache = detail::bernoulli_cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    if (n < cache.values.size()) return cache.values[n];

    std::size_t want = std::max<std::size_t>(n + 1, 16);
    std::size_t pairs = want / 2 + 1;
    auto tan = detail::tangent_numbers(pairs);
    cache.values.assign(want + 1, Rational(0));
    cache.values[0] = 1;
    cache.values[1] = Rational(-1, 2);
    Int four_pow = 4; // 4^m
    for (std::size_t m = 1; 2 * m <= want; ++m) {
        // B_{2m} = (-1)^(m-1) T_m * 2m / (4^m (4^m - 1))
        Rational b(Int(2 * m) * tan[m - 1], four_pow * (four_pow - 1));
        if (m % 2 == 0) b = -b;
        cache.values[2 * m] = b;
        four_pow *= 4;
    }
    return cache.values[n];
}

/// zeta(-k) for k >= 0: zeta(0) = -1/2, zeta(-k) = (-1)^k B_{k+1}/(k+1).
inline Rational zeta_nonpos(unsigned k) {
    Rational b = bernoulli(k + 1);
    Rational v = b / Rational(k + 1);
    return (k % 2 == 0) ? v : -v;
}

/// eta(-k) for k >= 0, from eta(s) = (1 - 2^(1-s)) zeta(s).
inline Rational eta_nonpos(unsigned k) {
    return (Rational(1) - rat_pow(Rational(2), k + 1)) * zeta_nonpos(k);
}

} // namespace hzeta

#endif
