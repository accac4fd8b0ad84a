#ifndef HZETA_TRUNC_SERIES_HPP
#define HZETA_TRUNC_SERIES_HPP

#include <functional>
#include <stdexcept>
#include <vector>

#include "hzeta/rational.hpp"

namespace hzeta {

template <class R> class TruncSeries;

// Ring helpers. Scalar rings build zero/one from int; the TruncSeries
// overloads propagate the truncation order of the sample, which is what lets
// series-over-series (bivariate) code stay generic.
template <class R> R ring_zero_like(const R&) { return R(0); }
template <class R> R ring_one_like(const R&) { return R(1); }
template <class R> R ring_scale(const R& a, const Rational& q) { return a * q; }

template <class R> TruncSeries<R> ring_zero_like(const TruncSeries<R>& sample);
template <class R> TruncSeries<R> ring_one_like(const TruncSeries<R>& sample);
template <class R> TruncSeries<R> ring_scale(const TruncSeries<R>& a, const Rational& q);

/// Formal power series over ring R truncated at a fixed order: coefficients
/// of x^0 ... x^order are stored and arithmetic is exact up to that order.
/// Operations on mismatched orders truncate to the minimum.
template <class R>
class TruncSeries {
public:
    TruncSeries(unsigned order, const R& zero) : c_(order + 1, zero) {}
    explicit TruncSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("TruncSeries: empty coefficients");
    }

    static TruncSeries constant(const R& v, unsigned order) {
        TruncSeries s(order, ring_zero_like(v));
        s.c_[0] = v;
        return s;
    }
    /// Series with coefficient of x^n given by gen(n), n = 0..order.
    static TruncSeries generate(unsigned order, const std::function<R(unsigned)>& gen) {
        std::vector<R> v;
        v.reserve(order + 1);
        for (unsigned n = 0; n <= order; ++n) v.push_back(gen(n));
        return TruncSeries(std::move(v));
    }

    unsigned order() const { return (unsigned)c_.size() - 1; }
    const R& coeff(unsigned i) const { return c_[i]; }
    R& coeff(unsigned i) { return c_[i]; }
    const std::vector<R>& coefficients() const { return c_; }

    TruncSeries truncated(unsigned order) const {
        if (order >= this->order()) return *this;
        return TruncSeries(std::vector<R>(c_.begin(), c_.begin() + order + 1));
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        unsigned ord = std::min(a.order(), b.order());
        std::vector<R> v;
        v.reserve(ord + 1);
        for (unsigned i = 0; i <= ord; ++i) v.push_back(a.c_[i] + b.c_[i]);
        return TruncSeries(std::move(v));
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        unsigned ord = std::min(a.order(), b.order());
        std::vector<R> v;
        v.reserve(ord + 1);
        for (unsigned i = 0; i <= ord; ++i) v.push_back(a.c_[i] - b.c_[i]);
        return TruncSeries(std::move(v));
    }
    friend TruncSeries operator-(const TruncSeries& a) {
        std::vector<R> v;
        v.reserve(a.c_.size());
        for (auto& x : a.c_) v.push_back(ring_zero_like(x) - x);
        return TruncSeries(std::move(v));
    }
    /// Cauchy product, exact up to the common truncation order.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        unsigned ord = std::min(a.order(), b.order());
        R zero = ring_zero_like(a.c_[0]);
        std::vector<R> v(ord + 1, zero);
        for (unsigned i = 0; i <= ord; ++i) {
            if (a.c_[i] == zero) continue;
            for (unsigned j = 0; i + j <= ord; ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return TruncSeries(std::move(v));
    }
    TruncSeries& operator+=(const TruncSeries& b) { *this = *this + b; return *this; }
    TruncSeries& operator-=(const TruncSeries& b) { *this = *this - b; return *this; }
    TruncSeries& operator*=(const TruncSeries& b) { *this = *this * b; return *this; }

    /// Multiply every coefficient by a ring element.
    friend TruncSeries operator*(const TruncSeries& a, const R& s) {
        std::vector<R> v;
        v.reserve(a.c_.size());
        for (auto& x : a.c_) v.push_back(x * s);
        return TruncSeries(std::move(v));
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    /// Composition this(inner); inner must have zero constant term.
    TruncSeries compose(const TruncSeries& inner) const {
        R zero = ring_zero_like(c_[0]);
        if (!(inner.coeff(0) == zero))
            throw std::invalid_argument("compose: inner constant term must be zero");
        unsigned ord = std::min(order(), inner.order());
        TruncSeries acc = constant(c_[std::min<unsigned>(ord, order())], ord);
        // Horner from the top coefficient down
        TruncSeries in = inner.truncated(ord);
        for (unsigned i = ord; i-- > 0;) {
            acc = acc * in + constant(c_[i], ord);
        }
        return acc;
    }

private:
    std::vector<R> c_;
};

template <class R>
TruncSeries<R> ring_zero_like(const TruncSeries<R>& sample) {
    return TruncSeries<R>(sample.order(), ring_zero_like(sample.coeff(0)));
}
template <class R>
TruncSeries<R> ring_one_like(const TruncSeries<R>& sample) {
    return TruncSeries<R>::constant(ring_one_like(sample.coeff(0)), sample.order());
}
template <class R>
TruncSeries<R> ring_scale(const TruncSeries<R>& a, const Rational& q) {
    std::vector<R> v;
    v.reserve(a.order() + 1);
    for (unsigned i = 0; i <= a.order(); ++i) v.push_back(ring_scale(a.coeff(i), q));
    return TruncSeries<R>(std::move(v));
}

/// f^m, exact to f's truncation order; m = 0 gives 1.
template <class R>
TruncSeries<R> series_pow(const TruncSeries<R>& f, unsigned m) {
    TruncSeries<R> acc = ring_one_like(f);
    TruncSeries<R> base = f;
    while (m > 0) {
        if (m & 1) acc = acc * base;
        if (m >>= 1) base = base * base;
    }
    return acc;
}

} // namespace hzeta

#endif
