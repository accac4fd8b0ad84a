#ifndef HZETA_RATIONAL_FUNCTION_HPP
#define HZETA_RATIONAL_FUNCTION_HPP

#include <stdexcept>
#include <vector>

#include "hzeta/bigfloat.hpp"
#include "hzeta/rational.hpp"

namespace hzeta {

/// Dense univariate polynomial with rational coefficients (ascending powers).
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c) {
        if (c != 0) coeffs_.push_back(c);
    }
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly x() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

    int degree() const { return (int)coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const Rational& c) {
        if (c == 0) return Poly();
        auto v = a.coeffs_;
        for (auto& x : v) x *= c;
        return Poly(std::move(v));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<Rational> v(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rational((long)i);
        return Poly(std::move(v));
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }
    BigFloat eval(const BigFloat& x) const {
        BigFloat acc(0L, x.precision());
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * x + BigFloat(coeffs_[i], x.precision());
        return acc;
    }

    /// Exact quotient by (x - r); requires r to be a root.
    Poly deflate_root(const Rational& r) const {
        if (eval(r) != 0) throw std::logic_error("deflate_root: not a root");
        std::vector<Rational> q(coeffs_.size() - 1, Rational(0));
        Rational carry(0);
        for (std::size_t i = coeffs_.size(); i-- > 1;) {
            carry = coeffs_[i] + carry * r;
            q[i - 1] = carry;
        }
        return Poly(std::move(q));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

/// Quotient of two rational polynomials. Kept unreduced except for the lazy
/// (x - r) cancellation used when taking limits at removable singularities.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    }
    explicit RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator*(const RationalFunction& a, const Rational& c) {
        return {a.num_ * c, a.den_};
    }

    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d == 0) throw std::domain_error("RationalFunction: pole at evaluation point");
        return num_.eval(x) / d;
    }
    BigFloat eval(const BigFloat& x) const { return num_.eval(x) / den_.eval(x); }

    /// Limit x -> r assuming it exists: cancels matching (x - r) factors.
    Rational limit_at(const Rational& r) const {
        Poly n = num_, d = den_;
        while (d.eval(r) == 0) {
            if (n.eval(r) != 0) throw std::domain_error("limit_at: genuine pole");
            n = n.deflate_root(r);
            d = d.deflate_root(r);
        }
        return n.eval(r) / d.eval(r);
    }

private:
    Poly num_;
    Poly den_;
};

/// Li_{-n}(x) = sum_{k>=1} k^n x^k as a rational function: the numerator is
/// x times the Eulerian polynomial of order n, the denominator (1-x)^(n+1).
/// Built with the ladder p_{n+1} = x ((1-x) p_n' + (n+1) p_n).
inline RationalFunction polylog_neg(unsigned n) {
    Poly p = Poly::x();
    Poly one_minus_x(std::vector<Rational>{Rational(1), Rational(-1)});
    for (unsigned k = 0; k < n; ++k) {
        p = Poly::x() * (one_minus_x * p.derivative() + p * Rational((long)k + 1));
    }
    Poly den(Rational(1));
    for (unsigned k = 0; k <= n; ++k) den = den * one_minus_x;
    return {p, den};
}

} // namespace hzeta

#endif
