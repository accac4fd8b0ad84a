#ifndef HZETA_GAMMA_POLY_HPP
#define HZETA_GAMMA_POLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "hzeta/bigfloat.hpp"
#include "hzeta/rational.hpp"

namespace hzeta {

/// Polynomial in the Euler-Mascheroni symbol gamma with exact rational
/// coefficients; coefficient i multiplies gamma^i. The value ring of residues
/// and Laurent coefficients. Trailing zeros are trimmed; the zero polynomial
/// has degree -1.
class GammaPoly {
public:
    GammaPoly() = default;
    GammaPoly(int c) { // constant polynomial
        if (c != 0) coeffs_.push_back(Rational(c));
    }
    explicit GammaPoly(const Rational& c) {
        if (c != 0) coeffs_.push_back(c);
    }
    explicit GammaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    GammaPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    /// c * gamma^k
    static GammaPoly monomial(const Rational& c, unsigned k) {
        if (c == 0) return GammaPoly();
        std::vector<Rational> v(k + 1, Rational(0));
        v[k] = c;
        return GammaPoly(std::move(v));
    }

    int degree() const { return (int)coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coeff(unsigned i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }

    friend GammaPoly operator+(const GammaPoly& a, const GammaPoly& b) {
        std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return GammaPoly(std::move(v));
    }
    friend GammaPoly operator-(const GammaPoly& a, const GammaPoly& b) {
        std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
        return GammaPoly(std::move(v));
    }
    friend GammaPoly operator-(const GammaPoly& a) { return GammaPoly() - a; }
    friend GammaPoly operator*(const GammaPoly& a, const GammaPoly& b) {
        if (a.is_zero() || b.is_zero()) return GammaPoly();
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return GammaPoly(std::move(v));
    }
    friend GammaPoly operator*(const GammaPoly& a, const Rational& c) {
        if (c == 0) return GammaPoly();
        std::vector<Rational> v = a.coeffs_;
        for (auto& x : v) x *= c;
        return GammaPoly(std::move(v));
    }
    friend GammaPoly operator*(const Rational& c, const GammaPoly& a) { return a * c; }
    GammaPoly& operator+=(const GammaPoly& b) { *this = *this + b; return *this; }
    GammaPoly& operator-=(const GammaPoly& b) { *this = *this - b; return *this; }
    GammaPoly& operator*=(const GammaPoly& b) { *this = *this * b; return *this; }

    friend bool operator==(const GammaPoly& a, const GammaPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const GammaPoly& a, const GammaPoly& b) { return !(a == b); }

    BigFloat eval(const BigFloat& gamma_value) const {
        BigFloat acc(0L, gamma_value.precision());
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * gamma_value + BigFloat(coeffs_[i], gamma_value.precision());
        }
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!out.empty()) out += " + ";
            out += rat_to_string(coeffs_[i]);
            if (i == 1) out += "*g";
            else if (i > 1) out += "*g^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

} // namespace hzeta

#endif
