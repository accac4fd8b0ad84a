#ifndef HZETA_BIGFLOAT_HPP
#define HZETA_BIGFLOAT_HPP

#include <mpfr.h>

#include <cstdio>
#include <string>
#include <utility>

#include "hzeta/rational.hpp"

namespace hzeta {

/// Arbitrary-precision float with an explicit working precision in bits.
/// Every operation rounds correctly (to nearest) at the result precision;
/// binary operations produce the minimum precision of their operands, so a
/// low-precision operand can never masquerade as a high-precision result.
class BigFloat {
public:
    static constexpr long default_precision = 128;

    explicit BigFloat(long prec = default_precision) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(long value, long prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, value, MPFR_RNDN);
    }
    BigFloat(double value, long prec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, value, MPFR_RNDN);
    }
    BigFloat(const Rational& value, long prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, value.backend().data(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.precision());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    long precision() const { return mpfr_get_prec(v_); }

    /// Same value re-rounded at a new precision.
    BigFloat round_to(long prec) const {
        BigFloat r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Decimal string with enough digits to identify the value at its
    /// precision (round-trips through mpfr_set_str).
    std::string str(long digits = 0) const {
        if (digits <= 0) digits = (long)(precision() * 0.30103) + 2;
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%%.%ldRg", digits);
        char* out = nullptr;
        mpfr_asprintf(&out, buf, v_);
        std::string s(out);
        mpfr_free_str(out);
        return s;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::min(a.precision(), b.precision()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::min(a.precision(), b.precision()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::min(a.precision(), b.precision()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::min(a.precision(), b.precision()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a) {
        BigFloat r(a.precision());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigFloat& operator/=(const BigFloat& b) { mpfr_div(v_, v_, b.v_, MPFR_RNDN); return *this; }

    friend BigFloat operator*(const BigFloat& a, long b) {
        BigFloat r(a.precision());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, long b) {
        BigFloat r(a.precision());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator+(const BigFloat& a, long b) {
        BigFloat r(a.precision());
        mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, long b) {
        BigFloat r(a.precision());
        mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

private:
    mpfr_t v_;
};

inline BigFloat abs(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat log(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat exp(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat expm1(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_expm1(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat sqrt(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat pow_si(const BigFloat& x, long k) {
    BigFloat r(x.precision());
    mpfr_pow_si(r.raw(), x.raw(), k, MPFR_RNDN);
    return r;
}
inline BigFloat pow(const BigFloat& x, const BigFloat& y) {
    BigFloat r(std::min(x.precision(), y.precision()));
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}
/// x * 2^k, exact.
inline BigFloat ldexp2(const BigFloat& x, long k) {
    BigFloat r(x.precision());
    mpfr_mul_2si(r.raw(), x.raw(), k, MPFR_RNDN);
    return r;
}

inline BigFloat const_pi(long prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat const_log2(long prec) {
    BigFloat r(prec);
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat const_euler_gamma(long prec) {
    BigFloat r(prec);
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat zeta_ui(unsigned long k, long prec) {
    BigFloat r(prec);
    mpfr_zeta_ui(r.raw(), k, MPFR_RNDN);
    return r;
}
inline BigFloat mpfr_zeta_at(const BigFloat& s) {
    BigFloat r(s.precision());
    mpfr_zeta(r.raw(), s.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat bigfloat_from_string(const std::string& s, long prec) {
    BigFloat r(prec);
    mpfr_set_str(r.raw(), s.c_str(), 10, MPFR_RNDN);
    return r;
}

} // namespace hzeta

#endif
