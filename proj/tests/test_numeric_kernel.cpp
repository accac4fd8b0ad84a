#include <catch2/catch_amalgamated.hpp>

#include "hzeta/em_tail.hpp"
#include "hzeta/euler_transform.hpp"
#include "hzeta/harmonic.hpp"
#include "hzeta/stieltjes.hpp"
#include "hzeta/zeta_numeric.hpp"

using namespace hzeta;

namespace {
BigFloat tol(long prec, int bits_off) { return ldexp2(BigFloat(1L, prec), -(prec - bits_off)); }
} // namespace

TEST_CASE("BigFloat basics") {
    BigFloat a(Rational(1, 3), 128);
    BigFloat b(Rational(1, 6), 64);
    CHECK((a + b).precision() == 64); // precision propagates as the minimum
    CHECK(abs(a + b - BigFloat(Rational(1, 2), 64)) < tol(64, 4));
    CHECK(BigFloat(3L, 64).str(4).substr(0, 1) == "3");
    BigFloat half = bigfloat_from_string("0.5", 64);
    CHECK(half == BigFloat(Rational(1, 2), 64));
}

TEST_CASE("euler transform sums log 2 in few terms") {
    long prec = 128;
    BigFloat target = ldexp2(BigFloat(1L, prec), -60); // ~1e-18 < 1e-15 asked
    auto term = [&](long k) {
        BigFloat t(Rational(1, Int(k)), prec);
        return (k % 2 == 0) ? -t : t;
    };
    EulerTransformOptions opts;
    opts.initial_terms = 60;
    SumResult r = euler_transform_sum(term, target, prec, opts);
    CHECK(r.terms_used <= 60);
    CHECK(abs(r.value - const_log2(prec)) < ldexp2(BigFloat(1L, prec), -50));
}

TEST_CASE("euler transform of the zero series is exactly zero") {
    auto term = [](long) { return BigFloat(0L, 64); };
    SumResult r = euler_transform_sum(term, ldexp2(BigFloat(1L, 64), -40), 64);
    CHECK(r.value.is_zero());
    CHECK(r.error_bound.is_zero());
}

TEST_CASE("euler transform assigns 1/2 log 2 to the Abel sum of (-1)^(n+1) H_n") {
    long prec = 128;
    std::vector<BigFloat> H{BigFloat(0L, prec)};
    for (long n = 1; n <= 5000; ++n) H.push_back(H.back() + BigFloat(1L, prec) / n);
    auto term = [&](long n) { return (n % 2 == 1) ? H[n] : -H[n]; };
    SumResult r = euler_transform_sum(term, ldexp2(BigFloat(1L, prec), -80), prec);
    CHECK(abs(r.value - ldexp2(const_log2(prec), -1)) < ldexp2(BigFloat(1L, prec), -70));
}

TEST_CASE("euler transform agrees with direct partial summation on a convergent series") {
    long prec = 96;
    // sum (-1)^(k+1) / k^2 = eta(2)
    auto term = [&](long k) {
        BigFloat t(Rational(1, Int(k) * Int(k)), prec);
        return (k % 2 == 0) ? -t : t;
    };
    SumResult acc = euler_transform_sum(term, ldexp2(BigFloat(1L, prec), -70), prec);
    BigFloat direct(0L, prec);
    long N = 200000;
    for (long k = N; k >= 1; --k) direct += term(k);
    BigFloat direct_err(Rational(1, Int(N) * Int(N)), prec);
    CHECK(abs(acc.value - direct) < acc.error_bound + direct_err);
}

TEST_CASE("harmonic numbers: exact values and telescoping") {
    CHECK(harmonic_number(1) == Rational(1));
    CHECK(harmonic_number(4) == Rational(25, 12));
    CHECK(harmonic_number(6) == Rational(49, 20));
    CHECK(harmonic_number(10) == Rational(7381, 2520));
    for (unsigned n = 2; n <= 300; ++n)
        CHECK(harmonic_number(n) - harmonic_number(n - 1) == Rational(1, Int(n)));
}

TEST_CASE("harmonic asymptotic expansion") {
    long prec = 128;
    // at order 2 the first omitted term is B_6/(6 n^6) ~ 4e-9; order 3 is
    // what actually clears 1e-9 at n = 10
    BigFloat h10 = harmonic_asymptotic(BigFloat(10L, prec), 2);
    BigFloat exact10(harmonic_number(10), prec);
    CHECK(abs(h10 - exact10) < BigFloat(4.3e-9, prec));
    BigFloat h10b = harmonic_asymptotic(BigFloat(10L, prec), 3);
    CHECK(abs(h10b - exact10) < BigFloat(1e-9, prec));

    BigFloat h2 = harmonic_asymptotic(BigFloat(2L, prec), 0);
    BigFloat expect2 = const_log2(prec) + const_euler_gamma(prec) + BigFloat(Rational(1, 4), prec);
    CHECK(h2 == expect2);

    BigFloat h100 = harmonic_asymptotic(BigFloat(100L, prec), 3);
    BigFloat exact100(harmonic_number(100), prec);
    CHECK(abs(h100 - exact100) < BigFloat(1e-16, prec));

    // remainder is bounded by the first omitted term
    for (unsigned long n : {4ul, 10ul, 37ul}) {
        for (int order = 0; order <= 4; ++order) {
            BigFloat nn((long)n, prec);
            BigFloat err = abs(harmonic_asymptotic(nn, order) - BigFloat(harmonic_number(n), prec));
            CHECK(err <= harmonic_asymptotic_remainder_bound(nn, order));
        }
    }
}

TEST_CASE("harmonic asymptotic error dips then grows with the order") {
    long prec = 256;
    unsigned long n = 3;
    BigFloat nn((long)n, prec);
    BigFloat exact(harmonic_number(n), prec);
    std::vector<double> errs;
    for (int order = 0; order <= 14; ++order)
        errs.push_back(abs(harmonic_asymptotic(nn, order) - exact).to_double());
    auto minpos = std::min_element(errs.begin(), errs.end()) - errs.begin();
    CHECK(minpos > 0);
    CHECK(minpos < 14); // interior minimum: decreases, then grows again
    CHECK(errs.back() > errs[minpos]);

    // the optimal truncation point moves right as n grows
    auto min_order = [&](unsigned long m) {
        BigFloat mm((long)m, prec);
        BigFloat ex(harmonic_number(m), prec);
        std::vector<double> e;
        for (int order = 0; order <= 40; ++order)
            e.push_back(abs(harmonic_asymptotic(mm, order) - ex).to_double());
        return std::min_element(e.begin(), e.end()) - e.begin();
    };
    CHECK(min_order(3) <= min_order(6));
    CHECK(min_order(6) <= min_order(12));
}

TEST_CASE("em tail evaluates zeta-like tails") {
    long prec = 160;
    BigFloat target = ldexp2(BigFloat(1L, prec), -130);
    // sum_{k>=N} 1/k^2 = zeta(2) - sum_{k<N}
    unsigned long N = 50;
    SumResult t = em_tail_convergent(0, BigFloat(2L, prec), N, target);
    REQUIRE(t.rigorous);
    BigFloat head(0L, prec);
    for (unsigned long k = 1; k < N; ++k) head += BigFloat(Rational(1, Int(k) * Int(k)), prec);
    CHECK(abs(head + t.value - zeta_ui(2, prec)) < ldexp2(BigFloat(1L, prec), -120));

    // sum_{k>=N} log k / k^3 = -zeta'(3) - head
    SumResult t2 = em_tail_convergent(1, BigFloat(3L, prec), N, target);
    BigFloat head2(0L, prec);
    for (unsigned long k = 2; k < N; ++k)
        head2 += log(BigFloat((long)k, prec)) / BigFloat(Rational(Int(k) * Int(k) * Int(k)), prec);
    BigFloat zp3 = zeta_with_derivs(BigFloat(3L, prec), prec, 1).z1;
    CHECK(abs(head2 + t2.value + zp3) < ldexp2(BigFloat(1L, prec), -100));
}

TEST_CASE("stieltjes constants") {
    long prec = 128;
    BigFloat g0 = stieltjes_gamma(0, prec);
    CHECK(abs(g0 - const_euler_gamma(prec)) < tol(prec, 16));

    BigFloat g1 = stieltjes_gamma(1, prec);
    BigFloat g1_ref = bigfloat_from_string("-0.0728158454836767248605863758749013191377", prec);
    CHECK(abs(g1 - g1_ref) < BigFloat(1e-38, prec));

    BigFloat g2 = stieltjes_gamma(2, prec);
    BigFloat g2_ref = bigfloat_from_string("-0.0096903631928723184845303860352125293590", prec);
    CHECK(abs(g2 - g2_ref) < BigFloat(1e-38, prec));
}

TEST_CASE("stieltjes constants reject out-of-range orders") {
    CHECK_THROWS_AS(stieltjes_gamma(33, 64), std::domain_error);
}

TEST_CASE("stieltjes constants are cutoff-stable") {
    // doubling the requested precision (hence internal cutoffs) moves the
    // value by less than the coarse error budget
    for (unsigned n : {0u, 1u, 3u, 6u}) {
        BigFloat lo = stieltjes_gamma(n, 96);
        BigFloat hi = stieltjes_gamma(n, 192);
        CAPTURE(n);
        CHECK(abs(lo - hi.round_to(104)) < tol(96, 12));
    }
}

TEST_CASE("eta and zeta numerics through the alternating route") {
    long prec = 128;
    CHECK(abs(eta_at(BigFloat(1L, prec), prec) - const_log2(prec)) < tol(prec, 16));

    // zeta and zeta' against mpfr references
    ZetaDerivs z = zeta_with_derivs(BigFloat(3L, prec), prec, 0);
    CHECK(abs(z.z0 - zeta_ui(3, prec)) < tol(prec, 16));

    ZetaDerivs z0 = zeta_with_derivs(BigFloat(0L, prec), prec, 1);
    CHECK(abs(z0.z0 - BigFloat(Rational(-1, 2), prec)) < tol(prec, 16));
    // zeta'(0) = -log(2 pi)/2
    BigFloat ref = -(log(const_pi(prec) * 2L) / 2L);
    CHECK(abs(z0.z1 - ref) < tol(prec, 16));

    // mpfr cross-check on a generic point
    BigFloat s(Rational(7, 2), prec);
    CHECK(abs(zeta_with_derivs(s, prec, 0).z0 - mpfr_zeta_at(s)) < tol(prec, 16));
}
