#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hzeta/bernoulli.hpp"
#include "hzeta/harmonic.hpp"
#include "hzeta/laurent.hpp"
#include "hzeta/number_theory.hpp"
#include "hzeta/series_checks.hpp"
#include "hzeta/trunc_series.hpp"

using namespace hzeta;

namespace {
using RSeries = TruncSeries<Rational>;

RSeries random_series(std::mt19937_64& rng, unsigned order) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    std::vector<Rational> c;
    for (unsigned i = 0; i <= order; ++i) c.push_back(Rational(num(rng), den(rng)));
    return RSeries(std::move(c));
}
} // namespace

TEST_CASE("series_pow basics") {
    // f = z/2 + zeta(-1) z^2, squared, truncated at order 2
    RSeries f(std::vector<Rational>{Rational(0), Rational(1, 2), zeta_nonpos(1)});
    RSeries f2 = series_pow(f, 2);
    CHECK(f2.coeff(0) == 0);
    CHECK(f2.coeff(1) == 0);
    CHECK(f2.coeff(2) == Rational(1, 4));

    RSeries any = [&]{ std::mt19937_64 r(1); return random_series(r, 6); }();
    CHECK(series_pow(any, 0) == ring_one_like(any));
}

TEST_CASE("series_pow reproduces the a-coefficients") {
    // the z^4 coefficient of f^2 is zeta(-1)^2 = 1/144 = a_4(2), and the
    // whole block matches the recurrence for n <= 12, m <= 6
    TruncSeries<GammaPoly> f = residue_genfn(12, false);
    for (unsigned m = 1; m <= 6; ++m) {
        TruncSeries<GammaPoly> fm = series_pow(f, m);
        for (unsigned n = 0; n <= 12; ++n) {
            CAPTURE(m, n);
            CHECK(fm.coeff(n) == GammaPoly(a_coeff(n, m)));
        }
    }
    CHECK(a_coeff(4, 2) == Rational(1, 144));
}

TEST_CASE("Cauchy product ring laws on randomized series") {
    std::mt19937_64 rng(20250809);
    for (int iter = 0; iter < 30; ++iter) {
        RSeries a = random_series(rng, 30), b = random_series(rng, 30), c = random_series(rng, 30);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("composition requires a zero inner constant term") {
    RSeries outer = [&]{ std::mt19937_64 r(7); return random_series(r, 8); }();
    RSeries inner(std::vector<Rational>{Rational(1), Rational(2)});
    CHECK_THROWS_AS(outer.compose(inner), std::invalid_argument);

    // (1 + x)^2 composed with x = 2t: 1 + 4t + 4t^2
    RSeries p(std::vector<Rational>{Rational(1), Rational(2), Rational(1)});
    RSeries t2(std::vector<Rational>{Rational(0), Rational(2), Rational(0)});
    RSeries composed = p.compose(t2);
    CHECK(composed.coeff(0) == 1);
    CHECK(composed.coeff(1) == 4);
    CHECK(composed.coeff(2) == 4);
}

TEST_CASE("composition is a ring homomorphism") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 20; ++iter) {
        RSeries f = random_series(rng, 12), g = random_series(rng, 12);
        RSeries inner = random_series(rng, 12);
        inner.coeff(0) = Rational(0);
        CHECK((f * g).compose(inner) == f.compose(inner) * g.compose(inner));
        CHECK((f + g).compose(inner) == f.compose(inner) + g.compose(inner));
    }
}

TEST_CASE("mismatched orders truncate to the minimum") {
    RSeries a(std::vector<Rational>{Rational(1), Rational(2), Rational(3), Rational(4)});
    RSeries b(std::vector<Rational>{Rational(1), Rational(1)});
    CHECK((a + b).order() == 1);
    CHECK((a * b).order() == 1);
    CHECK((a * b).coeff(1) == Rational(3));
}

TEST_CASE("master relation: spec cases") {
    const unsigned order = 30;
    std::vector<Rational> h{Rational(0)};
    for (unsigned n = 1; n <= order; ++n) h.push_back(harmonic_number(n));
    CHECK(master_relation_check(h, 1, order).pass);

    std::vector<Rational> lin{Rational(0)};
    for (unsigned n = 1; n <= 20; ++n) lin.push_back(Rational(Int(n)));
    CHECK(master_relation_check(lin, 0, 20).pass);

    std::vector<Rational> h2{Rational(0)};
    for (unsigned n = 1; n <= 25; ++n) h2.push_back(harmonic_number(n) * harmonic_number(n));
    CHECK(master_relation_check(h2, 2, 25).pass);

    // a_0 must vanish
    std::vector<Rational> bad{Rational(1), Rational(2)};
    CHECK_FALSE(master_relation_check(bad, 0, 1).pass);
}

TEST_CASE("master relation sweep over growth families") {
    const unsigned order = 30;
    auto sweep = [&](const std::vector<Rational>& a, const char* what) {
        for (unsigned k = 0; k <= 6; ++k) {
            CAPTURE(what, k);
            CHECK(master_relation_check(a, k, order).pass);
        }
    };
    std::vector<Rational> sq{Rational(0)}, pow2{Rational(0)};
    for (unsigned n = 1; n <= order; ++n) {
        sq.push_back(Rational(Int(n) * Int(n)));
        pow2.push_back(Rational(int_pow(Int(2), n)));
    }
    sweep(sq, "n^2");
    sweep(pow2, "2^n");

    // Theta_n truncations: coefficients are q-series, the generic ring path
    std::vector<TruncSeries<Rational>> theta{theta_q_series(0, 8)};
    for (unsigned n = 1; n <= 16; ++n) theta.push_back(theta_q_series(n, 8));
    for (unsigned k = 0; k <= 6; ++k) {
        CAPTURE(k);
        CHECK(master_relation_check(theta, k, 16).pass);
    }
}

TEST_CASE("cauchy relation: spec cases") {
    // c_k = 1 with b the differences of H degenerates to the master theorem
    std::vector<Rational> b{Rational(0)}, ones;
    for (unsigned n = 1; n <= 20; ++n)
        b.push_back(harmonic_number(n) - harmonic_number(n - 1));
    b[0] = harmonic_number(0); // 0
    for (unsigned n = 0; n <= 20; ++n) ones.push_back(Rational(1));
    CHECK(cauchy_relation_check(b, ones, 1, 20).pass);

    std::vector<Rational> zero(16, Rational(0));
    CHECK(cauchy_relation_check(zero, ones, 2, 15).pass); // b = 0 -> both sides vanish

    CHECK(cauchy_relation_check(ones, ones, 2, 15).pass); // a_n = n + 1
}

TEST_CASE("theta_expand layout") {
    // a_n = 1: component k is (+-) Li_{-k}/k! truncations
    std::vector<Rational> ones{Rational(0)};
    for (unsigned n = 1; n <= 5; ++n) ones.push_back(Rational(1));
    auto exp1 = theta_expand(ones, 5, 3);
    REQUIRE(exp1.components.size() == 4);
    for (unsigned n = 1; n <= 5; ++n) {
        CHECK(exp1.components[0].coeff(n) == Rational(1));
        CHECK(exp1.components[1].coeff(n) == Rational(Int(n)));                  // +i theta
        CHECK(exp1.components[2].coeff(n) == -Rational(Int(n) * Int(n), 2));     // -theta^2/2
        CHECK(exp1.components[3].coeff(n) == -Rational(Int(n) * Int(n) * Int(n), 6));
    }
    CHECK_FALSE(exp1.imaginary(0));
    CHECK(exp1.imaginary(1));

    // a_n = H_n: theta^2 component is -(1/2) sum H_n n^2 x^n
    std::vector<Rational> h{Rational(0)};
    for (unsigned n = 1; n <= 8; ++n) h.push_back(harmonic_number(n));
    auto exph = theta_expand(h, 8, 4);
    for (unsigned n = 1; n <= 8; ++n)
        CHECK(exph.components[2].coeff(n) == -harmonic_number(n) * Rational(Int(n) * Int(n), 2));

    // bivariate: a_n = q^n/(1-q^n) reproduces the phi family
    std::vector<TruncSeries<Rational>> lam{TruncSeries<Rational>(10, Rational(0))};
    for (unsigned n = 1; n <= 10; ++n) {
        TruncSeries<Rational> s(10, Rational(0));
        for (unsigned e = n; e <= 10; e += n) s.coeff(e) += 1;
        lam.push_back(s);
    }
    auto expq = theta_expand(lam, 10, 2);
    BiSeries phi2 = phi_series(2, 10, 10);
    for (unsigned n = 1; n <= 10; ++n)
        CHECK(ring_scale(expq.components[2].coeff(n), Rational(-2)) == phi2.coeff(n));
}
