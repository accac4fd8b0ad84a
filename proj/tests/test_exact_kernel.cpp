#include <catch2/catch_amalgamated.hpp>

#include <atomic>
#include <random>
#include <thread>

#include "hzeta/bernoulli.hpp"
#include "hzeta/const_combo.hpp"
#include "hzeta/gamma_poly.hpp"
#include "hzeta/rational_function.hpp"

using namespace hzeta;

namespace {

// Independent oracle: the defining recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0.
std::vector<Rational> bernoulli_by_recurrence(unsigned n_max) {
    std::vector<Rational> B(n_max + 1);
    B[0] = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
        Rational s(0);
        for (unsigned k = 0; k < n; ++k) s += Rational(binomial(n + 1, k)) * B[k];
        B[n] = -s / Rational(Int(n + 1));
    }
    return B;
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    return Rational(num(rng), den(rng));
}

} // namespace

TEST_CASE("bernoulli numbers match the defining recurrence up to 200") {
    auto oracle = bernoulli_by_recurrence(200);
    for (unsigned n = 0; n <= 200; ++n) {
        CAPTURE(n);
        CHECK(bernoulli(n) == oracle[n]);
    }
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("zeta and eta at non-positive integers") {
    CHECK(zeta_nonpos(0) == Rational(-1, 2));
    CHECK(zeta_nonpos(1) == Rational(-1, 12));
    CHECK(zeta_nonpos(3) == Rational(1, 120));
    for (unsigned k = 1; k <= 20; ++k) CHECK(zeta_nonpos(2 * k) == 0); // trivial zeros

    CHECK(eta_nonpos(0) == Rational(1, 2));
    CHECK(eta_nonpos(1) == Rational(1, 4));
    CHECK(eta_nonpos(2) == 0);
    // consistency with zeta(1-n) = (-1)^(n-1) B_n / n
    for (unsigned n = 1; n <= 30; ++n) {
        Rational expect = bernoulli(n) / Rational(Int(n));
        if (n % 2 == 0) expect = -expect;
        CHECK(zeta_nonpos(n - 1) == expect);
    }
}

TEST_CASE("negative-order polylogarithms as rational functions") {
    auto li0 = polylog_neg(0);
    CHECK(li0.numerator() == Poly::x());
    CHECK(li0.eval(Rational(1, 3)) == Rational(1, 2));

    auto li1 = polylog_neg(1);
    CHECK(li1.numerator() == Poly::x());
    CHECK(li1.denominator().degree() == 2);

    auto li2 = polylog_neg(2);
    CHECK(li2.numerator() == Poly(std::vector<Rational>{Rational(0), Rational(1), Rational(1)}));
    CHECK(li2.eval(Rational(1, 3)) == Rational(3, 2));

    // partial sums against the closed form at x = 1/2, geometric tail bound
    for (unsigned n = 0; n <= 10; ++n) {
        Rational x(1, 2);
        Rational partial(0);
        Rational xp(1);
        for (unsigned k = 1; k <= 200; ++k) {
            xp *= x;
            partial += Rational(int_pow(Int(k), n)) * xp;
        }
        Rational closed = polylog_neg(n).eval(x);
        Rational tailbound = Rational(int_pow(Int(201), n)) * rat_pow(x, 199);
        CAPTURE(n);
        Rational diff = closed - partial;
        if (diff < 0) diff = -diff;
        CHECK(diff <= tailbound);
    }

    CHECK_THROWS_AS(polylog_neg(1).eval(Rational(1)), std::domain_error);

    // numerator shape: zero constant term, degree max(1, n); denominator
    // (1-x)^(n+1)
    Poly one_minus_x(std::vector<Rational>{Rational(1), Rational(-1)});
    for (unsigned n = 0; n <= 10; ++n) {
        auto li = polylog_neg(n);
        CAPTURE(n);
        CHECK(li.numerator().coeff(0) == 0);
        CHECK(li.numerator().degree() <= (int)std::max(1u, n));
        Poly den(Rational(1));
        for (unsigned k = 0; k <= n; ++k) den = den * one_minus_x;
        CHECK(li.denominator() == den);
    }
}

TEST_CASE("GammaPoly ring axioms on randomized inputs") {
    std::mt19937_64 rng(20240817);
    auto random_poly = [&](int max_deg) {
        std::vector<Rational> c;
        std::uniform_int_distribution<int> deg(0, max_deg);
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) c.push_back(random_rational(rng));
        return GammaPoly(std::move(c));
    };
    for (int iter = 0; iter < 200; ++iter) {
        GammaPoly a = random_poly(5), b = random_poly(5), c = random_poly(5);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == GammaPoly());
    }
    CHECK(GammaPoly().degree() == -1);
    GammaPoly g = GammaPoly::monomial(Rational(3, 2), 2);
    CHECK(g.degree() == 2);
    CHECK((g * Rational(0)).degree() == -1);
}

TEST_CASE("ConstCombo ring axioms and monomial products") {
    std::mt19937_64 rng(77);
    const std::vector<std::string> atoms{"log2", "pi2", "zeta3", "gammaE"};
    auto random_combo = [&]() {
        ConstCombo c;
        std::uniform_int_distribution<int> nterms(0, 4);
        std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
        std::uniform_int_distribution<int> msize(0, 3);
        int t = nterms(rng);
        for (int i = 0; i < t; ++i) {
            ConstMonomial m;
            int s = msize(rng);
            for (int j = 0; j < s; ++j) m.push_back(atoms[pick(rng)]);
            std::sort(m.begin(), m.end());
            c += ConstCombo::monomial(m, random_rational(rng));
        }
        return c;
    };
    for (int iter = 0; iter < 200; ++iter) {
        ConstCombo a = random_combo(), b = random_combo(), c = random_combo();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
    }
    // product of monomials concatenates multisets
    ConstCombo x = ConstCombo::atom("log2");
    ConstCombo sq = x * x;
    REQUIRE(sq.terms().size() == 1);
    CHECK(monomial_key(sq.terms().begin()->first) == "log2*log2");
}

TEST_CASE("ConstCombo numeric evaluation") {
    // pi^2/24 - log^2(2)/2
    ConstCombo c = ConstCombo::atom("pi2", Rational(1, 24)) -
                   ConstCombo::monomial({"log2", "log2"}, Rational(1, 2));
    BigFloat v = c.eval(64);
    CHECK(std::abs(v.to_double() - 0.1710070) < 1e-6);

    CHECK(ConstCombo().eval(128).is_zero());

    ConstCombo h = ConstCombo::atom("log2", Rational(1, 2));
    CHECK(std::abs(h.eval(64).to_double() - 0.3465735902799726) < 1e-15);

    // monotone in precision: doubling precision moves the value by less than
    // the coarse precision's error budget
    ConstCombo mix = ConstCombo::atom("zeta3", Rational(7, 5)) +
                     ConstCombo::monomial({"pi2", "gammaE"}, Rational(-2, 3)) +
                     ConstCombo(Rational(22, 7));
    for (long p = 64; p <= 512; p *= 2) {
        BigFloat lo = mix.eval(p);
        BigFloat hi = mix.eval(2 * p);
        BigFloat diff = abs(lo - hi.round_to(p + 8));
        BigFloat budget = ldexp2(abs(lo) + BigFloat(1L, p), -(p - 4));
        CAPTURE(p);
        CHECK(diff <= budget);
    }

    ConstCombo bad = ConstCombo::atom("nosuchatom");
    CHECK_THROWS_AS(bad.eval(64), unknown_atom_error);
}

TEST_CASE("zeta_combo canonical basis") {
    // zeta(2) = pi^2/6, zeta(4) = pi^4/90, zeta(6) = pi^6/945
    CHECK(zeta_combo(2) == ConstCombo::atom("pi2", Rational(1, 6)));
    CHECK(zeta_combo(4) == ConstCombo::monomial({"pi2", "pi2"}, Rational(1, 90)));
    CHECK(zeta_combo(6) == ConstCombo::monomial({"pi2", "pi2", "pi2"}, Rational(1, 945)));
    CHECK(zeta_combo(3) == ConstCombo::atom("zeta3"));
    // eta(2) = pi^2/12, eta(4) = 7 pi^4/720, eta(1) = log 2
    CHECK(eta_combo(2) == ConstCombo::atom("pi2", Rational(1, 12)));
    CHECK(eta_combo(4) == ConstCombo::monomial({"pi2", "pi2"}, Rational(7, 720)));
    CHECK(eta_combo(1) == ConstCombo::atom("log2"));
    // numeric agreement with mpfr zeta
    for (unsigned k = 2; k <= 8; ++k) {
        BigFloat ours = zeta_combo(k).eval(128);
        BigFloat ref = zeta_ui(k, 128);
        CHECK(abs(ours - ref) < ldexp2(BigFloat(1L, 128), -120));
    }
}

TEST_CASE("rational serialization round-trip") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        Rational q = random_rational(rng);
        CHECK(rat_from_string(rat_to_string(q)) == q);
    }
    CHECK(rat_to_string(Rational(-3, 4)) == "-3/4");
    CHECK(rat_to_string(Rational(5)) == "5");
    CHECK(rat_from_string("5/16") == Rational(5, 16));
    CHECK_THROWS_AS(rat_from_string("x/3"), std::invalid_argument);
}

TEST_CASE("exact caches are safe under concurrent access") {
    std::vector<std::thread> threads;
    std::atomic<bool> ok{true};
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&ok, t] {
            for (unsigned n = 0; n < 80; ++n) {
                if (bernoulli(n + (unsigned)t % 3) != bernoulli(n + (unsigned)t % 3)) ok = false;
            }
        });
    }
    for (auto& th : threads) th.join();
    CHECK(ok.load());
}
