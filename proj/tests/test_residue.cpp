#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pirgb/residue.hpp"
#include "test_util.hpp"

using namespace pirgb;

TEST_CASE("xgcd on the worked examples") {
    Xgcd r = xgcd(2, 3);
    CHECK(r.g == 1);
    CHECK(r.s * 2 + r.t * 3 == 1);

    r = xgcd(0, 5);
    CHECK(r.g == 5);
    CHECK(r.s * 0 + r.t * 5 == 5);

    r = xgcd(12, 18);
    CHECK(r.g == 6);
    CHECK(r.s * 12 + r.t * 18 == 6);
}

TEST_CASE("xgcd convention and errors") {
    Xgcd r = xgcd(7, 7);
    CHECK(r.g == 7);
    CHECK(r.s == 1);
    CHECK(r.t == 0);
    CHECK_THROWS_AS(xgcd(0, 0), std::invalid_argument);
}

TEST_CASE("xgcd Bezout identity on random inputs") {
    testutil::Rng rng(testutil::seed());
    std::uniform_int_distribution<long> d(-1000, 1000);
    for (int i = 0; i < 5000; ++i) {
        mpz_class a = d(rng), b = d(rng);
        if (a == 0 && b == 0) continue;
        Xgcd r = xgcd(a, b);
        CHECK(r.g >= 0);
        CHECK(r.s * a + r.t * b == r.g);
        CHECK(mpz_divisible_p(a.get_mpz_t(), r.g.get_mpz_t()));
        CHECK(mpz_divisible_p(b.get_mpz_t(), r.g.get_mpz_t()));
    }
}

TEST_CASE("annihilator examples") {
    ResidueRing z6((mpz_class(6)));
    CHECK(z6.annihilator(2) == 3);
    CHECK(z6.annihilator(5) == 0);
    ResidueRing z12((mpz_class(12)));
    CHECK(z12.annihilator(4) == 3);
}

TEST_CASE("annihilator generates the annihilator ideal") {
    for (int n = 2; n <= 60; ++n) {
        ResidueRing ring((mpz_class(n)));
        for (int c = 0; c < n; ++c) {
            mpz_class a = ring.annihilator(c);
            CHECK(ring.mul(a, c) == 0);
            // Every x with x*c == 0 is a multiple of the generator.
            mpz_class gen = (a == 0) ? mpz_class(n) : a;
            for (int x = 0; x < n; ++x) {
                if (ring.mul(x, c) == 0)
                    CHECK(mpz_class(x) % gen == 0);
            }
        }
    }
}

TEST_CASE("try_invert examples") {
    ResidueRing z6((mpz_class(6)));
    auto inv = z6.try_invert(5);
    REQUIRE(inv.has_value());
    CHECK(*inv == 5);
    CHECK_FALSE(z6.try_invert(2).has_value());
    ResidueRing z9((mpz_class(9)));
    CHECK_FALSE(z9.try_invert(3).has_value());
    CHECK_THROWS_AS(z6.try_invert(0), std::invalid_argument);
}

TEST_CASE("unit_stabilizer worked examples") {
    // Exhaustive search over the units mod 12 confirms 5 is valid.
    std::vector<mpz_class> valid;
    for (int u = 0; u < 12; ++u) {
        mpz_class g;
        mpz_class uu(u);
        mpz_class n(12);
        mpz_gcd(g.get_mpz_t(), uu.get_mpz_t(), n.get_mpz_t());
        if (g == 1 && (u * 8) % 12 == 4) valid.emplace_back(u);
    }
    mpz_class u = unit_stabilizer(8, 12);
    CHECK(u == 5);
    CHECK(std::find(valid.begin(), valid.end(), u) != valid.end());

    CHECK(unit_stabilizer(5, 6) == 5);
    CHECK(unit_stabilizer(3, 9) == 1);
}

TEST_CASE("unit_stabilizer exhaustive up to 100") {
    for (int n = 2; n <= 100; ++n) {
        mpz_class nn(n);
        for (int c = 0; c < n; ++c) {
            mpz_class u = unit_stabilizer(c, nn);
            mpz_class g, expected;
            mpz_class cc(c);
            mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), nn.get_mpz_t());
            CHECK(g == 1);
            mpz_gcd(expected.get_mpz_t(), cc.get_mpz_t(), nn.get_mpz_t());
            CHECK((u * c - expected) % nn == 0);
        }
    }
}

TEST_CASE("factor_refine_split examples") {
    ModulusSplit s = factor_refine_split(4, 12);
    CHECK(s.kind == ModulusSplit::Kind::coprime_pair);
    CHECK(s.p == 4);
    CHECK(s.q == 3);

    s = factor_refine_split(2, 8);
    CHECK(s.kind == ModulusSplit::Kind::perfect_power);
    CHECK(s.m == 2);
    CHECK(s.k == 3);

    s = factor_refine_split(6, 36);
    CHECK(s.kind == ModulusSplit::Kind::perfect_power);
    CHECK(s.m == 6);
    CHECK(s.k == 2);
}

TEST_CASE("factor_refine_split rejects non-witnesses") {
    CHECK_THROWS_AS(factor_refine_split(5, 12), std::invalid_argument);
    CHECK_THROWS_AS(factor_refine_split(0, 12), std::invalid_argument);
    CHECK_THROWS_AS(factor_refine_split(12, 12), std::invalid_argument);
}

TEST_CASE("factor_refine_split exhaustive reassembly up to 300") {
    for (int n = 2; n <= 300; ++n) {
        mpz_class nn(n);
        for (int a = 2; a < n; ++a) {
            mpz_class g, aa(a);
            mpz_gcd(g.get_mpz_t(), aa.get_mpz_t(), nn.get_mpz_t());
            if (g <= 1 || g >= n) continue;
            ModulusSplit s = factor_refine_split(aa, nn);
            if (s.kind == ModulusSplit::Kind::coprime_pair) {
                CHECK(s.p * s.q == nn);
                CHECK(s.p > 1);
                CHECK(s.q > 1);
                mpz_class c;
                mpz_gcd(c.get_mpz_t(), s.p.get_mpz_t(), s.q.get_mpz_t());
                CHECK(c == 1);
            } else {
                mpz_class mk;
                mpz_pow_ui(mk.get_mpz_t(), s.m.get_mpz_t(), s.k);
                CHECK(mk == nn);
                CHECK(s.k >= 2);
                CHECK(aa % s.m == 0);
            }
        }
    }
}

TEST_CASE("trial_factor examples") {
    Factorization f = trial_factor(30, 10);
    REQUIRE(f.complete);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::pair<mpz_class, unsigned long>{2, 1});
    CHECK(f.factors[1] == std::pair<mpz_class, unsigned long>{3, 1});
    CHECK(f.factors[2] == std::pair<mpz_class, unsigned long>{5, 1});

    f = trial_factor(72, 10);
    REQUIRE(f.complete);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<mpz_class, unsigned long>{2, 3});
    CHECK(f.factors[1] == std::pair<mpz_class, unsigned long>{3, 2});

    mpz_class semiprime = mpz_class(32771) * 32779;
    f = trial_factor(semiprime, 100);
    CHECK_FALSE(f.complete);
    CHECK(f.cofactor == semiprime);

    // The default driver bound resolves it.
    f = trial_factor(semiprime, mpz_class(1) << 20);
    REQUIRE(f.complete);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == 32771);
    CHECK(f.factors[1].first == 32779);
}
