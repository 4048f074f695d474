#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pirgb/pairs.hpp"
#include "test_util.hpp"

using namespace pirgb;
using testutil::pp;

namespace {
const std::vector<std::string> X = {"x"};
}

TEST_CASE("s-polynomials") {
    ResidueRing z30((mpz_class(30)));
    CHECK(s_polynomial(pp("2*x", X, z30), pp("3*x", X, z30)).is_zero());

    ResidueRing z6((mpz_class(6)));
    CHECK(s_polynomial(pp("x + 1", X, z6), pp("x + 2", X, z6)) ==
          pp("5", X, z6));

    ResidueRing z8((mpz_class(8)));
    CHECK(s_polynomial(pp("2*x^2", X, z8), pp("4*x", X, z8)).is_zero());
}

TEST_CASE("gcd-polynomials") {
    ResidueRing z30((mpz_class(30)));
    CHECK(gcd_polynomial(pp("2*x", X, z30), pp("3*x", X, z30)) ==
          pp("x", X, z30));

    ResidueRing z6((mpz_class(6)));
    Polynomial f = pp("2*x + 3", X, z6);  // lead coefficient divides 6
    CHECK(gcd_polynomial(f, f) == f);

    ResidueRing z12((mpz_class(12)));
    CHECK(gcd_polynomial(pp("4*x", X, z12), pp("6*x^2", X, z12)) ==
          pp("2*x^2", X, z12));
}

TEST_CASE("annihilator polynomials") {
    ResidueRing z6((mpz_class(6)));
    CHECK(ann_polynomial(pp("3*x + 1", X, z6)) == pp("2", X, z6));
    CHECK(ann_polynomial(pp("5*x + 1", X, z6)).is_zero());
    ResidueRing z4((mpz_class(4)));
    CHECK(ann_polynomial(pp("2*x^2 + 3*x", X, z4)) == pp("2*x", X, z4));
}

TEST_CASE("select_next ordering") {
    CriticalQueue q;
    q.push({CriticalItem::Kind::spoly, 1, 2, 3});
    q.push({CriticalItem::Kind::gpoly, 1, 2, 3});
    CriticalItem it = q.select_next();
    CHECK(it.kind == CriticalItem::Kind::gpoly);

    CriticalQueue q2;
    q2.push({CriticalItem::Kind::spoly, 1, 2, 2});
    q2.push({CriticalItem::Kind::spoly, 1, 3, 5});
    it = q2.select_next();
    CHECK(it.i == 1);
    CHECK(it.j == 2);

    CriticalQueue q3;
    q3.push({CriticalItem::Kind::apoly, 4, 4, 7});
    it = q3.select_next();
    CHECK(it.kind == CriticalItem::Kind::apoly);
    CHECK(it.i == 4);
    CHECK_THROWS_AS(q3.select_next(), std::invalid_argument);
}

TEST_CASE("structural properties on random pairs") {
    testutil::Rng rng(testutil::seed());
    for (int n : {4, 6, 8, 30}) {
        ResidueRing ring((mpz_class(n)));
        const mpz_class nn(n);
        for (int i = 0; i < 2500; ++i) {
            Polynomial f = testutil::random_nonzero_poly(
                rng, ring, MonomialOrder::degrevlex, 2, 3, 3);
            Polynomial g = testutil::random_nonzero_poly(
                rng, ring, MonomialOrder::degrevlex, 2, 3, 3);
            Monomial l = lcm(f.lead_monomial(), g.lead_monomial());

            Polynomial s = s_polynomial(f, g);
            if (!s.is_zero())
                CHECK(compare(MonomialOrder::degrevlex, s.lead_monomial(), l) ==
                      std::strong_ordering::less);

            Polynomial gc = gcd_polynomial(f, g);
            mpz_class g3;
            mpz_gcd(g3.get_mpz_t(), f.lead_coeff().get_mpz_t(),
                    g.lead_coeff().get_mpz_t());
            mpz_gcd(g3.get_mpz_t(), g3.get_mpz_t(), nn.get_mpz_t());
            REQUIRE_FALSE(gc.is_zero());
            CHECK(gc.lead_coeff() == g3 % nn);
            CHECK(gc.lead_monomial() == l);

            Polynomial a = ann_polynomial(f);
            if (!a.is_zero())
                CHECK(compare(MonomialOrder::degrevlex, a.lead_monomial(),
                              f.lead_monomial()) == std::strong_ordering::less);
        }
    }
}
