#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pirgb/oracle.hpp"
#include "pirgb/reduction.hpp"
#include "test_util.hpp"

using namespace pirgb;
using testutil::pp;

namespace {
const std::vector<std::string> X = {"x"};

GeneratorSet ideal(const ResidueRing& ring,
                   const std::vector<std::string>& texts,
                   const std::vector<std::string>& vars,
                   MonomialOrder order = MonomialOrder::degrevlex) {
    GeneratorSet g;
    g.ring = ring;
    g.order = order;
    g.nvars = vars.size();
    for (const auto& t : texts)
        g.polys.push_back(parse_polynomial(t, vars, ring, order));
    return g;
}

GroebnerBasis as_basis(const GeneratorSet& gens) {
    GroebnerBasis G;
    G.ring = gens.ring;
    G.order = gens.order;
    G.nvars = gens.nvars;
    G.elements = gens.polys;
    return G;
}
}  // namespace

TEST_CASE("build_slice worked examples") {
    ResidueRing z30((mpz_class(30)));
    IdealSlice s = build_slice(ideal(z30, {"2*x", "3*x"}, X), 1);
    // columns descending: x, 1; the span collapses to a single pivot row x
    REQUIRE(s.rows.size() == 1);
    CHECK(s.rows[0][0] == 1);
    CHECK(s.rows[0][1] == 0);
    CHECK(s.contains(pp("x", X, z30)));

    ResidueRing z6((mpz_class(6)));
    s = build_slice(ideal(z6, {"x + 5"}, X), 1);
    REQUIRE(s.rows.size() == 1);
    CHECK(s.rows[0][0] == 1);
    CHECK(s.rows[0][1] == 5);

    GeneratorSet empty;
    empty.ring = z6;
    empty.order = MonomialOrder::degrevlex;
    empty.nvars = 1;
    s = build_slice(empty, 2);
    CHECK(s.rows.empty());
}

TEST_CASE("is_strong_gb worked examples") {
    ResidueRing z30((mpz_class(30)));
    GeneratorSet gens = ideal(z30, {"2*x", "3*x"}, X);
    auto report = is_strong_gb(as_basis(gens), gens, 1);
    REQUIRE_FALSE(report.ok);
    CHECK(report.failure == StrongGbReport::Failure::strong_divisibility);
    REQUIRE(report.counterexample.has_value());
    CHECK(*report.counterexample == pp("x", X, z30));

    GroebnerBasis good = as_basis(ideal(z30, {"x"}, X));
    CHECK(is_strong_gb(good, gens, 1).ok);
    CHECK(is_strong_gb(good, gens, 3).ok);

    ResidueRing z6((mpz_class(6)));
    GeneratorSet g6 = ideal(z6, {"x + 5"}, X);
    CHECK(is_strong_gb(as_basis(g6), g6, 3).ok);
}

TEST_CASE("slices are canonical under shuffling and unit rescaling") {
    testutil::Rng rng(testutil::seed());
    for (int n : {6, 30, 36}) {
        ResidueRing ring((mpz_class(n)));
        for (int i = 0; i < 20; ++i) {
            GeneratorSet gens =
                testutil::random_ideal(rng, n, MonomialOrder::degrevlex, 2, 3, 4);
            IdealSlice s1 = build_slice(gens, 4);

            GeneratorSet shuffled = gens;
            std::shuffle(shuffled.polys.begin(), shuffled.polys.end(), rng);
            for (auto& f : shuffled.polys) {
                // scale by a random unit
                for (;;) {
                    std::uniform_int_distribution<int> d(1, n - 1);
                    int u = d(rng);
                    if (ring.is_unit(u)) {
                        f = f.mul_scalar(u);
                        break;
                    }
                }
            }
            IdealSlice s2 = build_slice(shuffled, 4);
            CHECK(s1.rows == s2.rows);
        }
    }
}

TEST_CASE("slice membership matches reduction by a certified basis") {
    testutil::Rng rng(testutil::seed() + 7);
    for (int n : {6, 30}) {
        ResidueRing ring((mpz_class(n)));
        for (int i = 0; i < 12; ++i) {
            GeneratorSet gens =
                testutil::random_ideal(rng, n, MonomialOrder::degrevlex, 2, 2, 3);
            GroebnerBasis G = strong_buchberger(gens);
            if (G.elements.empty()) continue;
            unsigned D = default_degree_bound(G, gens);
            REQUIRE(is_strong_gb(G, gens, D).ok);

            // Build the slice from the certified basis itself; for the
            // degree-compatible order both directions of the equivalence
            // hold on it.
            GeneratorSet basis_gens;
            basis_gens.ring = gens.ring;
            basis_gens.order = gens.order;
            basis_gens.nvars = gens.nvars;
            basis_gens.polys = G.elements;
            IdealSlice s = build_slice(basis_gens, D);

            for (int t = 0; t < 40; ++t) {
                Polynomial f = testutil::random_poly(
                    rng, ring, MonomialOrder::degrevlex, 2, D > 0 ? D - 1 : 0, 4);
                CHECK(s.contains(f) == reduces_to_zero(f, G.elements));
            }
            // explicit members: the canonical rows themselves
            for (std::size_t r = 0; r < s.rows.size(); ++r) {
                Polynomial f = s.row_polynomial(r);
                CHECK(s.contains(f));
                CHECK(reduces_to_zero(f, G.elements));
                // top-reduction alone already reaches zero on ideal
                // elements when the basis is strong
                CHECK(normal_form(f, G.elements).is_zero());
            }
        }
    }
}

TEST_CASE("counterexamples are certified violations") {
    testutil::Rng rng(testutil::seed() + 11);
    int failures = 0;
    for (int i = 0; i < 40; ++i) {
        GeneratorSet gens =
            testutil::random_ideal(rng, 30, MonomialOrder::degrevlex, 2, 2, 3);
        GroebnerBasis claimed = as_basis(gens);  // raw generators, often weak
        long d = 0;
        for (const auto& f : gens.polys) d = std::max(d, f.degree());
        unsigned D = static_cast<unsigned>(d) + 2;
        auto report = is_strong_gb(claimed, gens, D);
        if (report.ok ||
            report.failure != StrongGbReport::Failure::strong_divisibility)
            continue;
        ++failures;
        REQUIRE(report.counterexample.has_value());
        const Polynomial& f = *report.counterexample;
        IdealSlice s = build_slice(gens, D);
        CHECK(s.contains(f));
        bool divisible = false;
        for (const auto& g : claimed.elements) {
            if (g.is_zero() || f.is_zero()) continue;
            if (top_reduces(g, f)) divisible = true;
        }
        CHECK_FALSE(divisible);
    }
    CHECK(failures > 0);
}
