#ifndef PIRGB_TEST_UTIL_HPP
#define PIRGB_TEST_UTIL_HPP

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "pirgb/buchberger.hpp"
#include "pirgb/io.hpp"

namespace pirgb::testutil {

// PIRGB_SEED fixes the randomized property-test seed.
inline std::uint64_t seed() {
    if (const char* env = std::getenv("PIRGB_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 20260811ull;
}

using Rng = std::mt19937_64;

inline Monomial random_monomial(Rng& rng, std::size_t nvars, unsigned maxdeg) {
    std::vector<unsigned> e(nvars, 0u);
    std::uniform_int_distribution<unsigned> d(0, maxdeg);
    unsigned total = d(rng);
    std::uniform_int_distribution<std::size_t> pick(0, nvars - 1);
    for (unsigned t = 0; t < total; ++t) e[pick(rng)] += 1;
    return Monomial(std::move(e));
}

inline Polynomial random_poly(Rng& rng, const ResidueRing& ring,
                              MonomialOrder order, std::size_t nvars,
                              unsigned maxdeg, unsigned maxterms) {
    std::uniform_int_distribution<unsigned> nt(1, maxterms);
    std::uniform_int_distribution<unsigned long> coeff(
        0, ring.modulus().get_ui() - 1);
    std::vector<Term> terms;
    unsigned count = nt(rng);
    for (unsigned i = 0; i < count; ++i)
        terms.push_back(
            Term{mpz_class(coeff(rng)), random_monomial(rng, nvars, maxdeg)});
    return Polynomial::from_terms(ring, order, nvars, std::move(terms));
}

inline Polynomial random_nonzero_poly(Rng& rng, const ResidueRing& ring,
                                      MonomialOrder order, std::size_t nvars,
                                      unsigned maxdeg, unsigned maxterms) {
    for (;;) {
        Polynomial f = random_poly(rng, ring, order, nvars, maxdeg, maxterms);
        if (!f.is_zero()) return f;
    }
}

inline GeneratorSet random_ideal(Rng& rng, const mpz_class& n,
                                 MonomialOrder order, std::size_t nvars,
                                 unsigned maxdeg, unsigned maxgens) {
    GeneratorSet gens;
    gens.ring = ResidueRing(n);
    gens.order = order;
    gens.nvars = nvars;
    std::uniform_int_distribution<unsigned> ng(1, maxgens);
    unsigned count = ng(rng);
    for (unsigned i = 0; i < count; ++i)
        gens.polys.push_back(
            random_nonzero_poly(rng, gens.ring, order, nvars, maxdeg, 4));
    return gens;
}

// Shorthand for readable expected values in tests.
inline Polynomial pp(const std::string& text,
                     const std::vector<std::string>& vars,
                     const ResidueRing& ring,
                     MonomialOrder order = MonomialOrder::degrevlex) {
    return parse_polynomial(text, vars, ring, order);
}

inline bool same_elements(const std::vector<Polynomial>& a,
                          const std::vector<Polynomial>& b) {
    if (a.size() != b.size()) return false;
    for (const auto& f : a) {
        bool found = false;
        for (const auto& g : b)
            if (f == g) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

}  // namespace pirgb::testutil

#endif  // PIRGB_TEST_UTIL_HPP
