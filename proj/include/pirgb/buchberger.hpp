#ifndef PIRGB_BUCHBERGER_HPP
#define PIRGB_BUCHBERGER_HPP

#include <optional>
#include <vector>

#include "pirgb/pairs.hpp"
#include "pirgb/polynomial.hpp"
#include "pirgb/reduction.hpp"

namespace pirgb {

struct GeneratorSet {
    ResidueRing ring;
    MonomialOrder order = MonomialOrder::degrevlex;
    std::size_t nvars = 0;
    std::vector<Polynomial> polys;
};

struct GroebnerBasis {
    ResidueRing ring;
    MonomialOrder order = MonomialOrder::degrevlex;
    std::size_t nvars = 0;
    std::vector<Polynomial> elements;
    bool minimal = false;
    bool normalized = false;
};

// Outcome of the field-style run: either a strong Groebner basis (all lead
// coefficients stayed invertible throughout) or the first non-invertible
// lead coefficient encountered, lifted to [0, n).
struct FieldModeOutcome {
    std::optional<GroebnerBasis> basis;
    mpz_class witness;

    bool ok() const { return basis.has_value(); }
};

// Buchberger's algorithm with S-, GCD- and annihilator items; output is a
// minimal normalized strong Groebner basis of the input ideal.
GroebnerBasis strong_buchberger(const GeneratorSet& gens);

// Buchberger pretending Z/nZ is a field: S-items only, every basis element
// normalized monic, product and chain criteria enabled. Aborts with a
// witness on the first non-invertible lead coefficient.
FieldModeOutcome field_mode(const GeneratorSet& gens);

// Drops elements whose lead term is top-reducible by another retained
// element, scales lead coefficients to divisors of n, and reduces tails to
// a canonical form. Idempotent; preserves the ideal and strongness.
GroebnerBasis minimize_and_normalize(const GroebnerBasis& G);

}  // namespace pirgb

#endif  // PIRGB_BUCHBERGER_HPP
