#ifndef PIRGB_ORACLE_HPP
#define PIRGB_ORACLE_HPP

#include <optional>
#include <string>

#include "pirgb/buchberger.hpp"
#include "pirgb/howell.hpp"

namespace pirgb {

// Degree-truncated canonical picture of an ideal: the Howell-form row space
// of all monomial multiples m*g (deg <= bound) of the generators, over the
// monomials of degree <= bound listed descending.
//
// For degree-compatible orders every slice element is a true ideal element
// of degree <= bound; for lex the slice may miss ideal elements whose small
// lead monomial needs a high-degree representation. Counterexamples found
// by the strongness check are always real.
struct IdealSlice {
    ResidueRing ring;
    MonomialOrder order = MonomialOrder::degrevlex;
    std::size_t nvars = 0;
    unsigned degree_bound = 0;
    std::vector<Monomial> columns;  // descending
    std::vector<Row> rows;          // Howell form

    bool contains(const Polynomial& f) const;
    Polynomial row_polynomial(std::size_t i) const;
    Row to_row(const Polynomial& f) const;
};

IdealSlice build_slice(const GeneratorSet& gens, unsigned degree_bound);

struct StrongGbReport {
    enum class Failure {
        none,
        containment,          // a basis element is not visibly in the ideal
        generator_reduction,  // a generator does not reduce to zero
        strong_divisibility   // a slice element has no strong divisor
    };

    bool ok = false;
    Failure failure = Failure::none;
    std::optional<Polynomial> counterexample;

    std::string describe() const;
};

// Certifies G as a strong Groebner basis of <gens> on the degree slice:
// containment of G, reduction of the generators, and per Howell pivot a
// basis lead term dividing it (monomial and coefficient).
StrongGbReport is_strong_gb(const GroebnerBasis& G, const GeneratorSet& gens,
                            unsigned degree_bound);

// Spec'd default degree bound: max degree across inputs and basis, plus 2.
unsigned default_degree_bound(const GroebnerBasis& G, const GeneratorSet& gens);

}  // namespace pirgb

#endif  // PIRGB_ORACLE_HPP
