#ifndef PIRGB_POLYNOMIAL_HPP
#define PIRGB_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <vector>

#include "pirgb/monomial.hpp"
#include "pirgb/residue.hpp"

namespace pirgb {

struct Term {
    mpz_class coeff;
    Monomial mon;
};

// Sparse polynomial over a ResidueRing: terms strictly descending under the
// ambient order, no zero coefficients, zero polynomial = empty term list.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(ResidueRing ring, MonomialOrder order, std::size_t nvars);

    static Polynomial from_terms(ResidueRing ring, MonomialOrder order,
                                 std::size_t nvars, std::vector<Term> terms);
    static Polynomial constant(ResidueRing ring, MonomialOrder order,
                               std::size_t nvars, const mpz_class& c);

    const ResidueRing& ring() const { return ring_; }
    MonomialOrder order() const { return order_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;  // zero or a single degree-0 term
    long degree() const;       // -1 for the zero polynomial

    const Term& lead_term() const;  // throws on zero
    const Monomial& lead_monomial() const { return lead_term().mon; }
    const mpz_class& lead_coeff() const { return lead_term().coeff; }
    Polynomial tail() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial mul_term(const Term& t) const;
    Polynomial mul_monomial(const Monomial& m) const;
    Polynomial mul_scalar(const mpz_class& c) const;

    // Coefficientwise projection into Z/dZ; requires d >= 2 and d dividing
    // the modulus (any d >= 2 from the integer sentinel ring).
    Polynomial project(const mpz_class& d) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    void check_compatible(const Polynomial& other) const;

    ResidueRing ring_;
    MonomialOrder order_ = MonomialOrder::degrevlex;
    std::size_t nvars_ = 0;
    std::vector<Term> terms_;
};

}  // namespace pirgb

#endif  // PIRGB_POLYNOMIAL_HPP
