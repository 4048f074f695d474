#ifndef PIRGB_REDUCTION_HPP
#define PIRGB_REDUCTION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pirgb/polynomial.hpp"

namespace pirgb {

// Smallest non-negative c with c*b == a (mod n), if any.
std::optional<mpz_class> solve_linear_congruence(const mpz_class& b,
                                                 const mpz_class& a,
                                                 const mpz_class& n);

// Quotient term t with lead_term(f) == t * lead_term(g) when g top-reduces f
// (monomial and coefficient divisibility in Z/nZ); nullopt otherwise.
std::optional<Term> top_reduces(const Polynomial& g, const Polynomial& f);

struct ReductionStep {
    std::size_t reducer;  // index into G
    Term quotient;
};

// Top-reduction normal form: reduce the lead term until it is irreducible
// against G. The record, when requested, reconstructs f - result as the sum
// of quotient * G[reducer] contributions.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G,
                       std::vector<ReductionStep>* record = nullptr);

// Full reduction: every term of the result is irreducible against G.
Polynomial full_reduce(const Polynomial& f, std::span<const Polynomial> G,
                       std::vector<ReductionStep>* record = nullptr);

bool reduces_to_zero(const Polynomial& f, std::span<const Polynomial> G);

}  // namespace pirgb

#endif  // PIRGB_REDUCTION_HPP
