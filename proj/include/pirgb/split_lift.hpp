#ifndef PIRGB_SPLIT_LIFT_HPP
#define PIRGB_SPLIT_LIFT_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pirgb/buchberger.hpp"

namespace pirgb {

// Recursion trace of the splitting driver. A node is either a leaf (the
// basis was computed at this modulus, by the field-style run or by the full
// ring algorithm) or an interior node whose children carry the two coprime
// factors.
struct SplitTree {
    enum class Method { field_mode, full_sbba, split };

    mpz_class modulus;
    Method method = Method::field_mode;
    std::size_t basis_size = 0;
    std::vector<std::unique_ptr<SplitTree>> children;

    std::size_t leaf_count() const;
    std::string to_text() const;
};

struct SplitOptions {
    unsigned long trial_bound = 1ul << 20;
    bool parallel = false;
};

// Coefficientwise lift of a minimal normalized basis over Z/aZ into Z/nZ
// (a = modulus of G_a, a | n), with the constant a adjoined. Lead
// coefficients of the lifted non-constant elements divide a and hence n.
std::vector<Polynomial> lift_adjoin_modulus(const GroebnerBasis& G_a,
                                            const mpz_class& n);

// Recombination along Z/nZ ~ Z/aZ x Z/bZ with n = a*b, gcd(a, b) = 1.
// Both inputs are lifted bases over Z/nZ containing their constants a and
// b. Emits the pairwise combinations u*a*lc(g_a)*t_b*g_b + v*b*lc(g_b)*
// t_a*g_a (1 = u*a + v*b), skipping pairs whose would-be lead term is
// already covered by an emitted one.
std::vector<Polynomial> crt_combine(std::span<const Polynomial> G_a,
                                    std::span<const Polynomial> G_b,
                                    const mpz_class& a, const mpz_class& b);

struct Alg4Result {
    GroebnerBasis basis;
    SplitTree tree;
};

// Recursive driver: field-style attempt, split the modulus on a witness,
// recurse on the coprime factors and recombine; perfect powers fall back to
// the full ring algorithm at this node.
Alg4Result strong_gb_over_zn(const GeneratorSet& gens,
                             const SplitOptions& opts = {});

// Factorization-based driver: trial-factor n, compute each prime-power
// base case, fold the recombination over the factors. Falls back to the
// recursive driver when the factorization is incomplete.
GroebnerBasis naive_strong_gb(const GeneratorSet& gens,
                              const SplitOptions& opts = {});

GeneratorSet project_generators(const GeneratorSet& gens, const mpz_class& d);

}  // namespace pirgb

#endif  // PIRGB_SPLIT_LIFT_HPP
