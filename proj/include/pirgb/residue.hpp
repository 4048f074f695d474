#ifndef PIRGB_RESIDUE_HPP
#define PIRGB_RESIDUE_HPP

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace pirgb {

// Extended gcd: g = gcd(a, b) >= 0 with s*a + t*b = g.
// Convention: xgcd(a, a) = (|a|, sgn(a), 0), so that gcd-combinations of an
// element with itself keep the element unchanged.
struct Xgcd {
    mpz_class g;
    mpz_class s;
    mpz_class t;
};

Xgcd xgcd(const mpz_class& a, const mpz_class& b);

// Unit u modulo n with gcd(u, n) = 1 and u*c == gcd(c, n) (mod n).
// Constructive gcd-stabilization, no search over units.
mpz_class unit_stabilizer(const mpz_class& c, const mpz_class& n);

// The ring Z/nZ with canonical representatives in [0, n).
// Modulus 0 is the integer sentinel used while ingesting input polynomials
// over Z before projection; residue-specific operations reject it.
class ResidueRing {
public:
    ResidueRing() : n_(0) {}
    explicit ResidueRing(mpz_class n);

    static ResidueRing integers() { return ResidueRing(); }

    const mpz_class& modulus() const { return n_; }
    bool is_integers() const { return n_ == 0; }

    mpz_class reduce(const mpz_class& x) const;
    mpz_class add(const mpz_class& a, const mpz_class& b) const;
    mpz_class sub(const mpz_class& a, const mpz_class& b) const;
    mpz_class mul(const mpz_class& a, const mpz_class& b) const;
    mpz_class neg(const mpz_class& a) const;

    // Generator of { x : x*c == 0 }, concretely n/gcd(c, n) mod n.
    // Zero exactly when c is invertible.
    mpz_class annihilator(const mpz_class& c) const;

    // Inverse of c when gcd(c, n) = 1; nullopt otherwise (the canonical
    // representative of c itself is then a non-invertibility witness).
    // c == 0 is a caller error.
    std::optional<mpz_class> try_invert(const mpz_class& c) const;

    bool is_unit(const mpz_class& c) const;

    friend bool operator==(const ResidueRing& a, const ResidueRing& b) {
        return a.n_ == b.n_;
    }

private:
    mpz_class n_;
};

// Result of splitting a modulus from a non-invertibility witness.
struct ModulusSplit {
    enum class Kind { coprime_pair, perfect_power };

    Kind kind;
    // coprime_pair: n = p*q with gcd(p, q) = 1 and p, q > 1.
    mpz_class p;
    mpz_class q;
    // perfect_power: n = m^k with k >= 2 and m dividing the witness.
    mpz_class m;
    unsigned long k = 0;
    mpz_class witness;
};

// Splits n using a witness a with 1 < gcd(a, n) < n, by refining {g, n/g}
// (g = gcd(a, n)) into a coprime base. Either a coprime factorization
// n = p*q or a perfect power n = m^k falls out.
ModulusSplit factor_refine_split(const mpz_class& a, const mpz_class& n);

struct Factorization {
    std::vector<std::pair<mpz_class, unsigned long>> factors;
    mpz_class cofactor;  // 1 when complete
    bool complete = false;
};

// Trial division by primes up to `bound`. Stops early once the remaining
// cofactor is certified prime by exceeding the square of the trial divisor.
Factorization trial_factor(const mpz_class& n, const mpz_class& bound);

}  // namespace pirgb

#endif  // PIRGB_RESIDUE_HPP
