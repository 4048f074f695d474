#ifndef PIRGB_PAIRS_HPP
#define PIRGB_PAIRS_HPP

#include <cstddef>
#include <set>

#include "pirgb/polynomial.hpp"

namespace pirgb {

// S-polynomial: cancels the lead terms of f and g at the lcm of their lead
// monomials, using the lcm of the lead coefficients taken jointly with the
// modulus (generator of the intersection of the coefficient ideals).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// GCD-polynomial: achieves the gcd of the lead coefficients (jointly with
// the modulus) at the lcm monomial via Bezout coefficients from xgcd.
Polynomial gcd_polynomial(const Polynomial& f, const Polynomial& g);

// Annihilator polynomial a*f where a generates ann(lc f); zero when the
// lead coefficient is invertible.
Polynomial ann_polynomial(const Polynomial& f);

// Pending critical item in a Buchberger run. Pair kinds reference basis
// indices i < j; annihilator items reference a single index.
struct CriticalItem {
    enum class Kind { apoly = 0, gpoly = 1, spoly = 2 };

    Kind kind;
    std::size_t i;
    std::size_t j;    // == i for apoly
    unsigned degree;  // deg lcm(lm_i, lm_j), or deg lm_i for apoly

    friend bool operator<(const CriticalItem& a, const CriticalItem& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

// Work queue with normal selection: minimal degree first, annihilator and
// GCD items ahead of S-items within a degree, then (i, j) lexicographic.
class CriticalQueue {
public:
    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }
    void push(const CriticalItem& item);
    CriticalItem select_next();

    // Whether an S-item for the unordered pair {i, j} is still pending.
    bool pending_spair(std::size_t i, std::size_t j) const;
    void erase_involving(std::size_t index);

private:
    std::set<CriticalItem> items_;
    std::set<std::pair<std::size_t, std::size_t>> pending_spairs_;
};

}  // namespace pirgb

#endif  // PIRGB_PAIRS_HPP
