#include "pirgb/pairs.hpp"

#include <algorithm>
#include <stdexcept>

namespace pirgb {

namespace {

void check_pair_inputs(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("pair construction: zero polynomial");
    if (!(f.ring() == g.ring()) || f.order() != g.order() ||
        f.nvars() != g.nvars())
        throw std::invalid_argument("pair construction: ring mismatch");
    if (f.ring().is_integers())
        throw std::invalid_argument("pair construction: not a residue ring");
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    check_pair_inputs(f, g);
    const mpz_class& n = f.ring().modulus();
    const Monomial t = lcm(f.lead_monomial(), g.lead_monomial());
    mpz_class g3;
    mpz_gcd(g3.get_mpz_t(), f.lead_coeff().get_mpz_t(),
            g.lead_coeff().get_mpz_t());
    mpz_gcd(g3.get_mpz_t(), g3.get_mpz_t(), n.get_mpz_t());
    // Multipliers lift the lead coefficients to their joint lcm exactly
    // over Z, so the lead terms cancel.
    Term tf{g.lead_coeff() / g3, quotient(t, f.lead_monomial())};
    Term tg{f.lead_coeff() / g3, quotient(t, g.lead_monomial())};
    return f.mul_term(tf) - g.mul_term(tg);
}

Polynomial gcd_polynomial(const Polynomial& f, const Polynomial& g) {
    check_pair_inputs(f, g);
    const mpz_class& n = f.ring().modulus();
    const Monomial t = lcm(f.lead_monomial(), g.lead_monomial());
    Xgcd pairwise = xgcd(f.lead_coeff(), g.lead_coeff());
    Xgcd with_n = xgcd(pairwise.g, n);
    Term tf{with_n.s * pairwise.s, quotient(t, f.lead_monomial())};
    Term tg{with_n.s * pairwise.t, quotient(t, g.lead_monomial())};
    return f.mul_term(tf) + g.mul_term(tg);
}

Polynomial ann_polynomial(const Polynomial& f) {
    if (f.is_zero())
        throw std::invalid_argument("ann_polynomial: zero polynomial");
    mpz_class a = f.ring().annihilator(f.lead_coeff());
    return f.mul_scalar(a);
}

void CriticalQueue::push(const CriticalItem& item) {
    items_.insert(item);
    if (item.kind == CriticalItem::Kind::spoly)
        pending_spairs_.emplace(item.i, item.j);
}

CriticalItem CriticalQueue::select_next() {
    if (items_.empty())
        throw std::invalid_argument("select_next: empty queue");
    CriticalItem item = *items_.begin();
    items_.erase(items_.begin());
    if (item.kind == CriticalItem::Kind::spoly)
        pending_spairs_.erase({item.i, item.j});
    return item;
}

bool CriticalQueue::pending_spair(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return pending_spairs_.count({i, j}) != 0;
}

void CriticalQueue::erase_involving(std::size_t index) {
    for (auto it = items_.begin(); it != items_.end();) {
        if (it->i == index || it->j == index) {
            if (it->kind == CriticalItem::Kind::spoly)
                pending_spairs_.erase({it->i, it->j});
            it = items_.erase(it);
        } else {
            ++it;
        }
    }
}

}  // namespace pirgb
