#include "pirgb/residue.hpp"

#include <algorithm>
#include <stdexcept>

namespace pirgb {

Xgcd xgcd(const mpz_class& a, const mpz_class& b) {
    if (a == 0 && b == 0)
        throw std::invalid_argument("xgcd: both inputs are zero");
    if (a == b) {
        // Fixed convention: the left input carries the gcd.
        Xgcd r;
        r.g = abs(a);
        r.s = sgn(a);
        r.t = 0;
        return r;
    }
    mpz_class old_r = a, r = b;
    mpz_class old_s = 1, s = 0;
    mpz_class old_t = 0, t = 1;
    mpz_class q, tmp;
    while (r != 0) {
        q = old_r / r;
        tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return Xgcd{old_r, old_s, old_t};
}

mpz_class unit_stabilizer(const mpz_class& c, const mpz_class& n) {
    if (n < 2)
        throw std::invalid_argument("unit_stabilizer: modulus must be >= 2");
    mpz_class a = c % n;
    if (a < 0) a += n;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    if (g == n)  // a == 0: gcd(0, n) = n == 0 in the ring, u = 1 works
        return 1;
    mpz_class s = a / g;
    mpz_class t = n / g;
    // u0 = s^{-1} mod t; gcd(s, t) = 1 by construction.
    mpz_class u0;
    if (t == 1) {
        u0 = 0;
    } else {
        mpz_invert(u0.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t());
    }
    // Strip from g the primes it shares with u0; what is left, times t,
    // shifts u0 into a unit without disturbing u0 mod t.
    mpz_class stab = g;
    mpz_class h;
    for (;;) {
        mpz_gcd(h.get_mpz_t(), stab.get_mpz_t(), u0.get_mpz_t());
        if (h == 1) break;
        stab /= h;
    }
    mpz_class u = (u0 + t * stab) % n;
    if (u < 0) u += n;
    return u;
}

ResidueRing::ResidueRing(mpz_class n) : n_(std::move(n)) {
    if (n_ < 2)
        throw std::invalid_argument("ResidueRing: modulus must be >= 2");
}

mpz_class ResidueRing::reduce(const mpz_class& x) const {
    if (is_integers()) return x;
    mpz_class r = x % n_;
    if (r < 0) r += n_;
    return r;
}

mpz_class ResidueRing::add(const mpz_class& a, const mpz_class& b) const {
    return reduce(a + b);
}

mpz_class ResidueRing::sub(const mpz_class& a, const mpz_class& b) const {
    return reduce(a - b);
}

mpz_class ResidueRing::mul(const mpz_class& a, const mpz_class& b) const {
    return reduce(a * b);
}

mpz_class ResidueRing::neg(const mpz_class& a) const {
    return reduce(-a);
}

mpz_class ResidueRing::annihilator(const mpz_class& c) const {
    if (is_integers())
        throw std::invalid_argument("annihilator: not a residue ring");
    mpz_class a = reduce(c);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n_.get_mpz_t());
    return reduce(n_ / g);
}

std::optional<mpz_class> ResidueRing::try_invert(const mpz_class& c) const {
    if (is_integers())
        throw std::invalid_argument("try_invert: not a residue ring");
    mpz_class a = reduce(c);
    if (a == 0)
        throw std::invalid_argument("try_invert: zero element");
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), n_.get_mpz_t()) == 0)
        return std::nullopt;
    return inv;
}

bool ResidueRing::is_unit(const mpz_class& c) const {
    if (is_integers())
        throw std::invalid_argument("is_unit: not a residue ring");
    mpz_class a = reduce(c);
    if (a == 0) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n_.get_mpz_t());
    return g == 1;
}

namespace {

// Refines a multiset of integers > 1 into a coprime base with exponents,
// preserving the product counted with multiplicity. Bach--Driscoll--Shallit
// style pairwise refinement; quadratic passes are fine at this scale.
std::vector<std::pair<mpz_class, unsigned long>>
coprime_base(std::vector<std::pair<mpz_class, unsigned long>> items) {
    auto tidy = [&]() {
        std::erase_if(items, [](const auto& it) { return it.first == 1; });
        std::sort(items.begin(), items.end());
        for (std::size_t i = 0; i + 1 < items.size();) {
            if (items[i].first == items[i + 1].first) {
                items[i].second += items[i + 1].second;
                items.erase(items.begin() + static_cast<long>(i) + 1);
            } else {
                ++i;
            }
        }
    };
    tidy();
    bool changed = true;
    mpz_class d;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < items.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < items.size() && !changed; ++j) {
                mpz_gcd(d.get_mpz_t(), items[i].first.get_mpz_t(),
                        items[j].first.get_mpz_t());
                if (d == 1) continue;
                auto [vi, ei] = items[i];
                auto [vj, ej] = items[j];
                items.erase(items.begin() + static_cast<long>(j));
                items.erase(items.begin() + static_cast<long>(i));
                items.emplace_back(vi / d, ei);
                items.emplace_back(d, ei + ej);
                items.emplace_back(vj / d, ej);
                tidy();
                changed = true;
            }
        }
    }
    return items;
}

}  // namespace

ModulusSplit factor_refine_split(const mpz_class& a, const mpz_class& n) {
    if (n < 2)
        throw std::invalid_argument("factor_refine_split: modulus must be >= 2");
    mpz_class aa = a % n;
    if (aa < 0) aa += n;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), aa.get_mpz_t(), n.get_mpz_t());
    if (g <= 1 || g >= n)
        throw std::invalid_argument(
            "factor_refine_split: witness does not split the modulus");

    auto base = coprime_base({{g, 1}, {n / g, 1}});
    // Smallest base element dividing n; every base element does, so the
    // first after sorting.
    const mpz_class& m = base.front().first;
    mpz_class u = n;
    unsigned long k = 0;
    while (mpz_divisible_p(u.get_mpz_t(), m.get_mpz_t())) {
        u /= m;
        ++k;
    }
    ModulusSplit split;
    split.witness = aa;
    if (u == 1) {
        split.kind = ModulusSplit::Kind::perfect_power;
        split.m = m;
        split.k = k;
    } else {
        split.kind = ModulusSplit::Kind::coprime_pair;
        mpz_class mk;
        mpz_pow_ui(mk.get_mpz_t(), m.get_mpz_t(), k);
        split.p = u;
        split.q = mk;
    }
    return split;
}

Factorization trial_factor(const mpz_class& n, const mpz_class& bound) {
    if (n < 2)
        throw std::invalid_argument("trial_factor: n must be >= 2");
    if (bound < 2)
        throw std::invalid_argument("trial_factor: bound must be >= 2");
    Factorization out;
    mpz_class m = n;
    mpz_class p = 2;
    while (p <= bound) {
        if (p * p > m) break;
        if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            unsigned long e = 0;
            while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
                m /= p;
                ++e;
            }
            out.factors.emplace_back(p, e);
        }
        p = (p == 2) ? mpz_class(3) : mpz_class(p + 2);
    }
    if (m == 1) {
        out.cofactor = 1;
        out.complete = true;
    } else if (p * p > m) {
        // Remaining cofactor has no divisor <= sqrt, hence prime.
        out.factors.emplace_back(m, 1);
        out.cofactor = 1;
        out.complete = true;
    } else {
        out.cofactor = m;
        out.complete = false;
    }
    return out;
}

}  // namespace pirgb
