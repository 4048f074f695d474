#include "pirgb/reduction.hpp"

#include <stdexcept>

namespace pirgb {

std::optional<mpz_class> solve_linear_congruence(const mpz_class& b,
                                                 const mpz_class& a,
                                                 const mpz_class& n) {
    mpz_class d;
    mpz_gcd(d.get_mpz_t(), b.get_mpz_t(), n.get_mpz_t());
    if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    mpz_class nd = n / d;
    if (nd == 1) return mpz_class(0);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), mpz_class(b / d).get_mpz_t(), nd.get_mpz_t());
    mpz_class c = ((a / d) % nd) * inv % nd;
    if (c < 0) c += nd;
    return c;
}

std::optional<Term> top_reduces(const Polynomial& g, const Polynomial& f) {
    if (g.is_zero() || f.is_zero())
        throw std::invalid_argument("top_reduces: zero polynomial");
    if (!(g.ring() == f.ring()) || g.nvars() != f.nvars())
        throw std::invalid_argument("top_reduces: ring mismatch");
    if (f.ring().is_integers())
        throw std::invalid_argument("top_reduces: not a residue ring");
    if (!divides(g.lead_monomial(), f.lead_monomial())) return std::nullopt;
    auto c = solve_linear_congruence(g.lead_coeff(), f.lead_coeff(),
                                     f.ring().modulus());
    if (!c) return std::nullopt;
    return Term{*c, quotient(f.lead_monomial(), g.lead_monomial())};
}

namespace {

// Reducer choice: smallest lead monomial, then smallest lead
// coefficient as integer, then lowest index. Deterministic runs.
std::optional<std::size_t> pick_reducer(const Polynomial& h,
                                        std::span<const Polynomial> G) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (G[i].is_zero()) continue;
        if (!top_reduces(G[i], h)) continue;
        if (!best) {
            best = i;
            continue;
        }
        auto c = compare(h.order(), G[i].lead_monomial(),
                         G[*best].lead_monomial());
        if (c == std::strong_ordering::less ||
            (c == std::strong_ordering::equal &&
             G[i].lead_coeff() < G[*best].lead_coeff()))
            best = i;
    }
    return best;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G,
                       std::vector<ReductionStep>* record) {
    Polynomial h = f;
    while (!h.is_zero()) {
        auto i = pick_reducer(h, G);
        if (!i) break;
        Term q = *top_reduces(G[*i], h);
        h = h - G[*i].mul_term(q);
        if (record) record->push_back(ReductionStep{*i, std::move(q)});
    }
    return h;
}

Polynomial full_reduce(const Polynomial& f, std::span<const Polynomial> G,
                       std::vector<ReductionStep>* record) {
    Polynomial h = f;
    std::vector<Term> done;
    while (!h.is_zero()) {
        h = normal_form(h, G, record);
        if (h.is_zero()) break;
        done.push_back(h.lead_term());
        h = h.tail();
    }
    return Polynomial::from_terms(f.ring(), f.order(), f.nvars(),
                                  std::move(done));
}

bool reduces_to_zero(const Polynomial& f, std::span<const Polynomial> G) {
    return full_reduce(f, G).is_zero();
}

}  // namespace pirgb
