#include "pirgb/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pirgb {

Monomial::Monomial(std::vector<unsigned> exponents)
    : exps_(std::move(exponents)),
      deg_(std::accumulate(exps_.begin(), exps_.end(), 0u)) {}

Monomial Monomial::one(std::size_t nvars) {
    return Monomial(std::vector<unsigned>(nvars, 0u));
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index,
                            unsigned power) {
    std::vector<unsigned> e(nvars, 0u);
    e.at(index) = power;
    return Monomial(std::move(e));
}

std::strong_ordering compare(MonomialOrder order, const Monomial& a,
                             const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("compare: variable count mismatch");
    switch (order) {
        case MonomialOrder::lex:
            for (std::size_t i = 0; i < a.nvars(); ++i) {
                if (a.exponent(i) != b.exponent(i))
                    return a.exponent(i) <=> b.exponent(i);
            }
            return std::strong_ordering::equal;
        case MonomialOrder::degrevlex: {
            if (a.degree() != b.degree()) return a.degree() <=> b.degree();
            // Equal degree: smaller exponent in the last differing
            // position wins.
            for (std::size_t i = a.nvars(); i-- > 0;) {
                if (a.exponent(i) != b.exponent(i))
                    return b.exponent(i) <=> a.exponent(i);
            }
            return std::strong_ordering::equal;
        }
    }
    throw std::logic_error("compare: unknown order");
}

bool divides(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("divides: variable count mismatch");
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exponent(i) > b.exponent(i)) return false;
    return true;
}

Monomial quotient(const Monomial& num, const Monomial& den) {
    if (!divides(den, num))
        throw std::invalid_argument("quotient: not divisible");
    std::vector<unsigned> e(num.nvars());
    for (std::size_t i = 0; i < num.nvars(); ++i)
        e[i] = num.exponent(i) - den.exponent(i);
    return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("lcm: variable count mismatch");
    std::vector<unsigned> e(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i)
        e[i] = std::max(a.exponent(i), b.exponent(i));
    return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("monomial product: variable count mismatch");
    std::vector<unsigned> e(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i)
        e[i] = a.exponent(i) + b.exponent(i);
    return Monomial(std::move(e));
}

namespace {

void enumerate(std::size_t nvars, unsigned remaining, std::size_t pos,
               std::vector<unsigned>& cur, std::vector<Monomial>& out) {
    if (pos == nvars) {
        out.emplace_back(cur);
        return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
        cur[pos] = e;
        enumerate(nvars, remaining - e, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned bound,
                                      MonomialOrder order) {
    std::vector<Monomial> out;
    std::vector<unsigned> cur(nvars, 0u);
    enumerate(nvars, bound, 0, cur, out);
    std::sort(out.begin(), out.end(), [order](const Monomial& a, const Monomial& b) {
        return compare(order, a, b) == std::strong_ordering::greater;
    });
    return out;
}

}  // namespace pirgb
