#ifndef PIRGB_MONOMIAL_HPP
#define PIRGB_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <vector>

namespace pirgb {

enum class MonomialOrder { lex, degrevlex };

// Exponent vector with cached total degree. The variable count is fixed by
// the ambient polynomial ring.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exponents);

    static Monomial one(std::size_t nvars);
    static Monomial variable(std::size_t nvars, std::size_t index,
                             unsigned power = 1);

    std::size_t nvars() const { return exps_.size(); }
    unsigned degree() const { return deg_; }
    unsigned exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<unsigned>& exponents() const { return exps_; }
    bool is_one() const { return deg_ == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps_ == b.exps_;
    }

private:
    std::vector<unsigned> exps_;
    unsigned deg_ = 0;
};

// Total order comparison under the given global order.
std::strong_ordering compare(MonomialOrder order, const Monomial& a,
                             const Monomial& b);

bool divides(const Monomial& a, const Monomial& b);
Monomial quotient(const Monomial& num, const Monomial& den);  // pre: den | num
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);

// All monomials in nvars variables of total degree <= bound, strictly
// descending under the order.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned bound,
                                      MonomialOrder order);

}  // namespace pirgb

#endif  // PIRGB_MONOMIAL_HPP
