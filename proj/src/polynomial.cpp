#include "pirgb/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pirgb {

Polynomial::Polynomial(ResidueRing ring, MonomialOrder order, std::size_t nvars)
    : ring_(std::move(ring)), order_(order), nvars_(nvars) {}

Polynomial Polynomial::from_terms(ResidueRing ring, MonomialOrder order,
                                  std::size_t nvars, std::vector<Term> terms) {
    Polynomial p(std::move(ring), order, nvars);
    for (auto& t : terms) {
        if (t.mon.nvars() != nvars)
            throw std::invalid_argument("from_terms: variable count mismatch");
        t.coeff = p.ring_.reduce(t.coeff);
    }
    std::sort(terms.begin(), terms.end(), [order](const Term& a, const Term& b) {
        return compare(order, a.mon, b.mon) == std::strong_ordering::greater;
    });
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
            p.terms_.back().coeff = p.ring_.add(p.terms_.back().coeff, t.coeff);
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Polynomial Polynomial::constant(ResidueRing ring, MonomialOrder order,
                                std::size_t nvars, const mpz_class& c) {
    return from_terms(std::move(ring), order, nvars,
                      {Term{c, Monomial::one(nvars)}});
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one());
}

long Polynomial::degree() const {
    long d = -1;
    for (const auto& t : terms_)
        d = std::max(d, static_cast<long>(t.mon.degree()));
    return d;
}

const Term& Polynomial::lead_term() const {
    if (terms_.empty())
        throw std::invalid_argument("lead_term: zero polynomial");
    return terms_.front();
}

Polynomial Polynomial::tail() const {
    Polynomial p(ring_, order_, nvars_);
    if (terms_.size() > 1)
        p.terms_.assign(terms_.begin() + 1, terms_.end());
    return p;
}

void Polynomial::check_compatible(const Polynomial& other) const {
    if (!(ring_ == other.ring_) || order_ != other.order_ ||
        nvars_ != other.nvars_)
        throw std::invalid_argument("polynomial arithmetic: ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_compatible(other);
    Polynomial out(ring_, order_, nvars_);
    out.terms_.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        auto c = compare(order_, terms_[i].mon, other.terms_[j].mon);
        if (c == std::strong_ordering::greater) {
            out.terms_.push_back(terms_[i++]);
        } else if (c == std::strong_ordering::less) {
            out.terms_.push_back(other.terms_[j++]);
        } else {
            mpz_class s = ring_.add(terms_[i].coeff, other.terms_[j].coeff);
            if (s != 0) out.terms_.push_back(Term{std::move(s), terms_[i].mon});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j) out.terms_.push_back(other.terms_[j]);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + (-other);
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ring_, order_, nvars_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back(Term{ring_.neg(t.coeff), t.mon});
    return out;
}

Polynomial Polynomial::mul_term(const Term& t) const {
    Polynomial out(ring_, order_, nvars_);
    mpz_class c = ring_.reduce(t.coeff);
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& s : terms_) {
        mpz_class p = ring_.mul(s.coeff, c);
        if (p != 0) out.terms_.push_back(Term{std::move(p), s.mon * t.mon});
    }
    // Monomial multiplication preserves the strict ordering; coefficient
    // products may vanish but never merge.
    return out;
}

Polynomial Polynomial::mul_monomial(const Monomial& m) const {
    return mul_term(Term{1, m});
}

Polynomial Polynomial::mul_scalar(const mpz_class& c) const {
    return mul_term(Term{c, Monomial::one(nvars_)});
}

Polynomial Polynomial::project(const mpz_class& d) const {
    if (d < 2)
        throw std::invalid_argument("project: target modulus must be >= 2");
    if (!ring_.is_integers() &&
        !mpz_divisible_p(ring_.modulus().get_mpz_t(), d.get_mpz_t()))
        throw std::invalid_argument("project: target does not divide modulus");
    ResidueRing target(d);
    Polynomial out(target, order_, nvars_);
    for (const auto& t : terms_) {
        mpz_class c = target.reduce(t.coeff);
        if (c != 0) out.terms_.push_back(Term{std::move(c), t.mon});
    }
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!(a.ring_ == b.ring_) || a.nvars_ != b.nvars_ ||
        a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].coeff != b.terms_[i].coeff ||
            !(a.terms_[i].mon == b.terms_[i].mon))
            return false;
    }
    return true;
}

}  // namespace pirgb
