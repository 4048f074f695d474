#include "pirgb/buchberger.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace pirgb {

namespace {

struct NonInvertibleLead {
    mpz_class witness;
};

// Shared engine for the ring algorithm and its field-style variant.
// Basis entries keep
// stable indices; killed entries become zero polynomials so reduction and
// queue bookkeeping can skip them.
class Engine {
public:
    Engine(const GeneratorSet& gens, bool field)
        : ring_(gens.ring),
          order_(gens.order),
          nvars_(gens.nvars),
          field_(field) {
        if (ring_.is_integers())
            throw std::invalid_argument("buchberger: not a residue ring");
    }

    GroebnerBasis run(const std::vector<Polynomial>& gens) {
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            insert(g);
            if (unit_ideal_) return unit_basis();
        }
        drain_rewrites();
        while (!queue_.empty() && !unit_ideal_) {
            CriticalItem item = queue_.select_next();
            if (!alive(item.i) || !alive(item.j)) continue;
            if (field_ && item.kind == CriticalItem::Kind::spoly &&
                criterion_skips(item))
                continue;
            Polynomial p = item_polynomial(item);
            if (p.is_zero()) continue;
            Polynomial h = full_reduce(p, entries_);
            if (h.is_zero()) continue;
            insert(h);
            drain_rewrites();
        }
        if (unit_ideal_) return unit_basis();
        GroebnerBasis out;
        out.ring = ring_;
        out.order = order_;
        out.nvars = nvars_;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (alive(i)) out.elements.push_back(entries_[i]);
        return minimize_and_normalize(out);
    }

private:
    bool alive(std::size_t i) const { return !entries_[i].is_zero(); }

    GroebnerBasis unit_basis() const {
        GroebnerBasis out;
        out.ring = ring_;
        out.order = order_;
        out.nvars = nvars_;
        out.elements.push_back(
            Polynomial::constant(ring_, order_, nvars_, 1));
        return minimize_and_normalize(out);
    }

    Polynomial item_polynomial(const CriticalItem& item) const {
        switch (item.kind) {
            case CriticalItem::Kind::spoly:
                return s_polynomial(entries_[item.i], entries_[item.j]);
            case CriticalItem::Kind::gpoly:
                return gcd_polynomial(entries_[item.i], entries_[item.j]);
            case CriticalItem::Kind::apoly:
                return ann_polynomial(entries_[item.i]);
        }
        throw std::logic_error("item_polynomial: unknown kind");
    }

    // Buchberger's product and chain criteria; sound here because every
    // basis element in field mode is monic.
    bool criterion_skips(const CriticalItem& item) const {
        const Monomial& mi = entries_[item.i].lead_monomial();
        const Monomial& mj = entries_[item.j].lead_monomial();
        Monomial l = lcm(mi, mj);
        if (l.degree() == mi.degree() + mj.degree()) return true;
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            if (k == item.i || k == item.j || !alive(k)) continue;
            if (!divides(entries_[k].lead_monomial(), l)) continue;
            if (!queue_.pending_spair(item.i, k) &&
                !queue_.pending_spair(item.j, k))
                return true;
        }
        return false;
    }

    void insert(const Polynomial& h) {
        Polynomial g = h;
        if (field_) {
            auto inv = ring_.try_invert(g.lead_coeff());
            if (!inv) throw NonInvertibleLead{g.lead_coeff()};
            g = g.mul_scalar(*inv);
        } else {
            g = g.mul_scalar(unit_stabilizer(g.lead_coeff(), ring_.modulus()));
        }
        if (g.is_constant()) {
            absorb_constant(g.lead_coeff());
            return;
        }
        append_entry(std::move(g));
    }

    void append_entry(Polynomial g) {
        std::size_t idx = entries_.size();
        entries_.push_back(std::move(g));
        const Polynomial& e = entries_[idx];
        // Retire elements whose lead term the newcomer now top-reduces and
        // requeue their remainders; intermediate bases stay near minimal
        // and the pair queue does not feed on redundant elements.
        for (std::size_t i = 0; i < idx; ++i) {
            if (!alive(i) || entries_[i].is_constant()) continue;
            if (top_reduces(e, entries_[i])) {
                Polynomial old = entries_[i];
                kill(i);
                rewrites_.push_back(std::move(old));
            }
        }
        for (std::size_t i = 0; i < idx; ++i) {
            if (!alive(i)) continue;
            unsigned deg =
                lcm(entries_[i].lead_monomial(), e.lead_monomial()).degree();
            queue_.push({CriticalItem::Kind::spoly, i, idx, deg});
            if (!field_)
                queue_.push({CriticalItem::Kind::gpoly, i, idx, deg});
        }
        if (!field_ && e.lead_coeff() != 1 && e.terms().size() > 1)
            queue_.push({CriticalItem::Kind::apoly, idx, idx,
                         e.lead_monomial().degree()});
    }

    // A constant enters the basis: replace the current constant by the gcd
    // of both, and bound everyone else's coefficients by it.
    void absorb_constant(const mpz_class& c) {
        mpz_class d = c;
        if (constant_) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(),
                    entries_[*constant_].lead_coeff().get_mpz_t());
            if (g == entries_[*constant_].lead_coeff()) return;
            d = g;
            kill(*constant_);
            constant_.reset();
        }
        if (d == 1) {
            unit_ideal_ = true;
            return;
        }
        std::size_t idx = entries_.size();
        append_entry(Polynomial::constant(ring_, order_, nvars_, d));
        constant_ = idx;
        rebound_coefficients(d, idx);
    }

    void rebound_coefficients(const mpz_class& d, std::size_t constant_idx) {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i == constant_idx || !alive(i)) continue;
            std::vector<Term> reduced;
            bool changed = false;
            for (const auto& t : entries_[i].terms()) {
                mpz_class c = t.coeff % d;
                if (c != t.coeff) changed = true;
                if (c != 0) reduced.push_back(Term{std::move(c), t.mon});
            }
            if (!changed) continue;
            Polynomial p = Polynomial::from_terms(ring_, order_, nvars_,
                                                  std::move(reduced));
            if (!p.is_zero() &&
                p.lead_monomial() == entries_[i].lead_monomial() &&
                p.lead_coeff() == entries_[i].lead_coeff()) {
                // Lead term intact: a tail rewrite modulo the constant
                // keeps all pair bookkeeping valid.
                entries_[i] = std::move(p);
            } else {
                kill(i);
                if (!p.is_zero()) rewrites_.push_back(std::move(p));
            }
        }
    }

    void kill(std::size_t i) {
        entries_[i] = Polynomial(ring_, order_, nvars_);
        queue_.erase_involving(i);
    }

    void drain_rewrites() {
        while (!rewrites_.empty() && !unit_ideal_) {
            Polynomial p = std::move(rewrites_.front());
            rewrites_.pop_front();
            Polynomial h = full_reduce(p, entries_);
            if (!h.is_zero()) insert(h);
        }
    }

    ResidueRing ring_;
    MonomialOrder order_;
    std::size_t nvars_;
    bool field_;
    std::vector<Polynomial> entries_;
    CriticalQueue queue_;
    std::optional<std::size_t> constant_;
    std::deque<Polynomial> rewrites_;
    bool unit_ideal_ = false;
};

}  // namespace

GroebnerBasis strong_buchberger(const GeneratorSet& gens) {
    Engine engine(gens, /*field=*/false);
    return engine.run(gens.polys);
}

FieldModeOutcome field_mode(const GeneratorSet& gens) {
    FieldModeOutcome out;
    try {
        Engine engine(gens, /*field=*/true);
        out.basis = engine.run(gens.polys);
    } catch (const NonInvertibleLead& w) {
        out.basis.reset();
        out.witness = w.witness;
    }
    return out;
}

namespace {

// Reduces the coefficient at each tail monomial modulo the gcd of the
// modulus and every applicable retained lead coefficient. Stronger than
// one-reducer-at-a-time rewriting, and canonical: the result does not
// depend on which intermediate basis produced the element.
Polynomial canonical_tail_reduce(const Polynomial& g,
                                 const std::vector<Polynomial>& retained) {
    const ResidueRing& ring = g.ring();
    const mpz_class& n = ring.modulus();
    std::vector<Term> done{g.lead_term()};
    Polynomial work = g.tail();
    while (!work.is_zero()) {
        const Term lead = work.lead_term();
        // Bezout combination of n and the applicable lead coefficients.
        mpz_class acc = n;
        std::vector<std::pair<std::size_t, mpz_class>> coeffs;
        for (std::size_t r = 0; r < retained.size(); ++r) {
            if (!divides(retained[r].lead_monomial(), lead.mon)) continue;
            Xgcd e = xgcd(acc, retained[r].lead_coeff());
            for (auto& [idx, co] : coeffs) co *= e.s;
            coeffs.emplace_back(r, e.t);
            acc = e.g;
        }
        if (coeffs.empty()) {
            done.push_back(lead);
            work = work.tail();
            continue;
        }
        mpz_class rem = lead.coeff % acc;
        mpz_class delta = lead.coeff - rem;
        if (delta == 0) {
            done.push_back(lead);
            work = work.tail();
            continue;
        }
        mpz_class mult = delta / acc;
        Polynomial sub(ring, g.order(), g.nvars());
        for (const auto& [idx, co] : coeffs) {
            Term q{ring.reduce(mult * co),
                   quotient(lead.mon, retained[idx].lead_monomial())};
            sub = sub + retained[idx].mul_term(q);
        }
        work = work - sub;
        if (!work.is_zero() && work.lead_term().mon == lead.mon) {
            done.push_back(work.lead_term());
            work = work.tail();
        }
    }
    return Polynomial::from_terms(ring, g.order(), g.nvars(), std::move(done));
}

}  // namespace

GroebnerBasis minimize_and_normalize(const GroebnerBasis& G) {
    GroebnerBasis out;
    out.ring = G.ring;
    out.order = G.order;
    out.nvars = G.nvars;
    out.minimal = true;
    out.normalized = true;

    std::vector<Polynomial> sorted;
    for (const auto& g : G.elements)
        if (!g.is_zero()) sorted.push_back(g);
    std::sort(sorted.begin(), sorted.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  auto c = compare(G.order, a.lead_monomial(), b.lead_monomial());
                  if (c != std::strong_ordering::equal)
                      return c == std::strong_ordering::less;
                  return a.lead_coeff() < b.lead_coeff();
              });

    std::vector<Polynomial> retained;
    for (const auto& g : sorted) {
        bool redundant = false;
        for (const auto& r : retained) {
            if (top_reduces(r, g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant)
            retained.push_back(
                g.mul_scalar(unit_stabilizer(g.lead_coeff(), G.ring.modulus())));
    }

    for (const auto& g : retained)
        out.elements.push_back(canonical_tail_reduce(g, retained));

    std::sort(out.elements.begin(), out.elements.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  auto c = compare(G.order, a.lead_monomial(), b.lead_monomial());
                  if (c != std::strong_ordering::equal)
                      return c == std::strong_ordering::greater;
                  return a.lead_coeff() > b.lead_coeff();
              });
    return out;
}

}  // namespace pirgb
