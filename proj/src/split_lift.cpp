#include "pirgb/split_lift.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

namespace pirgb {

std::size_t SplitTree::leaf_count() const {
    if (children.empty()) return 1;
    std::size_t c = 0;
    for (const auto& ch : children) c += ch->leaf_count();
    return c;
}

namespace {

const char* method_name(SplitTree::Method m) {
    switch (m) {
        case SplitTree::Method::field_mode: return "field_mode";
        case SplitTree::Method::full_sbba: return "full_sBBA";
        case SplitTree::Method::split: return "split";
    }
    return "?";
}

void render(const SplitTree& node, int depth, std::ostringstream& out) {
    for (int i = 0; i < depth; ++i) out << "  ";
    out << "modulus " << node.modulus << ": " << method_name(node.method)
        << ", basis size " << node.basis_size << "\n";
    for (const auto& ch : node.children) render(*ch, depth + 1, out);
}

}  // namespace

std::string SplitTree::to_text() const {
    std::ostringstream out;
    render(*this, 0, out);
    return out.str();
}

std::vector<Polynomial> lift_adjoin_modulus(const GroebnerBasis& G_a,
                                            const mpz_class& n) {
    const mpz_class& a = G_a.ring.modulus();
    if (n < 2 || !mpz_divisible_p(n.get_mpz_t(), a.get_mpz_t()))
        throw std::invalid_argument(
            "lift_adjoin_modulus: source modulus does not divide target");
    ResidueRing target(n);
    std::vector<Polynomial> out;
    out.reserve(G_a.elements.size() + 1);
    for (const auto& g : G_a.elements) {
        // Canonical representatives in [0, a) already lie in [0, n).
        std::vector<Term> terms(g.terms().begin(), g.terms().end());
        out.push_back(Polynomial::from_terms(target, G_a.order, G_a.nvars,
                                             std::move(terms)));
    }
    out.push_back(Polynomial::constant(target, G_a.order, G_a.nvars, a));
    return out;
}

std::vector<Polynomial> crt_combine(std::span<const Polynomial> G_a,
                                    std::span<const Polynomial> G_b,
                                    const mpz_class& a, const mpz_class& b) {
    if (G_a.empty() || G_b.empty())
        throw std::invalid_argument("crt_combine: empty side");
    const ResidueRing& ring = G_a.front().ring();
    const mpz_class& n = ring.modulus();
    if (n != a * b)
        throw std::invalid_argument("crt_combine: modulus is not a*b");
    Xgcd e = xgcd(a, b);
    if (e.g != 1)
        throw std::invalid_argument("crt_combine: factors not coprime");
    MonomialOrder order = G_a.front().order();
    std::size_t nvars = G_a.front().nvars();

    auto validate = [&](std::span<const Polynomial> G, const mpz_class& m) {
        bool has_constant = false;
        for (const auto& g : G) {
            if (g.is_zero() || !(g.ring() == ring))
                throw std::invalid_argument("crt_combine: bad element");
            if (g.is_constant() && g.lead_coeff() == m) has_constant = true;
            if (!g.is_constant()) {
                if (!mpz_divisible_p(m.get_mpz_t(),
                                     g.lead_coeff().get_mpz_t()) ||
                    mpz_divisible_p(g.lead_coeff().get_mpz_t(), m.get_mpz_t()))
                    throw std::invalid_argument(
                        "crt_combine: lead coefficient not a proper divisor");
            }
        }
        if (!has_constant)
            throw std::invalid_argument("crt_combine: missing constant");
    };
    validate(G_a, a);
    validate(G_b, b);

    mpz_class ua = ring.reduce(e.s * a);
    mpz_class vb = ring.reduce(e.t * b);

    struct PairRef {
        std::size_t k, l;
        Monomial lcm_mon;
    };
    std::vector<PairRef> pairs;
    pairs.reserve(G_a.size() * G_b.size());
    for (std::size_t k = 0; k < G_a.size(); ++k)
        for (std::size_t l = 0; l < G_b.size(); ++l)
            pairs.push_back(
                {k, l, lcm(G_a[k].lead_monomial(), G_b[l].lead_monomial())});
    std::sort(pairs.begin(), pairs.end(), [&](const PairRef& x, const PairRef& y) {
        auto c = compare(order, x.lcm_mon, y.lcm_mon);
        if (c != std::strong_ordering::equal)
            return c == std::strong_ordering::less;
        if (x.k != y.k) return x.k < y.k;
        return x.l < y.l;
    });

    std::vector<Polynomial> out;
    for (const auto& pr : pairs) {
        const Polynomial& ga = G_a[pr.k];
        const Polynomial& gb = G_b[pr.l];
        mpz_class cand = ring.mul(ga.lead_coeff(), gb.lead_coeff());
        // Minimality during recombination: drop pairs whose lead term is
        // already strongly covered by an emitted combination.
        bool covered = false;
        for (const auto& f : out) {
            if (!(f.lead_monomial() == pr.lcm_mon) &&
                divides(f.lead_monomial(), pr.lcm_mon) &&
                solve_linear_congruence(f.lead_coeff(), cand, n)) {
                covered = true;
                break;
            }
        }
        if (covered) continue;
        Term from_b{ring.mul(ua, ga.lead_coeff()),
                    quotient(pr.lcm_mon, gb.lead_monomial())};
        Term from_a{ring.mul(vb, gb.lead_coeff()),
                    quotient(pr.lcm_mon, ga.lead_monomial())};
        Polynomial f = gb.mul_term(from_b) + ga.mul_term(from_a);
        if (!f.is_zero()) out.push_back(std::move(f));
    }
    return out;
}

GeneratorSet project_generators(const GeneratorSet& gens, const mpz_class& d) {
    GeneratorSet out;
    out.ring = ResidueRing(d);
    out.order = gens.order;
    out.nvars = gens.nvars;
    out.polys.reserve(gens.polys.size());
    for (const auto& f : gens.polys) out.polys.push_back(f.project(d));
    return out;
}

namespace {

Alg4Result run_alg4(const GeneratorSet& gens, const SplitOptions& opts) {
    const mpz_class& n = gens.ring.modulus();
    Alg4Result result;
    result.tree.modulus = n;

    FieldModeOutcome fm = field_mode(gens);
    if (fm.ok()) {
        result.basis = std::move(*fm.basis);
        result.tree.method = SplitTree::Method::field_mode;
        result.tree.basis_size = result.basis.elements.size();
        return result;
    }

    ModulusSplit split = factor_refine_split(fm.witness, n);
    if (split.kind == ModulusSplit::Kind::perfect_power) {
        result.basis = strong_buchberger(gens);
        result.tree.method = SplitTree::Method::full_sbba;
        result.tree.basis_size = result.basis.elements.size();
        return result;
    }

    GeneratorSet gens_p = project_generators(gens, split.p);
    GeneratorSet gens_q = project_generators(gens, split.q);
    Alg4Result left, right;
    if (opts.parallel) {
        auto fut = std::async(std::launch::async,
                              [&]() { return run_alg4(gens_p, opts); });
        right = run_alg4(gens_q, opts);
        left = fut.get();
    } else {
        left = run_alg4(gens_p, opts);
        right = run_alg4(gens_q, opts);
    }

    auto lifted_p = lift_adjoin_modulus(left.basis, n);
    auto lifted_q = lift_adjoin_modulus(right.basis, n);
    auto combined = crt_combine(lifted_p, lifted_q, split.p, split.q);

    GroebnerBasis raw;
    raw.ring = gens.ring;
    raw.order = gens.order;
    raw.nvars = gens.nvars;
    raw.elements = std::move(combined);
    result.basis = minimize_and_normalize(raw);

    result.tree.method = SplitTree::Method::split;
    result.tree.basis_size = result.basis.elements.size();
    result.tree.children.push_back(
        std::make_unique<SplitTree>(std::move(left.tree)));
    result.tree.children.push_back(
        std::make_unique<SplitTree>(std::move(right.tree)));
    return result;
}

GroebnerBasis prime_power_basis(const GeneratorSet& gens, bool prime) {
    if (prime) {
        FieldModeOutcome fm = field_mode(gens);
        if (fm.ok()) return std::move(*fm.basis);
    }
    return strong_buchberger(gens);
}

}  // namespace

Alg4Result strong_gb_over_zn(const GeneratorSet& gens,
                             const SplitOptions& opts) {
    return run_alg4(gens, opts);
}

GroebnerBasis naive_strong_gb(const GeneratorSet& gens,
                              const SplitOptions& opts) {
    const mpz_class& n = gens.ring.modulus();
    Factorization fact = trial_factor(n, mpz_class(opts.trial_bound));
    if (!fact.complete) return strong_gb_over_zn(gens, opts).basis;

    mpz_class m_acc;
    GroebnerBasis acc;
    bool first = true;
    for (const auto& [p, e] : fact.factors) {
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        GeneratorSet part = (pe == n) ? gens : project_generators(gens, pe);
        GroebnerBasis G = prime_power_basis(part, e == 1);
        if (first) {
            acc = std::move(G);
            m_acc = pe;
            first = false;
            continue;
        }
        mpz_class m_new = m_acc * pe;
        auto lifted_acc = lift_adjoin_modulus(acc, m_new);
        auto lifted_cur = lift_adjoin_modulus(G, m_new);
        auto combined = crt_combine(lifted_acc, lifted_cur, m_acc, pe);
        GroebnerBasis raw;
        raw.ring = ResidueRing(m_new);
        raw.order = gens.order;
        raw.nvars = gens.nvars;
        raw.elements = std::move(combined);
        acc = minimize_and_normalize(raw);
        m_acc = m_new;
    }
    return acc;
}

}  // namespace pirgb
