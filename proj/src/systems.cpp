#include "pirgb/systems.hpp"

#include <stdexcept>

namespace pirgb {

namespace {

Monomial mono(std::size_t nvars, std::initializer_list<std::pair<int, unsigned>> powers) {
    std::vector<unsigned> e(nvars, 0u);
    for (auto [v, p] : powers) e[static_cast<std::size_t>(v)] += p;
    return Monomial(std::move(e));
}

NamedSystem wrap(std::string name, std::vector<std::string> vars,
                 const mpz_class& modulus, MonomialOrder order,
                 std::vector<Polynomial> polys) {
    NamedSystem sys;
    sys.name = std::move(name);
    sys.vars = std::move(vars);
    sys.gens.ring = ResidueRing(modulus);
    sys.gens.order = order;
    sys.gens.nvars = sys.vars.size();
    sys.gens.polys = std::move(polys);
    return sys;
}

}  // namespace

NamedSystem cyclic_system(int k, const mpz_class& modulus, MonomialOrder order) {
    if (k < 2) throw std::invalid_argument("cyclic: k >= 2 required");
    auto n = static_cast<std::size_t>(k);
    ResidueRing ring(modulus);
    std::vector<std::string> vars;
    for (int i = 0; i < k; ++i) vars.push_back("x" + std::to_string(i + 1));
    std::vector<Polynomial> polys;
    for (int d = 1; d < k; ++d) {
        std::vector<Term> terms;
        for (int i = 0; i < k; ++i) {
            std::vector<unsigned> e(n, 0u);
            for (int j = 0; j < d; ++j) e[static_cast<std::size_t>((i + j) % k)] += 1;
            terms.push_back(Term{1, Monomial(std::move(e))});
        }
        polys.push_back(Polynomial::from_terms(ring, order, n, std::move(terms)));
    }
    std::vector<Term> last;
    last.push_back(Term{1, Monomial(std::vector<unsigned>(n, 1u))});
    last.push_back(Term{-1, Monomial::one(n)});
    polys.push_back(Polynomial::from_terms(ring, order, n, std::move(last)));
    return wrap("cyclic-" + std::to_string(k), std::move(vars), modulus, order,
                std::move(polys));
}

NamedSystem katsura_system(int k, const mpz_class& modulus, MonomialOrder order) {
    if (k < 2) throw std::invalid_argument("katsura: k >= 2 required");
    auto n = static_cast<std::size_t>(k);
    ResidueRing ring(modulus);
    std::vector<std::string> vars;
    for (int i = 0; i < k; ++i) vars.push_back("u" + std::to_string(i));
    std::vector<Polynomial> polys;
    // u0 + 2*(u1 + ... + u_{k-1}) - 1
    {
        std::vector<Term> terms;
        terms.push_back(Term{1, mono(n, {{0, 1}})});
        for (int i = 1; i < k; ++i) terms.push_back(Term{2, mono(n, {{i, 1}})});
        terms.push_back(Term{-1, Monomial::one(n)});
        polys.push_back(Polynomial::from_terms(ring, order, n, std::move(terms)));
    }
    // For m = 0..k-2: sum_{i=-(k-1)}^{k-1} u_|i| * u_|m-i| - u_m
    for (int m = 0; m + 1 < k; ++m) {
        std::vector<Term> terms;
        for (int i = -(k - 1); i <= k - 1; ++i) {
            int a = std::abs(i);
            int b = std::abs(m - i);
            if (b > k - 1) continue;
            terms.push_back(Term{1, mono(n, {{a, 1}, {b, 1}})});
        }
        terms.push_back(Term{-1, mono(n, {{m, 1}})});
        polys.push_back(Polynomial::from_terms(ring, order, n, std::move(terms)));
    }
    return wrap("katsura-" + std::to_string(k), std::move(vars), modulus, order,
                std::move(polys));
}

NamedSystem noon3_system(const mpz_class& modulus, MonomialOrder order) {
    constexpr std::size_t n = 3;
    ResidueRing ring(modulus);
    std::vector<Polynomial> polys;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        std::vector<Term> terms;
        terms.push_back(Term{10, mono(n, {{i, 1}, {j, 2}})});
        terms.push_back(Term{10, mono(n, {{i, 1}, {k, 2}})});
        terms.push_back(Term{-11, mono(n, {{i, 1}})});
        terms.push_back(Term{10, Monomial::one(n)});
        polys.push_back(Polynomial::from_terms(ring, order, n, std::move(terms)));
    }
    return wrap("noon-3", {"x1", "x2", "x3"}, modulus, order, std::move(polys));
}

std::vector<std::string> bench_corpus() {
    return {"cyclic-4", "cyclic-5", "katsura-4", "katsura-5", "noon-3"};
}

NamedSystem make_system(const std::string& name, const mpz_class& modulus,
                        MonomialOrder order) {
    if (name == "cyclic-4") return cyclic_system(4, modulus, order);
    if (name == "cyclic-5") return cyclic_system(5, modulus, order);
    if (name == "katsura-4") return katsura_system(4, modulus, order);
    if (name == "katsura-5") return katsura_system(5, modulus, order);
    if (name == "noon-3") return noon3_system(modulus, order);
    throw std::invalid_argument("unknown benchmark system '" + name + "'");
}

}  // namespace pirgb
