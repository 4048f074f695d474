#ifndef PIRGB_SYSTEMS_HPP
#define PIRGB_SYSTEMS_HPP

#include <string>
#include <vector>

#include "pirgb/buchberger.hpp"

namespace pirgb {

struct NamedSystem {
    std::string name;
    std::vector<std::string> vars;
    GeneratorSet gens;
};

// Bundled desk-scale benchmark systems.
std::vector<std::string> bench_corpus();
NamedSystem make_system(const std::string& name, const mpz_class& modulus,
                        MonomialOrder order);

NamedSystem cyclic_system(int k, const mpz_class& modulus, MonomialOrder order);
NamedSystem katsura_system(int k, const mpz_class& modulus, MonomialOrder order);
NamedSystem noon3_system(const mpz_class& modulus, MonomialOrder order);

}  // namespace pirgb

#endif  // PIRGB_SYSTEMS_HPP
