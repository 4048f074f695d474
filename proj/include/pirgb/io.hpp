#ifndef PIRGB_IO_HPP
#define PIRGB_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "pirgb/buchberger.hpp"

namespace pirgb {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line, int col);
    int line;
    int col;
};

// Line-oriented ideal file:
//   modulus <int>
//   vars <id> (<id>)*
//   order lex|degrevlex
//   one polynomial per line
// '#' starts a comment; blank lines are ignored; lines are
// whitespace-insensitive.
struct IdealFile {
    mpz_class modulus;
    std::vector<std::string> vars;
    MonomialOrder order = MonomialOrder::degrevlex;
    std::vector<Polynomial> polys;

    GeneratorSet generators() const;
};

IdealFile parse_ideal_file(std::istream& in);
IdealFile parse_ideal_file(const std::string& path);

// Polynomial text: terms joined by +/-, optional '*' after the coefficient
// and between variable powers, '^' for powers. Example: 2*x^2*y - 3*y + 1.
// Parsed over Z and projected into the ring.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& vars,
                            const ResidueRing& ring, MonomialOrder order,
                            int line_no = 0);

std::string format_polynomial(const Polynomial& f,
                              const std::vector<std::string>& vars);

// Full file syntax: header plus one basis element per line.
std::string format_basis(const GroebnerBasis& G,
                         const std::vector<std::string>& vars);

const char* order_name(MonomialOrder order);

}  // namespace pirgb

#endif  // PIRGB_IO_HPP
