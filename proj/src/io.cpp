#include "pirgb/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace pirgb {

ParseError::ParseError(const std::string& what, int line, int col)
    : std::runtime_error("line " + std::to_string(line) + ", col " +
                         std::to_string(col) + ": " + what),
      line(line),
      col(col) {}

GeneratorSet IdealFile::generators() const {
    GeneratorSet g;
    g.ring = ResidueRing(modulus);
    g.order = order;
    g.nvars = vars.size();
    g.polys = polys;
    return g;
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    int line;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    int col() const { return static_cast<int>(pos) + 1; }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what, line, col());
    }
};

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

mpz_class parse_integer(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    while (cur.pos < cur.text.size() &&
           std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
        ++cur.pos;
    if (cur.pos == start) cur.fail("expected an integer");
    return mpz_class(cur.text.substr(start, cur.pos - start), 10);
}

std::string parse_ident(Cursor& cur) {
    cur.skip_ws();
    if (!ident_start(cur.peek())) cur.fail("expected an identifier");
    std::size_t start = cur.pos;
    ++cur.pos;
    while (cur.pos < cur.text.size() && ident_char(cur.text[cur.pos]))
        ++cur.pos;
    return cur.text.substr(start, cur.pos - start);
}

Term parse_term(Cursor& cur, const std::vector<std::string>& vars) {
    std::vector<unsigned> exps(vars.size(), 0u);
    mpz_class coeff = 1;
    bool saw_factor = false;
    cur.skip_ws();
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        coeff = parse_integer(cur);
        saw_factor = true;
        cur.skip_ws();
        if (cur.peek() == '*') ++cur.pos;
    }
    for (;;) {
        cur.skip_ws();
        if (!ident_start(cur.peek())) break;
        int at = cur.col();
        std::string name = parse_ident(cur);
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end())
            throw ParseError("unknown variable '" + name + "'", cur.line, at);
        unsigned power = 1;
        cur.skip_ws();
        if (cur.peek() == '^') {
            ++cur.pos;
            mpz_class e = parse_integer(cur);
            if (!e.fits_uint_p()) cur.fail("exponent too large");
            power = static_cast<unsigned>(e.get_ui());
        }
        exps[static_cast<std::size_t>(it - vars.begin())] += power;
        saw_factor = true;
        cur.skip_ws();
        if (cur.peek() == '*') {
            ++cur.pos;
            cur.skip_ws();
            if (!ident_start(cur.peek())) cur.fail("expected a variable after '*'");
        }
    }
    if (!saw_factor) cur.fail("expected a term");
    return Term{std::move(coeff), Monomial(std::move(exps))};
}

}  // namespace

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& vars,
                            const ResidueRing& ring, MonomialOrder order,
                            int line_no) {
    Cursor cur{text, 0, line_no};
    std::vector<Term> terms;
    if (cur.done()) cur.fail("empty polynomial");
    bool negative = false;
    if (cur.peek() == '-') {
        negative = true;
        ++cur.pos;
    } else if (cur.peek() == '+') {
        ++cur.pos;
    }
    for (;;) {
        Term t = parse_term(cur, vars);
        if (negative) t.coeff = -t.coeff;
        terms.push_back(std::move(t));
        if (cur.done()) break;
        char op = cur.peek();
        if (op != '+' && op != '-') cur.fail("expected '+' or '-'");
        negative = (op == '-');
        ++cur.pos;
        if (cur.done()) cur.fail("dangling operator");
    }
    Polynomial over_z = Polynomial::from_terms(ResidueRing::integers(), order,
                                               vars.size(), std::move(terms));
    if (ring.is_integers()) return over_z;
    return over_z.project(ring.modulus());
}

namespace {

std::string rstrip_comment(const std::string& line) {
    std::string s = line;
    if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
    return s;
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c));
    });
}

std::string first_word(const std::string& s) {
    std::istringstream in(s);
    std::string w;
    in >> w;
    return w;
}

}  // namespace

IdealFile parse_ideal_file(std::istream& in) {
    IdealFile file;
    int header = 0;  // 0: expect modulus, 1: vars, 2: order, 3: polynomials
    std::string raw;
    int line_no = 0;
    ResidueRing ring;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = rstrip_comment(raw);
        if (blank(line)) continue;
        std::string word = first_word(line);
        if (header == 0) {
            if (word != "modulus")
                throw ParseError("expected 'modulus'", line_no, 1);
            Cursor cur{line, line.find(word) + word.size(), line_no};
            file.modulus = parse_integer(cur);
            if (!cur.done()) cur.fail("trailing input after modulus");
            if (file.modulus < 2)
                throw ParseError("modulus must be >= 2", line_no, 1);
            ring = ResidueRing(file.modulus);
            header = 1;
        } else if (header == 1) {
            if (word != "vars") throw ParseError("expected 'vars'", line_no, 1);
            Cursor cur{line, line.find(word) + word.size(), line_no};
            while (!cur.done()) {
                int at = cur.col();
                std::string name = parse_ident(cur);
                if (std::find(file.vars.begin(), file.vars.end(), name) !=
                    file.vars.end())
                    throw ParseError("duplicate variable '" + name + "'",
                                     line_no, at);
                file.vars.push_back(std::move(name));
            }
            if (file.vars.empty())
                throw ParseError("at least one variable required", line_no, 1);
            header = 2;
        } else if (header == 2) {
            if (word != "order") throw ParseError("expected 'order'", line_no, 1);
            Cursor cur{line, line.find(word) + word.size(), line_no};
            std::string kind = parse_ident(cur);
            if (kind == "lex")
                file.order = MonomialOrder::lex;
            else if (kind == "degrevlex")
                file.order = MonomialOrder::degrevlex;
            else
                throw ParseError("order must be lex or degrevlex", line_no, 1);
            if (!cur.done()) cur.fail("trailing input after order");
            header = 3;
        } else {
            file.polys.push_back(
                parse_polynomial(line, file.vars, ring, file.order, line_no));
        }
    }
    if (header < 3)
        throw ParseError("incomplete header (modulus, vars, order)", line_no + 1, 1);
    return file;
}

IdealFile parse_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_ideal_file(in);
}

std::string format_polynomial(const Polynomial& f,
                              const std::vector<std::string>& vars) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : f.terms()) {
        if (!first) out << " + ";
        first = false;
        bool coeff_shown = (t.coeff != 1) || t.mon.is_one();
        if (coeff_shown) out << t.coeff;
        bool star = coeff_shown;
        for (std::size_t i = 0; i < t.mon.nvars(); ++i) {
            unsigned e = t.mon.exponent(i);
            if (e == 0) continue;
            if (star) out << "*";
            out << vars.at(i);
            if (e > 1) out << "^" << e;
            star = true;
        }
    }
    return out.str();
}

std::string format_basis(const GroebnerBasis& G,
                         const std::vector<std::string>& vars) {
    std::ostringstream out;
    out << "modulus " << G.ring.modulus() << "\n";
    out << "vars";
    for (const auto& v : vars) out << " " << v;
    out << "\n";
    out << "order " << order_name(G.order) << "\n";
    for (const auto& g : G.elements)
        out << format_polynomial(g, vars) << "\n";
    return out.str();
}

const char* order_name(MonomialOrder order) {
    return order == MonomialOrder::lex ? "lex" : "degrevlex";
}

}  // namespace pirgb
