#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "pirgb/io.hpp"
#include "pirgb/oracle.hpp"
#include "pirgb/split_lift.hpp"
#include "pirgb/systems.hpp"

namespace {

using namespace pirgb;

MonomialOrder order_from_name(const std::string& name) {
    if (name == "lex") return MonomialOrder::lex;
    if (name == "degrevlex") return MonomialOrder::degrevlex;
    throw CLI::ValidationError("--order", "must be lex or degrevlex");
}

GeneratorSet reorder(const GeneratorSet& gens, MonomialOrder order) {
    GeneratorSet out;
    out.ring = gens.ring;
    out.order = order;
    out.nvars = gens.nvars;
    for (const auto& f : gens.polys) {
        std::vector<Term> terms(f.terms().begin(), f.terms().end());
        out.polys.push_back(
            Polynomial::from_terms(gens.ring, order, gens.nvars, std::move(terms)));
    }
    return out;
}

int run_gb(const std::string& path, const std::string& engine,
           const std::string& order_override, bool trace, bool parallel) {
    IdealFile file = parse_ideal_file(path);
    GeneratorSet gens = file.generators();
    if (!order_override.empty())
        gens = reorder(gens, order_from_name(order_override));
    SplitOptions opts;
    opts.parallel = parallel;
    GroebnerBasis basis;
    if (engine == "classic") {
        basis = strong_buchberger(gens);
    } else if (engine == "naive") {
        basis = naive_strong_gb(gens, opts);
    } else {
        Alg4Result result = strong_gb_over_zn(gens, opts);
        basis = std::move(result.basis);
        if (trace) std::cerr << result.tree.to_text();
    }
    std::cout << format_basis(basis, file.vars);
    return 0;
}

int run_verify(const std::string& ideal_path, const std::string& basis_path,
               int degree) {
    IdealFile ideal = parse_ideal_file(ideal_path);
    IdealFile basis_file = parse_ideal_file(basis_path);
    if (ideal.modulus != basis_file.modulus || ideal.vars != basis_file.vars ||
        ideal.order != basis_file.order) {
        std::cerr << "error: basis and ideal headers disagree\n";
        return 2;
    }
    GeneratorSet gens = ideal.generators();
    GroebnerBasis G;
    G.ring = gens.ring;
    G.order = gens.order;
    G.nvars = gens.nvars;
    G.elements = basis_file.polys;
    unsigned floor = default_degree_bound(G, gens) - 2;
    if (degree > 0 && static_cast<unsigned>(degree) < floor) {
        std::cerr << "error: --degree must be at least " << floor
                  << " (the largest degree in the input files)\n";
        return 2;
    }
    unsigned D = degree > 0 ? static_cast<unsigned>(degree)
                            : default_degree_bound(G, gens);
    StrongGbReport report = is_strong_gb(G, gens, D);
    if (report.ok) {
        std::cout << "verified: strong Groebner basis on the degree-" << D
                  << " slice\n";
        return 0;
    }
    std::cout << "not a strong Groebner basis: " << report.describe() << "\n";
    if (report.counterexample)
        std::cout << "counterexample: "
                  << format_polynomial(*report.counterexample, ideal.vars)
                  << "\n";
    return 1;
}

struct BenchModulus {
    std::string label;
    mpz_class n;
};

std::vector<BenchModulus> suite_moduli(const std::string& suite, bool large_n) {
    mpz_class squarefree = large_n
        ? mpz_class(2) * 3 * 5 * 7 * 11 * 13 * 17 * 19 * 23
        : mpz_class(210);
    mpz_class semiprime = large_n ? mpz_class(32771) * 32779 : mpz_class(101) * 103;
    mpz_class powers = large_n
        ? mpz_class(27) * 125 * 343 * 1331
        : mpz_class(900);
    if (suite == "squarefree-small") return {{suite, squarefree}};
    if (suite == "semiprime") return {{suite, semiprime}};
    if (suite == "prime-powers") return {{suite, powers}};
    if (suite == "all")
        return {{"squarefree-small", squarefree},
                {"semiprime", semiprime},
                {"prime-powers", powers}};
    throw CLI::ValidationError("--suite",
                               "must be squarefree-small, semiprime, "
                               "prime-powers or all");
}

int run_bench(const std::string& suite, bool large_n,
              const std::vector<std::string>& systems,
              const std::vector<std::string>& engines,
              const std::string& order_name_str, bool parallel) {
    MonomialOrder order = order_from_name(order_name_str);
    auto moduli = suite_moduli(suite, large_n);
    std::vector<std::string> names = systems.empty() ? bench_corpus() : systems;
    SplitOptions opts;
    opts.parallel = parallel;
    for (const auto& mod : moduli) {
        for (const auto& name : names) {
            NamedSystem sys = make_system(name, mod.n, order);
            for (const auto& engine : engines) {
                auto start = std::chrono::steady_clock::now();
                std::size_t size = 0;
                if (engine == "split") {
                    size = strong_gb_over_zn(sys.gens, opts).basis.elements.size();
                } else if (engine == "naive") {
                    size = naive_strong_gb(sys.gens, opts).elements.size();
                } else if (engine == "classic") {
                    size = strong_buchberger(sys.gens).elements.size();
                } else {
                    throw CLI::ValidationError("--engines",
                                               "must be among split, naive, classic");
                }
                auto stop = std::chrono::steady_clock::now();
                double ms = std::chrono::duration<double, std::milli>(stop - start)
                                .count();
                std::cout << sys.name << " n=" << mod.n << " (" << mod.label
                          << ") " << engine << " time=" << ms
                          << "ms basis=" << size << "\n";
                std::cout.flush();
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong Groebner bases over Z/nZ"};
    app.require_subcommand(1);

    std::string gb_path, gb_order, verify_ideal, verify_basis;
    bool gb_naive = false, gb_classic = false, gb_trace = false,
         gb_parallel = false;
    auto* gb = app.add_subcommand("gb", "compute a strong Groebner basis");
    gb->add_option("ideal", gb_path, "ideal file")->required();
    gb->add_flag("--naive", gb_naive, "factor the modulus up front");
    gb->add_flag("--classic", gb_classic, "full ring algorithm, no splitting");
    gb->add_option("--order", gb_order, "override the order (lex|degrevlex)");
    gb->add_flag("--trace", gb_trace, "print the split tree to stderr");
    gb->add_flag("--parallel", gb_parallel, "run split branches concurrently");

    int verify_degree = 0;
    auto* verify = app.add_subcommand("verify", "check a claimed strong basis");
    verify->add_option("ideal", verify_ideal, "ideal file")->required();
    verify->add_option("--basis", verify_basis, "basis file")->required();
    verify->add_option("--degree", verify_degree, "slice degree bound");

    std::string bench_suite = "squarefree-small", bench_order = "degrevlex";
    std::vector<std::string> bench_systems, bench_engines = {"split"};
    bool bench_large_n = false, bench_parallel = false;
    auto* bench = app.add_subcommand("bench", "run the benchmark corpus");
    bench->add_option("--suite", bench_suite,
                      "modulus preset (squarefree-small|semiprime|prime-powers|all)");
    bench->add_flag("--large-n", bench_large_n, "use the full-size benchmark moduli");
    bench->add_option("--systems", bench_systems, "subset of the corpus");
    bench->add_option("--engines", bench_engines, "engines to time (split,naive,classic)");
    bench->add_option("--order", bench_order, "monomial order");
    bench->add_flag("--parallel", bench_parallel, "run split branches concurrently");

    try {
        app.parse(argc, argv);
        if (gb->parsed()) {
            if (gb_naive && gb_classic) {
                std::cerr << "error: --naive and --classic are exclusive\n";
                return 2;
            }
            std::string engine = gb_naive ? "naive"
                                : gb_classic ? "classic"
                                             : "split";
            return run_gb(gb_path, engine, gb_order, gb_trace, gb_parallel);
        }
        if (verify->parsed())
            return run_verify(verify_ideal, verify_basis, verify_degree);
        if (bench->parsed())
            return run_bench(bench_suite, bench_large_n, bench_systems,
                             bench_engines, bench_order, bench_parallel);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const pirgb::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
