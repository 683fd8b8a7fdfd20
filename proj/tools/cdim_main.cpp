// Command-line surface of the toolkit: batch analyses of prime arrangements,
// standalone homology of complexes, the stock characteristic-dependent
// example, the vanishing-bound calculator, a Groebner basis printer and the
// randomized configuration search.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cdim/problem.hpp"
#include "cdim/report.hpp"

namespace {

using namespace cdim;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<FieldSpec> parse_char_list(const std::string& csv) {
    std::vector<FieldSpec> out;
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) throw UsageError("empty entry in characteristic list");
        out.emplace_back(static_cast<std::uint64_t>(std::stoull(token)));
    }
    if (out.empty()) throw UsageError("empty characteristic list");
    return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ',')) out.push_back(std::stoi(token));
    if (out.empty()) throw UsageError("empty list");
    return out;
}

std::vector<Ideal> ideals_of(const ProblemFile& problem, const std::vector<IdealDecl>& decls) {
    std::vector<Ideal> out;
    for (const IdealDecl& decl : decls) out.emplace_back(problem.ring, decl.generators);
    return out;
}

std::vector<FieldSpec> default_characteristics(const FieldSpec& base) {
    std::vector<FieldSpec> chars{FieldSpec::rationals(), FieldSpec::prime_field(2)};
    if (!base.is_rational() && base.characteristic() != 2) chars.push_back(base);
    return chars;
}

int run_analyze(const std::string& path, const std::string& chars_csv,
                std::optional<int> dim_cap, bool machine) {
    const std::string bytes = read_file(path);
    ProblemFile problem = parse_problem(bytes);
    if (problem.ideals.empty()) throw UsageError("the problem file declares no ideals");

    std::vector<FieldSpec> chars;
    if (!chars_csv.empty())
        chars = parse_char_list(chars_csv);
    else if (!problem.coeff_chars.empty())
        for (std::uint64_t c : problem.coeff_chars) chars.emplace_back(c);
    else
        chars = default_characteristics(problem.ring->field());

    if (!dim_cap && problem.dim_cap) dim_cap = problem.dim_cap;
    std::vector<Ideal> primes = ideals_of(problem, problem.ideals);
    std::vector<Ideal> bases = ideals_of(problem, problem.bases);

    const std::string digest = input_digest(bytes);
    const ReportFormat format = machine ? ReportFormat::machine : ReportFormat::text;
    if (bases.size() > 1) {
        MultiPrimeVerdict verdict = analyze_multi_base(primes, bases, chars, dim_cap);
        std::cout << emit_multi_report(verdict, format, digest);
    } else {
        std::optional<Ideal> base;
        if (!bases.empty()) base = bases.front();
        AnalysisReport report = analyze(primes, base, chars, dim_cap);
        std::cout << emit_report(report, format, digest);
    }
    return 0;
}

SimplicialComplex builtin_complex(const std::string& spec) {
    auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    if (kind == "rp2") return rp2_six_vertex();
    if (colon == std::string::npos)
        throw UsageError("builtin complex needs a size, e.g. full:4 or sphere:5");
    const int n = std::stoi(spec.substr(colon + 1));
    if (kind == "full") return full_simplex(n);
    if (kind == "sphere") return sphere_boundary(n);
    throw UsageError("unknown builtin complex '" + kind + "'");
}

int run_homology(const std::string& complex_path, const std::string& builtin,
                 std::uint64_t characteristic, const std::string& degrees_csv) {
    if (complex_path.empty() == builtin.empty())
        throw UsageError("give exactly one of --complex and --builtin");
    SimplicialComplex complex = [&]() {
        if (!builtin.empty()) return builtin_complex(builtin);
        std::ifstream in(complex_path);
        if (!in) throw UsageError("cannot open " + complex_path);
        return SimplicialComplex::deserialize(in);
    }();
    const FieldSpec field(characteristic);
    const std::vector<int> degrees = parse_int_list(degrees_csv);
    // Loaded and builtin complexes are complete, so layers above their top
    // dimension are genuinely empty and the cap may be padded for any
    // requested degree.
    int needed_cap = complex.dim_cap();
    for (int s : degrees) needed_cap = std::max(needed_cap, s + 1);
    if (needed_cap > 128) throw UsageError("degree too large");
    if (needed_cap > complex.dim_cap()) complex = complex.with_cap(needed_cap);
    BettiProfile profile = reduced_betti(complex, field, degrees);
    std::cout << "complex: " << complex.n_vertices() << " vertices, simplices per dimension";
    for (int d = 0; d <= complex.dim_cap(); ++d) {
        if (std::size_t c = complex.count(d)) std::cout << " " << d << ":" << c;
    }
    std::cout << "\ncoefficients: " << field.to_string() << "\n";
    for (int s : degrees)
        std::cout << "dim H~_" << s << " = " << profile.reduced.at(s) << "\n";
    return 0;
}

int run_example_hl(const std::string& a_text, std::uint64_t characteristic,
                   const std::string& emit_path, bool do_analyze, bool machine) {
    const FieldSpec field(characteristic);
    FieldElement a = [&]() {
        auto slash = a_text.find('/');
        if (slash != std::string::npos) {
            if (!field.is_rational())
                throw UsageError("rational a requires characteristic 0");
            return FieldElement::from_rational(mpz_class(a_text.substr(0, slash)),
                                               mpz_class(a_text.substr(slash + 1)));
        }
        return FieldElement::from_integer(field, std::stoll(a_text));
    }();

    std::vector<std::string> names;
    for (int i = 1; i <= 6; ++i) names.push_back("X" + std::to_string(i));
    RingPtr ring = make_ring(field, names);
    std::vector<Ideal> ideals = example_hl(a, ring);

    ProblemFile problem;
    problem.ring = ring;
    for (std::size_t i = 0; i < ideals.size(); ++i)
        problem.ideals.push_back(
            IdealDecl{"I" + std::to_string(i + 1), ideals[i].generators()});
    for (const FieldSpec& f : default_characteristics(field))
        problem.coeff_chars.push_back(f.characteristic());
    std::sort(problem.coeff_chars.begin(), problem.coeff_chars.end());
    const std::string text = print_problem(problem);

    if (!emit_path.empty()) {
        std::ofstream out(emit_path, std::ios::binary);
        if (!out) throw UsageError("cannot write " + emit_path);
        out << text;
    }
    if (do_analyze) {
        std::vector<FieldSpec> chars;
        for (std::uint64_t c : problem.coeff_chars) chars.emplace_back(c);
        AnalysisReport report = analyze(ideals, std::nullopt, chars);
        std::cout << emit_report(report, machine ? ReportFormat::machine : ReportFormat::text,
                                 input_digest(text));
    } else if (emit_path.empty()) {
        std::cout << text;
    }
    return 0;
}

int run_bounds(int d, int c, std::optional<int> p) {
    std::cout << "faltings(d=" << d << ", c=" << c << ") = " << bound_faltings(d, c) << "\n";
    std::cout << "hl(d=" << d << ", c=" << c << ") = " << bound_hl(d, c) << "\n";
    if (p) {
        std::cout << "sum(d=" << d << ", c=" << c << ", p=" << *p
                  << ") = " << bound_sum(d, c, *p) << "\n";
        std::cout << "main(d=" << d << ", c=" << c << ", p=" << *p
                  << ") = " << bound_main(d, c, *p) << "\n";
    }
    return 0;
}

int run_gb(const std::string& path, const std::string& name, const std::string& order_name) {
    ProblemFile problem = parse_problem(read_file(path));
    const std::vector<Polynomial>* generators = nullptr;
    for (const IdealDecl& decl : problem.ideals)
        if (decl.name == name) generators = &decl.generators;
    for (const IdealDecl& decl : problem.bases)
        if (decl.name == name) generators = &decl.generators;
    if (!generators) throw UsageError("no ideal named '" + name + "' in " + path);
    MonomialOrder order = MonomialOrder::grevlex();
    if (order_name == "lex")
        order = MonomialOrder::lex();
    else if (order_name != "grevlex")
        throw UsageError("unknown order '" + order_name + "'");
    GroebnerBasis basis = buchberger(problem.ring, *generators, order);
    std::cout << "# reduced Groebner basis of " << name << " under " << order.name() << "\n";
    if (basis.elements().empty()) std::cout << "0\n";
    for (const Polynomial& g : basis.elements()) std::cout << g.to_string() << "\n";
    return 0;
}

int run_search(int vars, int height, int primes, int trials, std::uint64_t seed,
               const std::string& chars_csv, std::uint64_t base_char, bool machine) {
    SearchParams params;
    params.n_vars = vars;
    params.height = height;
    params.n_primes = primes;
    params.trials = trials;
    params.seed = seed;
    params.base_field = FieldSpec(base_char);
    params.characteristics =
        chars_csv.empty() ? default_characteristics(params.base_field) : parse_char_list(chars_csv);
    SearchResult result = search_char_dependence(params);
    std::cout << emit_search_report(result, params,
                                    machine ? ReportFormat::machine : ReportFormat::text);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorial criteria for local cohomology vanishing"};
    app.require_subcommand(1);

    std::string file, chars_csv, degrees_csv, complex_path, builtin, a_text, emit_path;
    std::string ideal_name, order_name = "grevlex";
    bool machine = false, do_analyze = false;
    int opt_d = 0, opt_c = 0;
    std::optional<int> opt_p, dim_cap;
    std::uint64_t characteristic = 0, seed = 0, base_char = 7;
    int vars = 6, height = 2, n_primes = 6, trials = 0;

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "analyze a problem file");
    analyze_cmd->add_option("file", file, "problem file")->required();
    analyze_cmd->add_option("--coeff-chars", chars_csv, "homology coefficient characteristics");
    analyze_cmd->add_option("--dim-cap", dim_cap, "materialize Delta up to this dimension");
    analyze_cmd->add_flag("--machine", machine, "stable-key JSON output");

    CLI::App* homology_cmd = app.add_subcommand("homology", "reduced homology of a complex");
    homology_cmd->add_option("--complex", complex_path, "complex file, one simplex per line");
    homology_cmd->add_option("--builtin", builtin, "full:N | sphere:N | rp2");
    homology_cmd->add_option("--char", characteristic, "coefficient characteristic")->required();
    homology_cmd->add_option("--degrees", degrees_csv, "comma-separated degrees")->required();

    CLI::App* example_cmd = app.add_subcommand("example-hl", "the six-prime realization");
    example_cmd->add_option("--a", a_text, "parameter a (integer, or p/q over QQ)")->required();
    example_cmd->add_option("--char", characteristic, "base field characteristic")->required();
    example_cmd->add_option("--emit", emit_path, "write the problem file here");
    example_cmd->add_flag("--analyze", do_analyze, "run the analysis right away");
    example_cmd->add_flag("--machine", machine, "stable-key JSON output");

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "vanishing bound formulas");
    bounds_cmd->add_option("--d", opt_d, "dimension d")->required();
    bounds_cmd->add_option("--c", opt_c, "height bound c")->required();
    bounds_cmd->add_option("--p", opt_p, "number of summands minus one");

    CLI::App* gb_cmd = app.add_subcommand("gb", "print a reduced Groebner basis");
    gb_cmd->add_option("file", file, "problem file")->required();
    gb_cmd->add_option("--ideal", ideal_name, "ideal name")->required();
    gb_cmd->add_option("--order", order_name, "grevlex | lex");

    CLI::App* search_cmd = app.add_subcommand("search", "hunt for characteristic dependence");
    search_cmd->add_option("--vars", vars, "number of variables")->required();
    search_cmd->add_option("--height", height, "linear forms per prime")->required();
    search_cmd->add_option("--primes", n_primes, "number of primes")->required();
    search_cmd->add_option("--trials", trials, "number of random arrangements")->required();
    search_cmd->add_option("--seed", seed, "master seed")->required();
    search_cmd->add_option("--coeff-chars", chars_csv, "homology coefficient characteristics");
    search_cmd->add_option("--base-char", base_char, "base field characteristic (default 7)");
    search_cmd->add_flag("--machine", machine, "stable-key JSON output");

    try {
        app.parse(argc, argv);
        if (*analyze_cmd) return run_analyze(file, chars_csv, dim_cap, machine);
        if (*homology_cmd) return run_homology(complex_path, builtin, characteristic, degrees_csv);
        if (*example_cmd)
            return run_example_hl(a_text, characteristic, emit_path, do_analyze, machine);
        if (*bounds_cmd) return run_bounds(opt_d, opt_c, opt_p);
        if (*gb_cmd) return run_gb(file, ideal_name, order_name);
        if (*search_cmd)
            return run_search(vars, height, n_primes, trials, seed, chars_csv, base_char, machine);
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const cdim::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 1;
    } catch (const InternalError& e) {
        std::cerr << "internal invariant breach (please report): " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
