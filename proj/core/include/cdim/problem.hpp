#ifndef CDIM_PROBLEM_HPP
#define CDIM_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "cdim/polynomial.hpp"

namespace cdim {

struct IdealDecl {
    std::string name;
    std::vector<Polynomial> generators;
};

/// Parsed problem file. Generators are raw polynomials: homogeneity and the
/// analysis hypotheses are checked downstream, not here.
struct ProblemFile {
    RingPtr ring;
    std::vector<IdealDecl> ideals;
    std::vector<IdealDecl> bases;
    std::vector<std::uint64_t> coeff_chars; // empty = not declared
    std::optional<int> dim_cap;
};

/// Line-oriented declarations:
///
///   # comment
///   ring: char=7 vars=[X1,X2,X3]
///   ideal I1: X1, X2
///   base P: X3
///   coeff-chars: 0,2,7
///   dim-cap: 3
///
/// Polynomials use integers, rational literals p/q (characteristic 0 only),
/// declared variable names, `+ - * ^` and parentheses. All failures are
/// positioned ParseErrors; the parser accepts arbitrary bytes without
/// crashing.
ProblemFile parse_problem(const std::string& text);

/// Canonical printer; parse_problem(print_problem(p)) reproduces p.
std::string print_problem(const ProblemFile& problem);

bool operator==(const IdealDecl& a, const IdealDecl& b);
bool operator==(const ProblemFile& a, const ProblemFile& b);

} // namespace cdim

#endif
