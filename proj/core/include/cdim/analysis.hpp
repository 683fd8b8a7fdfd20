#ifndef CDIM_ANALYSIS_HPP
#define CDIM_ANALYSIS_HPP

#include <optional>

#include "cdim/mv.hpp"

namespace cdim {

struct ValidationResult {
    std::vector<int> dimensions; // dim(R/I_j)
    std::vector<int> heights;    // ambient heights n_vars - dim
    int c = 0;                   // max height
    int d = 0;                   // n_vars, or dim(R/P) when a base is given
    int t = 0;                   // [(d-2)/c]
    int v = 0;                   // d - 1 - t
    bool all_linear = true;
    std::vector<std::string> caveats;
};

/// Checks the hypotheses the criterion needs: proper homogeneous inputs,
/// c < d, d >= 2, pairwise irredundant primes; collects caveat flags for
/// whatever cannot be machine-certified (everything nonlinear).
ValidationResult validate_hypotheses(const std::vector<Ideal>& primes,
                                     const std::optional<Ideal>& base);

struct CharacteristicVerdict {
    std::uint64_t characteristic = 0;
    int w = 0;         // dim of reduced homology in degree t-1
    int phi_coker = 0; // independent route via the MV-row cokernel
    int relative = 0;  // independent route via the pair (S, Delta)
    std::string conclusion;   // e.g. "H^4_I = 0" or "H^4_I ≅ (H^6_m)^1"
    std::string cd_statement; // e.g. "cd <= 3" or "cd = 4"
    bool cd_attained = false;
};

struct AnalysisBounds {
    int faltings = 0;
    int hl = 0;
    std::vector<std::pair<int, int>> sum_table;  // (p, d - [(d-1)/c] + p)
    std::vector<std::pair<int, int>> main_table; // (p, d-1-[(d-2)/c]+p), valid p only
};

struct AnalysisReport {
    RingPtr ring;
    int n_vars = 0;
    int d = 0;
    int c = 0;
    int n_primes = 0;
    int t = 0;
    int v = 0;
    std::vector<int> heights;
    int dim_cap = 0;
    std::vector<std::size_t> delta_counts; // simplices per dimension, 0..dim_cap
    std::vector<Simplex> lambda_t;
    std::vector<Simplex> lambda_t1;
    std::vector<CharacteristicVerdict> verdicts; // ascending characteristic
    AnalysisBounds bounds;
    std::vector<std::string> caveats;
    std::optional<std::string> base_label;
};

/// Full pipeline: validate, build Delta to max(t+1, requested cap), compute
/// w over every requested coefficient characteristic, cross-check it against
/// the MV cokernel and the pair homology (disagreement is an internal
/// error), and assemble verdicts and bounds.
AnalysisReport analyze(const std::vector<Ideal>& primes, const std::optional<Ideal>& base,
                       const std::vector<FieldSpec>& characteristics,
                       std::optional<int> dim_cap_request = std::nullopt);

struct MultiPrimeVerdict {
    std::vector<AnalysisReport> per_base;
    std::map<std::uint64_t, bool> overall_cd_le_v; // conjunction across bases
    int v = 0;
};

/// One Delta_i per listed base prime, all of one dimension d; cd <= v
/// exactly when every Delta_i has vanishing homology in degree t-1.
MultiPrimeVerdict analyze_multi_base(const std::vector<Ideal>& primes,
                                     const std::vector<Ideal>& bases,
                                     const std::vector<FieldSpec>& characteristics,
                                     std::optional<int> dim_cap_request = std::nullopt);

/// The six height-two primes realizing the characteristic-dependent example
/// in a six-variable ring. pre: a differs from 0, 1, -1 and a^2+a-1 != 0.
std::vector<Ideal> example_hl(const FieldElement& a, const RingPtr& ring);

struct SearchParams {
    int n_vars = 6;
    int height = 2;
    int n_primes = 6;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<FieldSpec> characteristics;
    FieldSpec base_field = FieldSpec::prime_field(7);
};

struct SearchFinding {
    int trial = -1;
    std::uint64_t seed = 0;
    std::vector<std::string> ideals;    // generator renderings
    std::map<std::uint64_t, int> w;     // characteristic -> w
};

struct SearchResult {
    std::vector<SearchFinding> findings;
    int completed = 0;
    int skipped = 0;
};

/// The w profile of one arrangement; engaged only when w differs across the
/// requested characteristics.
std::optional<SearchFinding> evaluate_arrangement(const std::vector<Ideal>& primes,
                                                  const std::vector<FieldSpec>& characteristics);

/// Random arrangements of n_primes ideals on `height` linear forms each;
/// reports every characteristic-dependent configuration with the per-trial
/// seed that regenerates it. Draws violating the hypotheses are skipped and
/// counted.
SearchResult search_char_dependence(const SearchParams& params);

/// splitmix64 mixer for reproducible per-trial seed derivation.
std::uint64_t mix_seed(std::uint64_t x);

} // namespace cdim

#endif
