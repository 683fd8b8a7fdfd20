#ifndef CDIM_REPORT_HPP
#define CDIM_REPORT_HPP

#include <string>

#include "cdim/analysis.hpp"

namespace cdim {

inline constexpr const char* kToolVersion = "cdim 0.1.0";

enum class ReportFormat { text, machine };

/// FNV-1a of the input bytes, rendered "fnv1a64:<16 hex digits>".
std::string input_digest(const std::string& bytes);

/// Text: hypotheses, Delta statistics, per-characteristic verdicts, bounds.
/// Machine: a stable-key JSON document (ring, heights, c, d, t, v, n_primes,
/// delta, w, phi_coker, bounds, verdicts, caveats, tool_version,
/// input_digest). Both renderings are byte-stable for fixed input.
std::string emit_report(const AnalysisReport& report, ReportFormat format,
                        const std::string& digest);

std::string emit_multi_report(const MultiPrimeVerdict& verdict, ReportFormat format,
                              const std::string& digest);

std::string emit_search_report(const SearchResult& result, const SearchParams& params,
                               ReportFormat format);

} // namespace cdim

#endif
