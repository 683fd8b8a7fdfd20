#include "cdim/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace cdim {

namespace {

using json = nlohmann::ordered_json;

std::string render_simplex(const Simplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

std::string render_simplex_list(const std::vector<Simplex>& list) {
    if (list.empty()) return "(none)";
    std::string out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) out += " ";
        out += render_simplex(list[i]);
    }
    return out;
}

json simplices_json(const std::vector<Simplex>& list) {
    json arr = json::array();
    for (const Simplex& s : list) arr.push_back(s);
    return arr;
}

json report_json(const AnalysisReport& report, const std::string& digest) {
    json doc;
    doc["ring"] = {{"characteristic", report.ring->field().characteristic()},
                   {"variables", report.ring->variable_names()}};
    doc["heights"] = report.heights;
    doc["c"] = report.c;
    doc["d"] = report.d;
    doc["t"] = report.t;
    doc["v"] = report.v;
    doc["n_primes"] = report.n_primes;
    json counts = json::object();
    for (std::size_t dim = 0; dim < report.delta_counts.size(); ++dim)
        counts[std::to_string(dim)] = report.delta_counts[dim];
    doc["delta"] = {{"counts", counts},
                    {"lambda_t", simplices_json(report.lambda_t)},
                    {"lambda_t1", simplices_json(report.lambda_t1)}};
    json w = json::object(), coker = json::object(), verdicts = json::object();
    for (const CharacteristicVerdict& v : report.verdicts) {
        const std::string key = std::to_string(v.characteristic);
        w[key] = v.w;
        coker[key] = v.phi_coker;
        verdicts[key] = {{"w", v.w},
                         {"conclusion", v.conclusion},
                         {"cd", v.cd_statement},
                         {"cd_attained", v.cd_attained}};
    }
    doc["w"] = w;
    doc["phi_coker"] = coker;
    json sum_table = json::object(), main_table = json::object();
    for (const auto& [p, bound] : report.bounds.sum_table) sum_table[std::to_string(p)] = bound;
    for (const auto& [p, bound] : report.bounds.main_table) main_table[std::to_string(p)] = bound;
    doc["bounds"] = {{"faltings", report.bounds.faltings},
                     {"hl", report.bounds.hl},
                     {"sum", sum_table},
                     {"main", main_table}};
    doc["verdicts"] = verdicts;
    doc["caveats"] = report.caveats;
    doc["tool_version"] = kToolVersion;
    doc["input_digest"] = digest;
    return doc;
}

void report_text(std::ostringstream& out, const AnalysisReport& report) {
    out << "ring: " << report.ring->to_string() << "\n";
    out << "primes: " << report.n_primes;
    if (report.base_label) out << ", base prime " << *report.base_label;
    out << "\n";
    out << "\nhypotheses\n";
    out << "  heights:";
    for (int h : report.heights) out << " " << h;
    out << "\n";
    out << "  c = " << report.c << "  d = " << report.d << "  t = " << report.t
        << "  v = " << report.v << "\n";
    if (report.t == 0)
        out << "  t = 0: the degree -1 homology of a nonempty Delta vanishes, so w = 0\n";

    out << "\ndelta (materialized to dimension " << report.dim_cap << ")\n";
    out << "  simplices per dimension:";
    for (std::size_t dim = 0; dim < report.delta_counts.size(); ++dim)
        out << " " << dim << ":" << report.delta_counts[dim];
    out << "\n";
    out << "  Lambda_" << report.t << " (m-primary " << report.t + 1 << "-fold sums): "
        << render_simplex_list(report.lambda_t) << "\n";
    out << "  Lambda_" << report.t + 1 << ": " << render_simplex_list(report.lambda_t1) << "\n";

    out << "\nverdicts (homology coefficients per characteristic; the criterion itself\n";
    out << "ties the coefficient field to the residue field of the base ring)\n";
    for (const CharacteristicVerdict& v : report.verdicts) {
        out << "  char " << v.characteristic << ": w = " << v.w << "  ->  " << v.conclusion
            << " for every module; " << v.cd_statement << "\n";
    }

    out << "\nbounds\n";
    out << "  faltings  d-[(d-1)/c]          = " << report.bounds.faltings << "\n";
    out << "  hl        d-1-[(d-2)/c]        = " << report.bounds.hl << "\n";
    out << "  sum(p)    d-[(d-1)/c]+p        =";
    for (const auto& [p, bound] : report.bounds.sum_table)
        out << " p=" << p << ":" << bound;
    out << "\n";
    out << "  main(p)   d-1-[(d-2)/c]+p      =";
    if (report.bounds.main_table.empty()) out << " (no admissible p)";
    for (const auto& [p, bound] : report.bounds.main_table)
        out << " p=" << p << ":" << bound;
    out << "\n";

    out << "\ncaveats: ";
    if (report.caveats.empty()) {
        out << "none\n";
    } else {
        out << "\n";
        for (const std::string& caveat : report.caveats) out << "  - " << caveat << "\n";
    }
}

} // namespace

std::string input_digest(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return std::string("fnv1a64:") + buf;
}

std::string emit_report(const AnalysisReport& report, ReportFormat format,
                        const std::string& digest) {
    if (format == ReportFormat::machine) return report_json(report, digest).dump(2) + "\n";
    std::ostringstream out;
    report_text(out, report);
    out << "\n" << kToolVersion << "  input " << digest << "\n";
    return out.str();
}

std::string emit_multi_report(const MultiPrimeVerdict& verdict, ReportFormat format,
                              const std::string& digest) {
    if (format == ReportFormat::machine) {
        json doc;
        json bases = json::array();
        for (const AnalysisReport& report : verdict.per_base)
            bases.push_back(report_json(report, digest));
        doc["bases"] = bases;
        json overall = json::object();
        for (const auto& [chr, ok] : verdict.overall_cd_le_v)
            overall[std::to_string(chr)] = ok;
        doc["overall_cd_le_v"] = overall;
        doc["v"] = verdict.v;
        doc["tool_version"] = kToolVersion;
        doc["input_digest"] = digest;
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < verdict.per_base.size(); ++i) {
        out << "=== base prime " << i + 1 << " of " << verdict.per_base.size() << " ===\n";
        report_text(out, verdict.per_base[i]);
        out << "\n";
    }
    out << "overall verdict (conjunction over base primes)\n";
    for (const auto& [chr, ok] : verdict.overall_cd_le_v)
        out << "  char " << chr << ": " << (ok ? "cd <= " : "cd > ") << verdict.v << "\n";
    out << "\n" << kToolVersion << "  input " << digest << "\n";
    return out.str();
}

std::string emit_search_report(const SearchResult& result, const SearchParams& params,
                               ReportFormat format) {
    if (format == ReportFormat::machine) {
        json doc;
        doc["params"] = {{"vars", params.n_vars},
                         {"height", params.height},
                         {"primes", params.n_primes},
                         {"trials", params.trials},
                         {"seed", params.seed},
                         {"base_characteristic", params.base_field.characteristic()}};
        json findings = json::array();
        for (const SearchFinding& finding : result.findings) {
            json w = json::object();
            for (const auto& [chr, value] : finding.w) w[std::to_string(chr)] = value;
            findings.push_back({{"trial", finding.trial},
                                {"seed", finding.seed},
                                {"ideals", finding.ideals},
                                {"w", w}});
        }
        doc["findings"] = findings;
        doc["completed"] = result.completed;
        doc["skipped"] = result.skipped;
        doc["tool_version"] = kToolVersion;
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "search: " << params.trials << " trial(s) over " << params.base_field.to_string()
        << ", " << params.n_primes << " prime(s) on " << params.height
        << " linear form(s) in " << params.n_vars << " variable(s), seed " << params.seed
        << "\n";
    out << "completed " << result.completed << ", skipped " << result.skipped << ", findings "
        << result.findings.size() << "\n";
    for (const SearchFinding& finding : result.findings) {
        out << "\nfinding at trial " << finding.trial << " (seed " << finding.seed << ")\n";
        for (const std::string& ideal : finding.ideals) out << "  " << ideal << "\n";
        out << "  w:";
        for (const auto& [chr, value] : finding.w) out << " char " << chr << " -> " << value;
        out << "\n";
    }
    return out.str();
}

} // namespace cdim
