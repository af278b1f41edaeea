#pragma once

/**
 * Batch driver: per-pair exclusion reports, global checks and their
 * JSON-lines / TSV serialization.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cuboid/bigint.hpp"
#include "cuboid/error.hpp"

namespace cuboid::report {

inline constexpr int kSchema = 1;

enum class Check { Star, Even44, Conj44, Quad26, GcdLemma, EcTorsion, Residuals, Oracle, Full };

std::string_view to_string(Check c) noexcept;
// Comma separated names, e.g. "star,oracle". Throws Error{ParseError}.
std::set<Check> parse_checks(std::string_view list);
bool is_global(Check c) noexcept;

enum class Format { JsonLines, Tsv };

struct RunConfig {
    std::int64_t a_max = 1;
    std::int64_t u_max = 1;
    std::optional<std::string> pairs_file;
    std::set<Check> checks{Check::Star, Check::Even44, Check::Conj44, Check::Quad26, Check::Oracle};
    std::uint64_t prime_limit = 200;
    std::optional<std::string> output;  // stdout when empty
    Format format = Format::JsonLines;
    unsigned jobs = 1;
    bool timing = false;

    std::int64_t gcd_max_abs = 500;
    std::int64_t gcd_param_range = 10;
    std::int64_t residual_bound = 2000;
    std::int64_t p2_residual_bound = 1000;

    // Throws Error{ParseError} naming the offending field.
    void validate() const;
};

struct StarCheck {
    Int bound;
    std::vector<Int> solutions;
    friend bool operator==(const StarCheck&, const StarCheck&) = default;
};

struct Even44Check {
    std::vector<std::vector<Int>> candidates;  // [p, q, r, s]
    friend bool operator==(const Even44Check&, const Even44Check&) = default;
};

struct Conj44Check {
    std::vector<std::vector<Int>> candidates;  // [alpha, beta, gamma, delta]
    std::uint64_t divisor_pairs = 0;
    std::uint64_t same_parity_pairs = 0;
    Int negative_branch_residual;
    std::optional<Int> min_completed_square;
    friend bool operator==(const Conj44Check&, const Conj44Check&) = default;
};

struct Quad26Check {
    std::vector<Int> divisors;  // q with (t^2 + q) | P
    std::uint64_t divisors_scanned = 0;
    std::string disc_route;     // "blocked" or "square"
    bool routes_agree = false;
    bool excluded = false;
    friend bool operator==(const Quad26Check&, const Quad26Check&) = default;
};

struct OracleCheck {
    std::string verdict;  // "Proven" or "Inconclusive"
    std::vector<std::uint64_t> primes;
    std::vector<std::uint64_t> skipped;
    std::vector<unsigned> intersection;
    friend bool operator==(const OracleCheck&, const OracleCheck&) = default;
};

struct FullCheck {
    // "Proven" (structural and oracle), "Excluded" (structural only) or "Failed"
    std::string verdict;
    bool structural_complete = false;
    std::string oracle_verdict;
    std::vector<std::pair<std::string, std::string>> patterns;  // (pattern, evidence)
    friend bool operator==(const FullCheck&, const FullCheck&) = default;
};

struct ReportError {
    ErrorCode code;
    std::string message;
    friend bool operator==(const ReportError&, const ReportError&) = default;
};

struct ExclusionReport {
    std::optional<Int> a, u;
    std::optional<std::uint64_t> line;  // pairs-file line of an unparsable row
    std::optional<ReportError> error;
    std::optional<Int> delta;
    std::vector<Int> coeffs;  // A, B, C, D
    std::optional<StarCheck> star;
    std::optional<Even44Check> even44;
    std::optional<Conj44Check> conj44;
    std::optional<Quad26Check> quad26;
    std::optional<OracleCheck> oracle;
    std::optional<FullCheck> full;
    std::map<std::string, double> elapsed_ms;  // filled only when timing

    // A found factor, a star solution or a failed exclusion.
    bool violation() const;
    friend bool operator==(const ExclusionReport&, const ExclusionReport&) = default;
};

nlohmann::ordered_json to_json(const ExclusionReport& r);
// Throws Error{ParseError} on malformed input.
ExclusionReport from_json(const nlohmann::ordered_json& j);

// Header and one row per report.
std::string tsv_header();
std::string to_tsv(const ExclusionReport& r);

// One report for (a, u); validation failures are reported, not thrown.
ExclusionReport run_pair(const Int& a, const Int& u, const RunConfig& config);

struct EcSuiteItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct EcSuiteReport {
    std::vector<EcSuiteItem> items;
    bool all_pass() const;
};

EcSuiteReport run_ec_suite();
nlohmann::ordered_json to_json(const EcSuiteReport& r);

struct Summary {
    std::size_t reports = 0;
    std::size_t invalid = 0;
    std::size_t proven = 0;
    std::size_t inconclusive = 0;
    std::size_t violations = 0;
    nlohmann::ordered_json global = nlohmann::ordered_json::object();
};

nlohmann::ordered_json to_json(const Summary& s);

// Work items in output order: pairs-file rows, or ordered coprime pairs
// a != u with 1 <= a <= a_max, 1 <= u <= u_max, lexicographic.
struct WorkItem {
    std::optional<Int> a, u;
    std::uint64_t line = 0;
    std::string row;
};
// Throws Error{ParseError} if the pairs file cannot be read.
std::vector<WorkItem> work_items(const RunConfig& config);

struct BatchResult {
    std::vector<ExclusionReport> reports;
    Summary summary;
};

BatchResult run_batch(const RunConfig& config);
void write_batch(const BatchResult& result, Format format, std::ostream& out);

// 0 clean, 1 violation.
int exit_code(const BatchResult& result);

}  // namespace cuboid::report
