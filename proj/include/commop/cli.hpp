#pragma once

#include "commop/pipeline.hpp"
#include "commop/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace commop::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Shared command options; defaults match the command line.
struct Options {
    /// Empty means symbolic eps.
    std::optional<Rational> eps;
    unsigned precision = 60;
    /// Series truncation order for the rank-3 checks.
    int order = 16;
    pipeline::Window window;
    std::uint64_t seed = kDefaultSeed;
    /// Krichever-Novikov sample points.
    std::vector<Rational> points = default_points();
    /// Use the printed formulas verbatim where errata are documented.
    bool literal = false;

    static std::vector<Rational> default_points();
};

enum class Outcome { Pass, Fail, Finding };
std::string_view outcome_name(Outcome o);

using DetailValue = std::variant<std::string, long long, bool, std::vector<std::string>>;

struct Check {
    std::string name;
    Outcome outcome = Outcome::Pass;
    std::string summary;
    std::vector<std::pair<std::string, DetailValue>> details;
};

struct Report {
    std::string command;
    std::string target;
    Options inputs;
    std::vector<Check> checks;
    std::vector<std::string> artifacts;
    double wall_time_seconds = 0;

    /// No check failed (findings do not count as failures).
    [[nodiscard]] bool passed() const;
    [[nodiscard]] Outcome outcome() const;
};

/// Machine-readable report (schema in docs/report-schema.md); key order and
/// formatting are fixed, so only wall_time_seconds varies between runs.
std::string to_json(const Report& r);
/// One line per check plus a verdict line.
std::string to_text(const Report& r);

/// Suites: all, commute, bc, limit, rank, kn. Throws std::invalid_argument
/// on an unknown suite or inconsistent options.
Report verify(std::string_view suite, const Options& opt);

/// Targets: l1, l2, bc. Writes the derived object to `out_path` (operator
/// text or the relation) and records the path in the report.
Report construct(std::string_view target, const Options& opt, const std::string& out_path);

/// "lo..hi" with lo < hi.
pipeline::Window parse_window(std::string_view text);
/// "symbolic" or a rational.
std::optional<Rational> parse_eps(std::string_view text);
/// A count 1..5 (prefix of the default points) or a comma-separated list of rationals.
std::vector<Rational> parse_points(std::string_view text);

/// Reads an operator file, or one of the built-in names l1, l2, l2mu, calL.
XOp load_operator(const std::string& path_or_name);

}  // namespace commop::cli
