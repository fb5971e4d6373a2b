#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace commop::props {

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr int kDefaultCases = 1000;

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    /// Description of the first failing case, empty when all pass.
    std::string first_failure;
};

/// Commutative ring laws for Rational, EpsPoly and XLaurent; module laws for
/// operator addition and scaling.
SuiteResult ring_axioms(std::uint64_t seed, int cases);
/// D o f = f D + f', apply(A o B, f) = apply(A, apply(B, f)), associativity
/// of composition and the Jacobi identity for commutators.
SuiteResult leibniz_assoc_jacobi(std::uint64_t seed, int cases);
/// A = Q o T + R with ord R < ord T for random monic T.
SuiteResult reduction_round_trip(std::uint64_t seed, int cases);
/// parse(print(A)) = A for text and JSON; print is idempotent on its output.
SuiteResult parser_round_trip(std::uint64_t seed, int cases);
/// sqrt(s^2) = s for s(0) = 1 and fraction_to_series(p/q) * q = p.
SuiteResult series_round_trip(std::uint64_t seed, int cases);

/// Every suite above, in that order.
std::vector<SuiteResult> run_all(std::uint64_t seed = kDefaultSeed, int cases = kDefaultCases);

}  // namespace commop::props
