#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pwnet {

// Closed-form candidate count for strings at edit distance exactly `radius`
// from a length-L string over an alphabet of size N. Supported radii: 0, 1, 2.
std::uint64_t analytic_candidate_count(std::uint64_t length, std::uint64_t alphabet_size,
                                       int radius);

// Sum of the per-case operation counts (insertions, substitutions, deletions and
// their radius-2 combinations). Supported radii: 1, 2. Counts edit-operation
// applications, so it overcounts distinct strings.
std::uint64_t termwise_candidate_count(std::uint64_t length, std::uint64_t alphabet_size,
                                       int radius);

struct EnumerationBudget {
    std::uint64_t max_candidates = 2'000'000;  // distinct strings the closure may reach
};

// Count of distinct strings at edit distance exactly `radius` from p, over the
// given alphabet, by exhaustive closure generation filtered with levenshtein.
std::uint64_t enumerate_exact_neighborhood(std::string_view p,
                                           const std::vector<unsigned char>& alphabet,
                                           int radius, EnumerationBudget budget = {});

// Analytic vs termwise vs (optionally) enumerated counts, side by side.
// The three readings disagree in general and are reported without reconciliation.
struct NeighborhoodCountReport {
    std::uint64_t length = 0;
    std::uint64_t alphabet_size = 0;
    int radius = 0;
    std::uint64_t analytic_count = 0;
    std::uint64_t termwise_count = 0;
    std::optional<std::uint64_t> exact_distinct_count;
};

// Builds the report for the canonical password of the given length (distinct
// alphabet bytes, cycled). When attempt_exact is set, the enumerated count is
// included if it fits the budget and omitted otherwise.
NeighborhoodCountReport make_count_report(std::uint64_t length, std::uint64_t alphabet_size,
                                          int radius, bool attempt_exact,
                                          EnumerationBudget budget = {});

// Flat key=value lines, one field per line.
std::string to_kv_text(const NeighborhoodCountReport& report);

}  // namespace pwnet
