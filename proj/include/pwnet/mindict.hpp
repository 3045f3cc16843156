#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pwnet/attack.hpp"
#include "pwnet/corpus.hpp"
#include "pwnet/graph.hpp"

namespace pwnet {

enum class DominatingMethod { greedy, exact };

const char* to_string(DominatingMethod method);

struct DominatingSetResult {
    std::vector<NodeId> nodes;  // greedy: pick order; exact: ascending ids
    std::size_t size = 0;
    DominatingMethod method = DominatingMethod::greedy;
    std::uint64_t covered_accounts = 0;
    std::optional<double> arnautov_bound;
    bool is_dominating = false;
};

// Repeatedly pick the node covering the most currently-uncovered vertices
// (ties: higher frequency, then byte-wise password, i.e. lowest node id).
DominatingSetResult greedy_dominating_set(const ThresholdView& view);

// Minimum-cardinality dominating set by branch and bound; guarded because the
// problem is NP-hard.
DominatingSetResult exact_dominating_set(const ThresholdView& view,
                                         std::size_t node_budget = 20);

// n * (1 + ln(k + 1)) / (k + 1): every n-vertex graph with minimum degree k
// has a dominating set at most this large.
double arnautov_bound(std::size_t n, std::size_t min_degree);

// Greedy selection maximizing newly covered account weight per pick, stopping
// once covered_accounts / total_accounts >= target_ratio. Pick order returned
// as a custom dictionary.
Dictionary partial_dominating_dictionary(const ThresholdView& view, const Corpus& corpus,
                                         double target_ratio);

}  // namespace pwnet
