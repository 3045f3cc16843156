#pragma once

#include <cstdint>

#include "pwnet/corpus.hpp"
#include "pwnet/graph.hpp"

namespace pwnet {

enum class JoinStrategy {
    naive,     // serial reference: every pair, no pruning
    bucketed,  // length-bucketed candidate pruning, OpenMP-parallel
};

struct JoinStats {
    std::uint64_t distance_calls = 0;  // bounded-distance evaluations performed
    std::uint64_t edges = 0;
};

// All-pairs similarity self-join: an edge (i, j, d) exists iff
// d = levenshtein(p_i, p_j) <= threshold. Both strategies produce the same
// edge set; the bucketed output does not depend on the worker count.
PasswordGraph build_graph(const Corpus& corpus, int threshold, JoinStrategy strategy,
                          JoinStats* stats = nullptr);

struct VerifyGuard {
    std::size_t max_records = 2000;  // the naive join is quadratic
};

// True iff the naive and bucketed strategies yield identical edge lists.
bool verify_join(const Corpus& corpus, int threshold, VerifyGuard guard = {});

}  // namespace pwnet
