#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pwnet/corpus.hpp"
#include "pwnet/graph.hpp"

namespace pwnet {

enum class DictionaryLabel { frequency, degree, neighborhood_weight, custom };

const char* to_string(DictionaryLabel label);

// A guessing order over node ids.
struct Dictionary {
    std::vector<NodeId> ordering;
    DictionaryLabel label = DictionaryLabel::custom;
};

// Descending frequency; ties ascending byte-wise password (the canonical order,
// so this is the identity over node ids).
Dictionary rank_by_frequency(const Corpus& corpus);

// Descending static degree at the view's threshold; ties by higher frequency,
// then byte-wise password.
Dictionary rank_by_degree(const ThresholdView& view);

// Descending closed-neighborhood account weight sum_{u in N[v]} f(u).
// One concrete reading of combining a node's frequency with its neighbors'.
Dictionary rank_by_neighborhood_weight(const ThresholdView& view, const Corpus& corpus);

// Union of closed neighborhoods N[v] over the given nodes; sorted, and always a
// superset of the input.
std::vector<NodeId> closed_neighborhood(const ThresholdView& view,
                                        std::span<const NodeId> nodes);

// Total account frequency covered by the closed neighborhood of the
// dictionary's first `size` entries.
std::uint64_t max_successful_guesses(const ThresholdView& view, const Corpus& corpus,
                                     const Dictionary& dict, std::size_t size);

struct CurvePoint {
    std::uint64_t size;
    std::uint64_t gmax;
    double ratio;  // gmax / total_accounts

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct CrackingCurve {
    std::vector<CurvePoint> points;
};

// Coverage for every prefix of the dictionary (or just the given sizes),
// computed with a single running union over the guess order.
CrackingCurve cracking_curve(const ThresholdView& view, const Corpus& corpus,
                             const Dictionary& dict,
                             std::span<const std::uint64_t> sizes = {});

// Least fixpoint of repeated closed-neighborhood expansion: the union of the
// connected components touching the seeds.
std::vector<NodeId> closure_expand(const ThresholdView& view,
                                   std::span<const NodeId> seeds);

}  // namespace pwnet
