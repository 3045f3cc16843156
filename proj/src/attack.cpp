#include "pwnet/attack.hpp"

#include <algorithm>
#include <numeric>

#include "pwnet/errors.hpp"

namespace pwnet {

const char* to_string(DictionaryLabel label) {
    switch (label) {
        case DictionaryLabel::frequency: return "frequency";
        case DictionaryLabel::degree: return "degree";
        case DictionaryLabel::neighborhood_weight: return "neighborhood_weight";
        case DictionaryLabel::custom: return "custom";
    }
    return "custom";
}

namespace {

void check_ids(std::span<const NodeId> ids, std::size_t n, const char* who) {
    for (const NodeId v : ids)
        if (v >= n)
            throw ArgumentError(std::string(who) + ": unknown node id " + std::to_string(v));
}

// Node ids follow the corpus's canonical order (frequency desc, password asc),
// so ascending id is the canonical tiebreak.
Dictionary rank_by_key_desc(std::span<const std::uint64_t> key, DictionaryLabel label) {
    Dictionary dict;
    dict.label = label;
    dict.ordering.resize(key.size());
    std::iota(dict.ordering.begin(), dict.ordering.end(), 0);
    std::stable_sort(dict.ordering.begin(), dict.ordering.end(),
                     [&](NodeId a, NodeId b) { return key[a] > key[b]; });
    return dict;
}

}  // namespace

Dictionary rank_by_frequency(const Corpus& corpus) {
    Dictionary dict;
    dict.label = DictionaryLabel::frequency;
    dict.ordering.resize(corpus.unique_count());
    std::iota(dict.ordering.begin(), dict.ordering.end(), 0);
    return dict;
}

Dictionary rank_by_degree(const ThresholdView& view) {
    const std::size_t n = view.node_count();
    std::vector<std::uint64_t> degrees(n);
    for (NodeId v = 0; v < n; ++v) degrees[v] = view.degree(v);
    return rank_by_key_desc(degrees, DictionaryLabel::degree);
}

Dictionary rank_by_neighborhood_weight(const ThresholdView& view, const Corpus& corpus) {
    const std::size_t n = view.node_count();
    if (corpus.unique_count() != n)
        throw ArgumentError("rank_by_neighborhood_weight: corpus/graph size mismatch");
    std::vector<std::uint64_t> weights(n);
    for (NodeId v = 0; v < n; ++v) {
        std::uint64_t w = corpus.record(v).frequency;
        view.for_each_neighbor(
            v, [&](const Neighbor& nb) { w += corpus.record(nb.id).frequency; });
        weights[v] = w;
    }
    return rank_by_key_desc(weights, DictionaryLabel::neighborhood_weight);
}

std::vector<NodeId> closed_neighborhood(const ThresholdView& view,
                                        std::span<const NodeId> nodes) {
    const std::size_t n = view.node_count();
    check_ids(nodes, n, "closed_neighborhood");
    std::vector<bool> in(n, false);
    for (const NodeId v : nodes) {
        in[v] = true;
        view.for_each_neighbor(v, [&](const Neighbor& nb) { in[nb.id] = true; });
    }
    std::vector<NodeId> out;
    for (NodeId v = 0; v < n; ++v)
        if (in[v]) out.push_back(v);
    return out;
}

std::uint64_t max_successful_guesses(const ThresholdView& view, const Corpus& corpus,
                                     const Dictionary& dict, std::size_t size) {
    if (size < 1 || size > dict.ordering.size())
        throw ArgumentError("max_successful_guesses: size must be in [1, dictionary size]");
    const std::span<const NodeId> prefix(dict.ordering.data(), size);
    std::uint64_t covered = 0;
    for (const NodeId v : closed_neighborhood(view, prefix))
        covered += corpus.record(v).frequency;
    return covered;
}

CrackingCurve cracking_curve(const ThresholdView& view, const Corpus& corpus,
                             const Dictionary& dict,
                             std::span<const std::uint64_t> sizes) {
    const std::size_t n = view.node_count();
    if (corpus.unique_count() != n)
        throw ArgumentError("cracking_curve: corpus/graph size mismatch");
    check_ids(dict.ordering, n, "cracking_curve");

    std::vector<std::uint64_t> schedule;
    if (sizes.empty()) {
        schedule.resize(dict.ordering.size());
        std::iota(schedule.begin(), schedule.end(), 1);
    } else {
        schedule.assign(sizes.begin(), sizes.end());
        for (std::size_t i = 0; i < schedule.size(); ++i) {
            if (schedule[i] < 1 || schedule[i] > dict.ordering.size())
                throw ArgumentError("cracking_curve: size out of range");
            if (i > 0 && schedule[i] <= schedule[i - 1])
                throw ArgumentError("cracking_curve: sizes must be strictly increasing");
        }
    }

    const double total = static_cast<double>(corpus.total_accounts());
    CrackingCurve curve;
    curve.points.reserve(schedule.size());

    std::vector<bool> covered(n, false);
    std::uint64_t gmax = 0;
    std::size_t used = 0;
    const auto cover = [&](NodeId u) {
        if (!covered[u]) {
            covered[u] = true;
            gmax += corpus.record(u).frequency;
        }
    };
    for (const std::uint64_t size : schedule) {
        while (used < size) {
            const NodeId v = dict.ordering[used++];
            cover(v);
            view.for_each_neighbor(v, [&](const Neighbor& nb) { cover(nb.id); });
        }
        curve.points.push_back(
            CurvePoint{size, gmax, static_cast<double>(gmax) / total});
    }
    return curve;
}

std::vector<NodeId> closure_expand(const ThresholdView& view,
                                   std::span<const NodeId> seeds) {
    const std::size_t n = view.node_count();
    check_ids(seeds, n, "closure_expand");
    std::vector<bool> reached(n, false);
    std::vector<NodeId> stack;
    for (const NodeId v : seeds) {
        if (!reached[v]) {
            reached[v] = true;
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        view.for_each_neighbor(v, [&](const Neighbor& nb) {
            if (!reached[nb.id]) {
                reached[nb.id] = true;
                stack.push_back(nb.id);
            }
        });
    }
    std::vector<NodeId> out;
    for (NodeId v = 0; v < n; ++v)
        if (reached[v]) out.push_back(v);
    return out;
}

}  // namespace pwnet
