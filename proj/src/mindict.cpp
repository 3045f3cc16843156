#include "pwnet/mindict.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "pwnet/errors.hpp"
#include "pwnet/netstats.hpp"

namespace pwnet {

const char* to_string(DominatingMethod method) {
    return method == DominatingMethod::greedy ? "greedy" : "exact";
}

namespace {

// Max-heap keyed by (gain desc, id asc); stale gains are re-evaluated lazily,
// which is sound because coverage gains only shrink as picks accumulate.
struct HeapEntry {
    std::uint64_t gain;
    NodeId id;

    bool operator<(const HeapEntry& other) const {
        if (gain != other.gain) return gain < other.gain;
        return id > other.id;
    }
};

std::uint64_t graph_min_degree(const ThresholdView& view) {
    std::uint64_t min_deg = UINT64_MAX;
    for (NodeId v = 0; v < view.node_count(); ++v)
        min_deg = std::min<std::uint64_t>(min_deg, view.degree(v));
    return min_deg;
}

DominatingSetResult finish_result(const ThresholdView& view, std::vector<NodeId> nodes,
                                  DominatingMethod method) {
    DominatingSetResult result;
    result.method = method;
    result.size = nodes.size();
    result.nodes = std::move(nodes);

    const std::vector<NodeId> covered = closed_neighborhood(view, result.nodes);
    result.is_dominating = covered.size() == view.node_count();
    std::uint64_t accounts = 0;
    for (const NodeId v : covered) accounts += view.graph().frequency(v);
    result.covered_accounts = accounts;
    result.arnautov_bound = arnautov_bound(view.node_count(), graph_min_degree(view));
    return result;
}

}  // namespace

DominatingSetResult greedy_dominating_set(const ThresholdView& view) {
    const std::size_t n = view.node_count();
    std::vector<bool> covered(n, false);
    std::size_t covered_count = 0;

    const auto mark = [&](NodeId u) {
        if (!covered[u]) {
            covered[u] = true;
            ++covered_count;
        }
    };
    const auto gain_of = [&](NodeId v) {
        std::uint64_t g = covered[v] ? 0 : 1;
        view.for_each_neighbor(v, [&](const Neighbor& nb) {
            if (!covered[nb.id]) ++g;
        });
        return g;
    };

    std::priority_queue<HeapEntry> heap;
    for (NodeId v = 0; v < n; ++v)
        heap.push(HeapEntry{gain_of(static_cast<NodeId>(v)), static_cast<NodeId>(v)});

    std::vector<NodeId> picks;
    while (covered_count < n) {
        HeapEntry top = heap.top();
        heap.pop();
        const std::uint64_t fresh = gain_of(top.id);
        if (!heap.empty() && (fresh < heap.top().gain ||
                              (fresh == heap.top().gain && heap.top().id < top.id))) {
            heap.push(HeapEntry{fresh, top.id});
            continue;
        }
        picks.push_back(top.id);
        mark(top.id);
        view.for_each_neighbor(top.id, [&](const Neighbor& nb) { mark(nb.id); });
    }
    return finish_result(view, std::move(picks), DominatingMethod::greedy);
}

namespace {

struct ExactSearch {
    const ThresholdView& view;
    std::size_t n;
    std::vector<std::uint32_t> cover_count;  // how many chosen nodes cover v
    std::vector<NodeId> chosen;
    std::vector<NodeId> best;
    std::size_t max_closed;  // max |N[v]|, for the lower-bound prune

    explicit ExactSearch(const ThresholdView& v)
        : view(v), n(v.node_count()), cover_count(n, 0) {
        max_closed = 0;
        for (NodeId u = 0; u < n; ++u)
            max_closed = std::max(max_closed, view.degree(u) + 1);
    }

    void choose(NodeId u, int delta) {
        cover_count[u] += static_cast<std::uint32_t>(delta);
        view.for_each_neighbor(u, [&](const Neighbor& nb) {
            cover_count[nb.id] += static_cast<std::uint32_t>(delta);
        });
    }

    std::size_t uncovered_count() const {
        std::size_t c = 0;
        for (NodeId v = 0; v < n; ++v)
            if (cover_count[v] == 0) ++c;
        return c;
    }

    void search() {
        const std::size_t uncovered = uncovered_count();
        if (uncovered == 0) {
            if (chosen.size() < best.size()) best = chosen;
            return;
        }
        // Lower bound: each further pick covers at most max_closed vertices.
        const std::size_t needed = (uncovered + max_closed - 1) / max_closed;
        if (chosen.size() + needed >= best.size()) return;

        // Branch on the lowest-id uncovered vertex: any dominating set must
        // contain a member of its closed neighborhood.
        NodeId v = 0;
        while (cover_count[v] != 0) ++v;
        std::vector<NodeId> candidates{v};
        view.for_each_neighbor(v, [&](const Neighbor& nb) { candidates.push_back(nb.id); });

        for (const NodeId u : candidates) {
            choose(u, +1);
            chosen.push_back(u);
            search();
            chosen.pop_back();
            choose(u, -1);
        }
    }
};

}  // namespace

DominatingSetResult exact_dominating_set(const ThresholdView& view,
                                         std::size_t node_budget) {
    const std::size_t n = view.node_count();
    if (n > node_budget)
        throw ResourceError("exact_dominating_set: " + std::to_string(n) +
                            " nodes exceed the budget of " + std::to_string(node_budget));

    ExactSearch search(view);
    search.best = greedy_dominating_set(view).nodes;  // upper bound
    search.search();

    std::vector<NodeId> nodes = search.best;
    std::sort(nodes.begin(), nodes.end());
    return finish_result(view, std::move(nodes), DominatingMethod::exact);
}

double arnautov_bound(std::size_t n, std::size_t min_degree) {
    if (n < 1) throw ArgumentError("arnautov_bound: n must be >= 1");
    const double k = static_cast<double>(min_degree);
    return static_cast<double>(n) * (1.0 + std::log(k + 1.0)) / (k + 1.0);
}

Dictionary partial_dominating_dictionary(const ThresholdView& view, const Corpus& corpus,
                                         double target_ratio) {
    if (!(target_ratio >= 0.0 && target_ratio <= 1.0))
        throw ArgumentError("partial_dominating_dictionary: target_ratio must be in [0, 1]");
    const std::size_t n = view.node_count();
    if (corpus.unique_count() != n)
        throw ArgumentError("partial_dominating_dictionary: corpus/graph size mismatch");

    Dictionary dict;
    dict.label = DictionaryLabel::custom;

    const double total = static_cast<double>(corpus.total_accounts());
    std::vector<bool> covered(n, false);
    std::uint64_t covered_accounts = 0;

    const auto ratio_reached = [&] {
        return static_cast<double>(covered_accounts) / total >= target_ratio;
    };
    const auto gain_of = [&](NodeId v) {
        std::uint64_t g = covered[v] ? 0 : corpus.record(v).frequency;
        view.for_each_neighbor(v, [&](const Neighbor& nb) {
            if (!covered[nb.id]) g += corpus.record(nb.id).frequency;
        });
        return g;
    };
    const auto mark = [&](NodeId u) {
        if (!covered[u]) {
            covered[u] = true;
            covered_accounts += corpus.record(u).frequency;
        }
    };

    if (ratio_reached()) return dict;  // target_ratio == 0

    std::priority_queue<HeapEntry> heap;
    for (NodeId v = 0; v < n; ++v) heap.push(HeapEntry{gain_of(v), v});

    while (!ratio_reached()) {
        HeapEntry top = heap.top();
        heap.pop();
        const std::uint64_t fresh = gain_of(top.id);
        if (!heap.empty() && (fresh < heap.top().gain ||
                              (fresh == heap.top().gain && heap.top().id < top.id))) {
            heap.push(HeapEntry{fresh, top.id});
            continue;
        }
        dict.ordering.push_back(top.id);
        mark(top.id);
        view.for_each_neighbor(top.id, [&](const Neighbor& nb) { mark(nb.id); });
    }
    return dict;
}

}  // namespace pwnet
