#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pwnet/corpus.hpp"

namespace pwnet {

using NodeId = std::uint32_t;

struct Neighbor {
    NodeId id;
    std::uint8_t distance;  // 1..t_build

    friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Undirected edge; source < target.
struct Edge {
    NodeId source;
    NodeId target;
    std::uint8_t distance;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Similarity graph over the unique passwords of a corpus. Node ids are dense
// 0..n-1 in the corpus's canonical order. Immutable once constructed.
class PasswordGraph {
public:
    // `forward[i]` holds the neighbors of i with id > i; the mirror direction is
    // added here so adjacency is symmetric by construction. Every stored
    // distance must lie in [1, t_build].
    PasswordGraph(const Corpus& corpus, int t_build,
                  std::vector<std::vector<Neighbor>> forward);

    std::size_t node_count() const { return passwords_.size(); }
    const std::string& password(NodeId v) const { return passwords_[v]; }
    std::uint64_t frequency(NodeId v) const { return frequencies_[v]; }
    std::uint64_t total_accounts() const { return total_accounts_; }
    int t_build() const { return t_build_; }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<Neighbor>& neighbors(NodeId v) const { return adjacency_[v]; }

    // All edges as (min id, max id, distance), ascending.
    std::vector<Edge> edges() const;

private:
    std::vector<std::string> passwords_;
    std::vector<std::uint64_t> frequencies_;
    std::vector<std::vector<Neighbor>> adjacency_;  // id-ascending per node
    std::uint64_t total_accounts_ = 0;
    std::size_t edge_count_ = 0;
    int t_build_ = 0;
};

// Read-only view of a graph restricted to edges with distance <= t.
class ThresholdView {
public:
    ThresholdView(const PasswordGraph& graph, int t);

    const PasswordGraph& graph() const { return *graph_; }
    int t() const { return t_; }
    std::size_t node_count() const { return graph_->node_count(); }

    template <typename F>
    void for_each_neighbor(NodeId v, F&& f) const {
        for (const Neighbor& nb : graph_->neighbors(v))
            if (nb.distance <= t_) f(nb);
    }

    std::size_t degree(NodeId v) const {
        std::size_t d = 0;
        for_each_neighbor(v, [&](const Neighbor&) { ++d; });
        return d;
    }

    std::size_t edge_count() const;
    std::vector<Edge> edges() const;

private:
    const PasswordGraph* graph_;
    int t_;
};

}  // namespace pwnet
