#include "pwnet/graph.hpp"

#include <algorithm>
#include <limits>

#include "pwnet/errors.hpp"

namespace pwnet {

PasswordGraph::PasswordGraph(const Corpus& corpus, int t_build,
                             std::vector<std::vector<Neighbor>> forward)
    : t_build_(t_build) {
    if (corpus.unique_count() == 0) throw ArgumentError("graph: corpus is empty");
    if (t_build < 1 || t_build > 255)
        throw ArgumentError("graph: t_build must be in [1, 255]");
    if (corpus.unique_count() > std::numeric_limits<NodeId>::max())
        throw ResourceError("graph: corpus exceeds the node id range");
    const std::size_t n = corpus.unique_count();
    if (forward.size() != n) throw ArgumentError("graph: forward list size mismatch");

    passwords_.reserve(n);
    frequencies_.reserve(n);
    for (const auto& r : corpus.records()) {
        passwords_.push_back(r.password);
        frequencies_.push_back(r.frequency);
    }
    total_accounts_ = corpus.total_accounts();

    adjacency_.assign(n, {});
    for (NodeId i = 0; i < n; ++i) {
        auto& fwd = forward[i];
        std::sort(fwd.begin(), fwd.end(),
                  [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
        for (const Neighbor& nb : fwd) {
            if (nb.id <= i || nb.id >= n)
                throw ArgumentError("graph: forward neighbor ids must satisfy i < j < n");
            if (nb.distance < 1 || nb.distance > t_build_)
                throw ArgumentError("graph: edge distance outside [1, t_build]");
        }
        for (std::size_t k = 1; k < fwd.size(); ++k)
            if (fwd[k].id == fwd[k - 1].id)
                throw ArgumentError("graph: duplicate edge");
    }
    // Mirror in ascending source order so every adjacency list ends up id-sorted:
    // entries with id < v arrive first (from smaller sources), then v's own
    // forward entries, all ascending.
    for (NodeId i = 0; i < n; ++i) {
        for (const Neighbor& nb : forward[i]) {
            adjacency_[i].push_back(nb);
            adjacency_[nb.id].push_back(Neighbor{i, nb.distance});
            ++edge_count_;
        }
    }
    for (auto& adj : adjacency_)
        adj.shrink_to_fit();
}

std::vector<Edge> PasswordGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId v = 0; v < adjacency_.size(); ++v)
        for (const Neighbor& nb : adjacency_[v])
            if (nb.id > v) out.push_back(Edge{v, nb.id, nb.distance});
    return out;
}

ThresholdView::ThresholdView(const PasswordGraph& graph, int t) : graph_(&graph), t_(t) {
    if (t < 0 || t > graph.t_build())
        throw ArgumentError("threshold view: t must be in [0, t_build]; rebuild for larger t");
}

std::size_t ThresholdView::edge_count() const {
    std::size_t m = 0;
    for (NodeId v = 0; v < graph_->node_count(); ++v)
        for (const Neighbor& nb : graph_->neighbors(v))
            if (nb.id > v && nb.distance <= t_) ++m;
    return m;
}

std::vector<Edge> ThresholdView::edges() const {
    std::vector<Edge> out;
    for (NodeId v = 0; v < graph_->node_count(); ++v)
        for (const Neighbor& nb : graph_->neighbors(v))
            if (nb.id > v && nb.distance <= t_) out.push_back(Edge{v, nb.id, nb.distance});
    return out;
}

}  // namespace pwnet
