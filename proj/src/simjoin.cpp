#include "pwnet/simjoin.hpp"

#include <algorithm>
#include <map>

#include "pwnet/errors.hpp"
#include "pwnet/levenshtein.hpp"

namespace pwnet {

namespace {

std::vector<std::vector<Neighbor>> naive_join(const Corpus& corpus, int threshold,
                                              std::uint64_t& distance_calls) {
    const std::size_t n = corpus.unique_count();
    std::vector<std::vector<Neighbor>> forward(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string& a = corpus.record(i).password;
        for (std::size_t j = i + 1; j < n; ++j) {
            ++distance_calls;
            const auto d = bounded_levenshtein(a, corpus.record(j).password,
                                               static_cast<std::size_t>(threshold));
            if (d)
                forward[i].push_back(Neighbor{static_cast<NodeId>(j),
                                              static_cast<std::uint8_t>(*d)});
        }
    }
    return forward;
}

std::vector<std::vector<Neighbor>> bucketed_join(const Corpus& corpus, int threshold,
                                                 std::uint64_t& distance_calls) {
    const std::size_t n = corpus.unique_count();
    const auto limit = static_cast<std::size_t>(threshold);

    // Candidates are grouped by length; pairs with a length gap > threshold can
    // never be within the threshold and are skipped without a distance call.
    std::map<std::size_t, std::vector<NodeId>> buckets;  // length -> ascending ids
    for (std::size_t i = 0; i < n; ++i)
        buckets[corpus.record(i).password.size()].push_back(static_cast<NodeId>(i));

    std::vector<std::pair<std::size_t, const std::vector<NodeId>*>> bucket_list;
    bucket_list.reserve(buckets.size());
    for (const auto& [len, ids] : buckets) bucket_list.emplace_back(len, &ids);

    std::vector<std::vector<Neighbor>> forward(n);
    std::uint64_t calls = 0;

    // Results land in per-node slots, so the output is identical for any
    // worker count and schedule.
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : calls)
    for (std::size_t i = 0; i < n; ++i) {
        const std::string& a = corpus.record(i).password;
        const std::size_t len = a.size();
        const std::size_t len_lo = len > limit ? len - limit : 0;

        auto first = std::lower_bound(
            bucket_list.begin(), bucket_list.end(), len_lo,
            [](const auto& bucket, std::size_t key) { return bucket.first < key; });
        for (auto it = first; it != bucket_list.end() && it->first <= len + limit; ++it) {
            const std::vector<NodeId>& ids = *it->second;
            auto jt = std::upper_bound(ids.begin(), ids.end(), static_cast<NodeId>(i));
            for (; jt != ids.end(); ++jt) {
                ++calls;
                const auto d =
                    bounded_levenshtein(a, corpus.record(*jt).password, limit);
                if (d)
                    forward[i].push_back(Neighbor{*jt, static_cast<std::uint8_t>(*d)});
            }
        }
    }
    distance_calls = calls;
    return forward;
}

}  // namespace

PasswordGraph build_graph(const Corpus& corpus, int threshold, JoinStrategy strategy,
                          JoinStats* stats) {
    if (corpus.unique_count() == 0) throw ArgumentError("build_graph: corpus is empty");
    if (threshold < 1)
        throw ArgumentError(
            "build_graph: threshold must be >= 1 (use a threshold view for t = 0)");
    if (threshold > 255) throw ArgumentError("build_graph: threshold must be <= 255");

    std::uint64_t calls = 0;
    std::vector<std::vector<Neighbor>> forward =
        strategy == JoinStrategy::naive ? naive_join(corpus, threshold, calls)
                                        : bucketed_join(corpus, threshold, calls);

    PasswordGraph graph(corpus, threshold, std::move(forward));
    if (stats) {
        stats->distance_calls = calls;
        stats->edges = graph.edge_count();
    }
    return graph;
}

bool verify_join(const Corpus& corpus, int threshold, VerifyGuard guard) {
    if (corpus.unique_count() > guard.max_records)
        throw ResourceError("verify_join: corpus exceeds the naive-join guard of " +
                            std::to_string(guard.max_records) + " records");
    const PasswordGraph naive = build_graph(corpus, threshold, JoinStrategy::naive);
    const PasswordGraph bucketed = build_graph(corpus, threshold, JoinStrategy::bucketed);
    return naive.edges() == bucketed.edges();
}

}  // namespace pwnet
