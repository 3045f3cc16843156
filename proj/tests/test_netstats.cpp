#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <doctest.h>

#include "pwnet/errors.hpp"
#include "pwnet/netstats.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace pwnet;
using testsupport::make_graph;

namespace {

// path a(3) - b(2) - c(1)
PasswordGraph path3() {
    return make_graph({{"a", 3}, {"b", 2}, {"c", 1}}, {{0, 1}, {1, 2}});
}

PasswordGraph edgeless(std::size_t n) {
    std::vector<std::pair<std::string, std::uint64_t>> records;
    for (std::size_t i = 0; i < n; ++i)
        records.emplace_back(std::string(1, static_cast<char>('a' + i)), 1);
    return make_graph(std::move(records), {});
}

// two 4-cliques {0..3} and {4..7} joined by the bridge 3-4
PasswordGraph two_cliques_bridge() {
    std::vector<std::pair<std::string, std::uint64_t>> records;
    for (int i = 0; i < 8; ++i) records.emplace_back("n" + std::to_string(i), 1);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i < 4; ++i)
        for (NodeId j = i + 1; j < 4; ++j) edges.emplace_back(i, j);
    for (NodeId i = 4; i < 8; ++i)
        for (NodeId j = i + 1; j < 8; ++j) edges.emplace_back(i, j);
    edges.emplace_back(3, 4);
    return make_graph(std::move(records), edges);
}

}  // namespace

TEST_CASE("degree_sequence of a path") {
    const PasswordGraph g = path3();
    CHECK(degree_sequence(ThresholdView(g, 1)) == std::vector<std::uint32_t>{1, 2, 1});
    CHECK(degree_sequence(ThresholdView(g, 0)) == std::vector<std::uint32_t>{0, 0, 0});
}

TEST_CASE("handshake identity on random graphs") {
    std::mt19937_64 rng(200);
    for (int round = 0; round < 10; ++round) {
        const PasswordGraph g = testsupport::random_topology(rng, 60, 0.1);
        const ThresholdView view(g, 1);
        const std::vector<std::uint32_t> degrees = degree_sequence(view);
        const std::uint64_t sum = std::accumulate(degrees.begin(), degrees.end(), 0ull);
        CHECK(sum == 2 * view.edge_count());
    }
}

TEST_CASE("degree_rank sorts descending with stable ties") {
    const PasswordGraph g = path3();
    const std::vector<RankedDegree> ranks = degree_rank(ThresholdView(g, 1));
    REQUIRE(ranks.size() == 3);
    CHECK(ranks[0] == RankedDegree{1, 2});
    CHECK(ranks[1] == RankedDegree{2, 1});
    CHECK(ranks[2] == RankedDegree{3, 1});
}

TEST_CASE("degree_rank of an edgeless graph is all zeros") {
    const PasswordGraph g = edgeless(4);
    for (const RankedDegree& r : degree_rank(ThresholdView(g, 1))) CHECK(r.degree == 0);
}

TEST_CASE("degree_rank is a sorted permutation of degree_sequence") {
    std::mt19937_64 rng(201);
    const PasswordGraph g = testsupport::random_topology(rng, 80, 0.07);
    const ThresholdView view(g, 1);

    std::vector<std::uint32_t> degrees = degree_sequence(view);
    std::vector<std::uint32_t> ranked;
    for (const RankedDegree& r : degree_rank(view)) ranked.push_back(r.degree);

    for (std::size_t i = 1; i < ranked.size(); ++i) CHECK(ranked[i - 1] >= ranked[i]);
    std::sort(degrees.rbegin(), degrees.rend());
    CHECK(degrees == ranked);
}

TEST_CASE("hurwitz zeta matches closed forms and direct summation") {
    constexpr double kPi = 3.14159265358979323846;
    CHECK(detail::hurwitz_zeta(2.0, 1.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-12));
    CHECK(detail::hurwitz_zeta(4.0, 1.0) ==
          doctest::Approx(kPi * kPi * kPi * kPi / 90.0).epsilon(1e-12));
    CHECK(detail::hurwitz_zeta(2.0, 2.0) ==
          doctest::Approx(kPi * kPi / 6.0 - 1.0).epsilon(1e-12));

    double direct = 0.0;  // brute-force partial sum with an integral tail bound
    for (std::uint64_t k = 1; k <= 10'000'000; ++k)
        direct += std::pow(static_cast<double>(k), -2.5);
    CHECK(detail::hurwitz_zeta(2.5, 1.0) == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("power-law fit recovers a synthetic exponent") {
    std::mt19937_64 rng(202);
    const testsupport::PowerLawSampler sampler(2.5, 1);
    std::vector<std::uint64_t> samples(100'000);
    for (auto& s : samples) s = sampler(rng);

    const PowerLawFit fit = fit_power_law(samples, 1);
    CHECK(fit.exponent > 2.4);
    CHECK(fit.exponent < 2.6);
    CHECK(fit.x_min == 1);
    CHECK(fit.sample_count == samples.size());
}

TEST_CASE("fit filters samples below x_min") {
    const std::vector<std::uint64_t> samples = {1, 1, 1, 5, 7, 9};
    const PowerLawFit fit = fit_power_law(samples, 5, 1);
    CHECK(fit.sample_count == 3);
    CHECK(fit.exponent > 1.0);
}

TEST_CASE("fit rejects degenerate and undersized inputs") {
    const std::vector<std::uint64_t> constant(100, 4);
    CHECK_THROWS_AS(fit_power_law(constant, 1), DataError);

    const std::vector<std::uint64_t> few = {1, 2, 3};
    CHECK_THROWS_AS(fit_power_law(few, 1), DataError);  // default min_samples = 50

    const std::vector<std::uint64_t> with_zero = {0, 1, 2};
    CHECK_THROWS_AS(fit_power_law(with_zero, 1, 1), ArgumentError);
    CHECK_THROWS_AS(fit_power_law(few, 0, 1), ArgumentError);
}

TEST_CASE("connected components of a path plus an isolate") {
    const PasswordGraph g =
        make_graph({{"a", 4}, {"b", 3}, {"c", 2}, {"d", 1}}, {{0, 1}, {1, 2}});
    const std::vector<std::uint32_t> comp = connected_components(ThresholdView(g, 1));
    CHECK(comp == std::vector<std::uint32_t>{0, 0, 0, 1});
}

TEST_CASE("edgeless graph splits into singleton components") {
    const PasswordGraph g = edgeless(5);
    const std::vector<std::uint32_t> comp = connected_components(ThresholdView(g, 1));
    CHECK(comp == std::vector<std::uint32_t>{0, 1, 2, 3, 4});
}

TEST_CASE("adding edges never increases the component count") {
    std::mt19937_64 rng(203);
    for (int round = 0; round < 10; ++round) {
        // nested edge sets over the same nodes
        std::vector<std::pair<std::string, std::uint64_t>> records;
        for (int i = 0; i < 40; ++i)
            records.emplace_back("n" + std::to_string(i) + std::string(2, 'x'), 1);
        std::vector<std::pair<NodeId, NodeId>> fewer, more;
        for (NodeId i = 0; i < 40; ++i) {
            for (NodeId j = i + 1; j < 40; ++j) {
                if (rng() % 100 < 4) {
                    more.emplace_back(i, j);
                    if (rng() % 2) fewer.emplace_back(i, j);
                }
            }
        }
        auto count = [](const std::vector<std::uint32_t>& comp) {
            return comp.empty() ? 0u : *std::max_element(comp.begin(), comp.end()) + 1;
        };
        const PasswordGraph g1 = make_graph(records, fewer);
        const PasswordGraph g2 = make_graph(records, more);
        CHECK(count(connected_components(ThresholdView(g1, 1))) >=
              count(connected_components(ThresholdView(g2, 1))));
    }
}

TEST_CASE("modularity closed forms") {
    const PasswordGraph g = two_cliques_bridge();
    const ThresholdView view(g, 1);

    const std::vector<std::uint32_t> one_community(8, 0);
    CHECK(modularity(view, one_community) == doctest::Approx(0.0));

    // two disjoint equal cliques, labeled separately: Q = 1/2 exactly
    std::vector<std::pair<std::string, std::uint64_t>> records;
    for (int i = 0; i < 8; ++i) records.emplace_back("m" + std::to_string(i), 1);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i < 4; ++i)
        for (NodeId j = i + 1; j < 4; ++j) edges.emplace_back(i, j);
    for (NodeId i = 4; i < 8; ++i)
        for (NodeId j = i + 1; j < 8; ++j) edges.emplace_back(i, j);
    const PasswordGraph cliques = make_graph(std::move(records), edges);
    const std::vector<std::uint32_t> split = {0, 0, 0, 0, 1, 1, 1, 1};
    CHECK(modularity(ThresholdView(cliques, 1), split) == doctest::Approx(0.5));

    const PasswordGraph empty = edgeless(3);
    CHECK(modularity(ThresholdView(empty, 1), std::vector<std::uint32_t>{0, 1, 2}) == 0.0);

    CHECK_THROWS_AS(modularity(view, std::vector<std::uint32_t>{0, 1}), ArgumentError);
}

TEST_CASE("modularity agrees with the reference evaluation on random labelings") {
    std::mt19937_64 rng(204);
    const PasswordGraph g = testsupport::random_topology(rng, 30, 0.15);
    const ThresholdView view(g, 1);
    for (int round = 0; round < 20; ++round) {
        std::vector<std::uint32_t> labels(30);
        for (auto& l : labels) l = rng() % 5;
        CHECK(modularity(view, labels) ==
              doctest::Approx(testsupport::modularity_reference(view, labels)));
    }
}

TEST_CASE("two cliques with a bridge resolve into two communities") {
    const PasswordGraph g = two_cliques_bridge();
    const ThresholdView view(g, 1);

    const CommunityAssignment got = detect_communities(view, 0);
    CHECK(got.community_count == 2);
    CHECK(got.labels == std::vector<std::uint32_t>{0, 0, 0, 0, 1, 1, 1, 1});

    // exhaustive modularity optimum over all 4140 partitions of 8 nodes
    const std::vector<std::uint32_t> best = testsupport::best_partition_bruteforce(view);
    CHECK(got.labels == best);
    CHECK(got.modularity ==
          doctest::Approx(testsupport::modularity_reference(view, best)));
}

TEST_CASE("a single clique stays one community") {
    std::vector<std::pair<std::string, std::uint64_t>> records;
    for (int i = 0; i < 5; ++i) records.emplace_back("k" + std::to_string(i), 1);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i < 5; ++i)
        for (NodeId j = i + 1; j < 5; ++j) edges.emplace_back(i, j);
    const PasswordGraph g = make_graph(std::move(records), edges);
    const CommunityAssignment communities = detect_communities(ThresholdView(g, 1), 0);
    CHECK(communities.community_count == 1);
}

TEST_CASE("isolated nodes form their own communities") {
    const PasswordGraph g = edgeless(6);
    const CommunityAssignment communities = detect_communities(ThresholdView(g, 1), 9);
    CHECK(communities.community_count == 6);
    CHECK(communities.labels == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("communities refine connected components") {
    std::mt19937_64 rng(205);
    for (int round = 0; round < 8; ++round) {
        const PasswordGraph g = testsupport::random_topology(rng, 50, 0.05);
        const ThresholdView view(g, 1);
        const CommunityAssignment communities = detect_communities(view, round);
        const std::vector<std::uint32_t> components = connected_components(view);
        for (NodeId u = 0; u < 50; ++u)
            for (NodeId v = 0; v < 50; ++v)
                if (communities.labels[u] == communities.labels[v])
                    CHECK(components[u] == components[v]);
    }
}

TEST_CASE("detection is reproducible for a fixed seed") {
    std::mt19937_64 rng(206);
    const PasswordGraph g = testsupport::random_topology(rng, 70, 0.06);
    const ThresholdView view(g, 1);
    const CommunityAssignment a = detect_communities(view, 1234);
    const CommunityAssignment b = detect_communities(view, 1234);
    CHECK(a.labels == b.labels);
    CHECK(a.community_count == b.community_count);
    CHECK(a.modularity == b.modularity);
}

TEST_CASE("modularity of any assignment stays in range") {
    std::mt19937_64 rng(207);
    for (int round = 0; round < 6; ++round) {
        const PasswordGraph g = testsupport::random_topology(rng, 40, 0.1);
        const ThresholdView view(g, 1);
        const CommunityAssignment communities = detect_communities(view, round);
        CHECK(communities.modularity >= -0.5);
        CHECK(communities.modularity <= 1.0);
    }
}
