#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pwnet/graph.hpp"

namespace pwnet {

// Per-node degree at the view's threshold. Sum equals 2 * edge_count.
std::vector<std::uint32_t> degree_sequence(const ThresholdView& view);

struct RankedDegree {
    std::uint32_t rank;    // 1-based
    std::uint32_t degree;  // non-increasing in rank

    friend bool operator==(const RankedDegree&, const RankedDegree&) = default;
};

// Degrees sorted descending; ties keep node-id order.
std::vector<RankedDegree> degree_rank(const ThresholdView& view);

struct PowerLawFit {
    double exponent = 0.0;  // r in P(k) ~ k^-r, > 1
    std::uint64_t x_min = 1;
    std::size_t sample_count = 0;  // samples >= x_min actually used
    double log_likelihood = 0.0;
};

// Discrete maximum-likelihood fit of P(k) ~ k^-r over the samples >= x_min,
// with the zeta-normalized likelihood maximized numerically.
PowerLawFit fit_power_law(std::span<const std::uint64_t> samples, std::uint64_t x_min,
                          std::size_t min_samples = 50);

// Component ids are dense, assigned in order of each component's smallest node id.
std::vector<std::uint32_t> connected_components(const ThresholdView& view);

struct CommunityAssignment {
    std::vector<std::uint32_t> labels;  // dense community ids
    std::uint32_t community_count = 0;
    double modularity = 0.0;
};

// Seeded synchronous label propagation with deterministic tie-breaking (lowest
// candidate label wins). Reproducible bit-for-bit for a fixed seed; labels
// always refine connected components.
CommunityAssignment detect_communities(const ThresholdView& view, std::uint64_t seed);

// Newman modularity Q of a labeling; 0 for edgeless graphs by convention.
double modularity(const ThresholdView& view, std::span<const std::uint32_t> labels);

namespace detail {
// Hurwitz zeta: sum_{i >= 0} (q + i)^-s for s > 1, q >= 1.
double hurwitz_zeta(double s, double q);
}  // namespace detail

}  // namespace pwnet
