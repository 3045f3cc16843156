#include "pwnet/netstats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>

#include "pwnet/errors.hpp"

namespace pwnet {

std::vector<std::uint32_t> degree_sequence(const ThresholdView& view) {
    const std::size_t n = view.node_count();
    std::vector<std::uint32_t> degrees(n, 0);
    for (NodeId v = 0; v < n; ++v)
        degrees[v] = static_cast<std::uint32_t>(view.degree(v));
    return degrees;
}

std::vector<RankedDegree> degree_rank(const ThresholdView& view) {
    std::vector<std::uint32_t> degrees = degree_sequence(view);
    std::stable_sort(degrees.begin(), degrees.end(), std::greater<>());
    std::vector<RankedDegree> out(degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i)
        out[i] = RankedDegree{static_cast<std::uint32_t>(i + 1), degrees[i]};
    return out;
}

namespace detail {

double hurwitz_zeta(double s, double q) {
    // Direct terms plus an Euler-Maclaurin tail.
    constexpr int kDirect = 2000;
    double sum = 0.0;
    for (int i = 0; i < kDirect; ++i) sum += std::pow(q + i, -s);
    const double a = q + kDirect;
    sum += std::pow(a, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(a, -s);
    sum += s / 12.0 * std::pow(a, -s - 1.0);
    sum -= s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(a, -s - 3.0);
    return sum;
}

}  // namespace detail

PowerLawFit fit_power_law(std::span<const std::uint64_t> samples, std::uint64_t x_min,
                          std::size_t min_samples) {
    if (x_min < 1) throw ArgumentError("fit_power_law: x_min must be >= 1");
    for (const std::uint64_t s : samples)
        if (s < 1) throw ArgumentError("fit_power_law: samples must be >= 1");

    double log_sum = 0.0;
    std::size_t n = 0;
    std::uint64_t lo = 0, hi = 0;
    for (const std::uint64_t s : samples) {
        if (s < x_min) continue;
        log_sum += std::log(static_cast<double>(s));
        lo = (n == 0) ? s : std::min(lo, s);
        hi = (n == 0) ? s : std::max(hi, s);
        ++n;
    }
    if (n < min_samples)
        throw DataError("fit_power_law: only " + std::to_string(n) +
                        " samples >= x_min, need " + std::to_string(min_samples));
    if (lo == hi)
        throw DataError("fit_power_law: degenerate fit, all retained samples equal " +
                        std::to_string(lo));

    const double q = static_cast<double>(x_min);
    const auto log_likelihood = [&](double r) {
        return -r * log_sum - static_cast<double>(n) * std::log(detail::hurwitz_zeta(r, q));
    };

    // The likelihood is strictly concave in r; golden-section search suffices.
    double a = 1.0001, b = 50.0;
    constexpr double kGolden = 0.6180339887498949;
    double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
    double f1 = log_likelihood(x1), f2 = log_likelihood(x2);
    while (b - a > 1e-9) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = log_likelihood(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = log_likelihood(x1);
        }
    }
    const double exponent = 0.5 * (a + b);
    if (exponent > 49.0)
        throw DataError("fit_power_law: degenerate fit, likelihood maximized at the "
                        "exponent bound");

    PowerLawFit fit;
    fit.exponent = exponent;
    fit.x_min = x_min;
    fit.sample_count = n;
    fit.log_likelihood = log_likelihood(exponent);
    return fit;
}

std::vector<std::uint32_t> connected_components(const ThresholdView& view) {
    const std::size_t n = view.node_count();
    std::vector<std::uint32_t> component(n, UINT32_MAX);
    std::uint32_t next_id = 0;
    std::vector<NodeId> stack;
    for (NodeId start = 0; start < n; ++start) {
        if (component[start] != UINT32_MAX) continue;
        const std::uint32_t id = next_id++;
        component[start] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            const NodeId v = stack.back();
            stack.pop_back();
            view.for_each_neighbor(v, [&](const Neighbor& nb) {
                if (component[nb.id] == UINT32_MAX) {
                    component[nb.id] = id;
                    stack.push_back(nb.id);
                }
            });
        }
    }
    return component;
}

double modularity(const ThresholdView& view, std::span<const std::uint32_t> labels) {
    const std::size_t n = view.node_count();
    if (labels.size() != n)
        throw ArgumentError("modularity: every node needs a label");

    const double m = static_cast<double>(view.edge_count());
    if (m == 0.0) return 0.0;

    // Ordered accumulators keep the floating-point summation order stable.
    std::map<std::uint32_t, std::uint64_t> intra_edges, total_degree;
    for (NodeId v = 0; v < n; ++v) {
        view.for_each_neighbor(v, [&](const Neighbor& nb) {
            ++total_degree[labels[v]];
            if (nb.id > v && labels[nb.id] == labels[v]) ++intra_edges[labels[v]];
        });
    }
    double q = 0.0;
    for (const auto& [label, degree] : total_degree) {
        const double e_c = static_cast<double>(intra_edges[label]);
        const double d_c = static_cast<double>(degree);
        q += e_c / m - (d_c / (2.0 * m)) * (d_c / (2.0 * m));
    }
    return q;
}

namespace {

// One synchronous round; every node adopts the most frequent label over its
// closed neighborhood, lowest label on ties. Returns true if anything changed.
bool propagate_round(const ThresholdView& view, const std::vector<std::uint32_t>& in,
                     std::vector<std::uint32_t>& out) {
    const std::size_t n = view.node_count();
    bool changed = false;
    std::unordered_map<std::uint32_t, std::uint32_t> counts;
    for (NodeId v = 0; v < n; ++v) {
        counts.clear();
        ++counts[in[v]];
        view.for_each_neighbor(v, [&](const Neighbor& nb) { ++counts[in[nb.id]]; });
        std::uint32_t best_label = in[v];
        std::uint32_t best_count = 0;
        for (const auto& [label, count] : counts) {
            if (count > best_count || (count == best_count && label < best_label)) {
                best_label = label;
                best_count = count;
            }
        }
        out[v] = best_label;
        changed |= best_label != in[v];
    }
    return changed;
}

}  // namespace

CommunityAssignment detect_communities(const ThresholdView& view, std::uint64_t seed) {
    const std::size_t n = view.node_count();

    // Initial labels are a seeded permutation of the node ids.
    std::vector<std::uint32_t> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(labels.begin(), labels.end(), rng);

    std::vector<std::uint32_t> next(n), previous(n);
    constexpr int kMaxRounds = 200;
    for (int round = 0; round < kMaxRounds; ++round) {
        const bool changed = propagate_round(view, labels, next);
        if (!changed) break;
        if (round > 0 && next == previous) {
            // Period-2 oscillation; one in-place sweep in id order breaks it.
            previous = labels;
            for (NodeId v = 0; v < n; ++v) {
                std::unordered_map<std::uint32_t, std::uint32_t> counts;
                ++counts[labels[v]];
                view.for_each_neighbor(v,
                                       [&](const Neighbor& nb) { ++counts[labels[nb.id]]; });
                std::uint32_t best_label = labels[v];
                std::uint32_t best_count = 0;
                for (const auto& [label, count] : counts) {
                    if (count > best_count || (count == best_count && label < best_label)) {
                        best_label = label;
                        best_count = count;
                    }
                }
                labels[v] = best_label;
            }
            continue;
        }
        previous = labels;
        std::swap(labels, next);
    }

    // Dense relabel in order of each community's smallest node id.
    CommunityAssignment result;
    result.labels.assign(n, 0);
    std::unordered_map<std::uint32_t, std::uint32_t> dense;
    for (NodeId v = 0; v < n; ++v) {
        const auto it =
            dense.emplace(labels[v], static_cast<std::uint32_t>(dense.size())).first;
        result.labels[v] = it->second;
    }
    result.community_count = static_cast<std::uint32_t>(dense.size());
    result.modularity = n == 0 ? 0.0 : modularity(view, result.labels);
    return result;
}

}  // namespace pwnet
