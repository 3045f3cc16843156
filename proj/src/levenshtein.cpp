#include "pwnet/levenshtein.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace pwnet {

namespace {
// Large enough to never win a min(), small enough not to overflow when +1 is added.
constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max() / 2;
}  // namespace

std::size_t levenshtein(std::string_view a, std::string_view b) {
    if (a.size() > b.size()) std::swap(a, b);
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    if (n == 0) return m;

    // Two-row dynamic program over the full table.
    thread_local std::vector<std::size_t> prev, cur;
    prev.resize(n + 1);
    cur.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) prev[i] = i;

    for (std::size_t j = 1; j <= m; ++j) {
        const unsigned char bj = static_cast<unsigned char>(b[j - 1]);
        cur[0] = j;
        for (std::size_t i = 1; i <= n; ++i) {
            if (static_cast<unsigned char>(a[i - 1]) == bj)
                cur[i] = prev[i - 1];
            else
                cur[i] = 1 + std::min({cur[i - 1], prev[i], prev[i - 1]});
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

std::optional<std::size_t> bounded_levenshtein(std::string_view a, std::string_view b,
                                               std::size_t limit) {
    if (a.size() > b.size()) std::swap(a, b);
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    if (m - n > limit) return std::nullopt;
    if (n == 0) return m;  // m <= limit after the gap check

    // Banded dynamic program: only cells within `limit` of the diagonal matter.
    thread_local std::vector<std::size_t> prev, cur;
    prev.assign(n + 1, kFar);
    cur.assign(n + 1, kFar);
    const std::size_t head = std::min(n, limit);
    for (std::size_t i = 0; i <= head; ++i) prev[i] = i;

    for (std::size_t j = 1; j <= m; ++j) {
        const unsigned char bj = static_cast<unsigned char>(b[j - 1]);
        const std::size_t lo = (j > limit) ? j - limit : 1;
        const std::size_t hi = std::min(n, j + limit);
        cur[0] = (j <= limit) ? j : kFar;
        if (lo > 1) cur[lo - 1] = kFar;

        std::size_t row_min = kFar;
        for (std::size_t i = lo; i <= hi; ++i) {
            std::size_t v;
            if (static_cast<unsigned char>(a[i - 1]) == bj)
                v = prev[i - 1];
            else
                v = 1 + std::min({cur[i - 1], prev[i], prev[i - 1]});
            cur[i] = v;
            row_min = std::min(row_min, v);
        }
        if (row_min > limit) return std::nullopt;
        std::swap(prev, cur);
    }
    if (prev[n] <= limit) return prev[n];
    return std::nullopt;
}

}  // namespace pwnet
