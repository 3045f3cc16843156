#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace pwnet {

// Unit-cost edit distance (insertion, deletion, substitution) over bytes.
std::size_t levenshtein(std::string_view a, std::string_view b);

// Distance if it is <= limit, nullopt otherwise. Returns without computing the
// dynamic program when the length gap alone exceeds the limit.
std::optional<std::size_t> bounded_levenshtein(std::string_view a, std::string_view b,
                                               std::size_t limit);

}  // namespace pwnet
