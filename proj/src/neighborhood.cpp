#include "pwnet/neighborhood.hpp"

#include <limits>
#include <unordered_set>

#include "pwnet/errors.hpp"
#include "pwnet/levenshtein.hpp"

namespace pwnet {

namespace {

using U128 = unsigned __int128;

std::uint64_t narrow(U128 v, const char* what) {
    if (v > std::numeric_limits<std::uint64_t>::max())
        throw ArgumentError(std::string(what) + ": count overflows 64 bits");
    return static_cast<std::uint64_t>(v);
}

U128 choose2(U128 n) { return n * (n > 0 ? n - 1 : 0) / 2; }

}  // namespace

std::uint64_t analytic_candidate_count(std::uint64_t length, std::uint64_t alphabet_size,
                                       int radius) {
    if (alphabet_size == 0) throw ArgumentError("alphabet_size must be >= 1");
    const U128 L = length;
    const U128 N = alphabet_size;
    switch (radius) {
        case 0:
            return 1;
        case 1:
            return narrow((2 * L + 1) * N, "analytic radius 1");
        case 2: {
            // (3/2 L^2 + 3/2 L + 1) N^2 - L N, evaluated as an exact rational.
            const U128 numerator = 3 * L * L + 3 * L + 2;  // twice the parenthesized factor
            if (numerator % 2 != 0)
                throw DataError("analytic radius 2: closed form is not integral");
            const U128 value = (numerator / 2) * N * N - L * N;
            return narrow(value, "analytic radius 2");
        }
        default:
            throw ArgumentError("analytic_candidate_count: unsupported radius " +
                                std::to_string(radius) + " (closed forms exist for 0..2)");
    }
}

std::uint64_t termwise_candidate_count(std::uint64_t length, std::uint64_t alphabet_size,
                                       int radius) {
    if (alphabet_size == 0) throw ArgumentError("alphabet_size must be >= 1");
    const U128 L = length;
    const U128 N = alphabet_size;
    switch (radius) {
        case 1: {
            const U128 insertion = (L + 1) * N;
            const U128 substitution = L * (N - 1);
            const U128 deletion = L;
            return narrow(insertion + substitution + deletion, "termwise radius 1");
        }
        case 2: {
            const U128 insert_twice = choose2(L + 2) * N * N;
            const U128 substitute_insert = L * (N - 1) * (L + 1) * N;
            const U128 insert_delete = L * L * N;
            const U128 substitute_twice = choose2(L) * (N - 1) * (N - 1);
            const U128 delete_substitute = L * (L > 0 ? L - 1 : 0) * (N - 1);
            const U128 delete_twice = choose2(L);
            return narrow(insert_twice + substitute_insert + insert_delete +
                              substitute_twice + delete_substitute + delete_twice,
                          "termwise radius 2");
        }
        default:
            throw ArgumentError("termwise_candidate_count: unsupported radius " +
                                std::to_string(radius) + " (case lists exist for 1 and 2)");
    }
}

std::uint64_t enumerate_exact_neighborhood(std::string_view p,
                                           const std::vector<unsigned char>& alphabet,
                                           int radius, EnumerationBudget budget) {
    if (radius < 0) throw ArgumentError("radius must be >= 0");
    if (alphabet.empty()) throw ArgumentError("alphabet must be non-empty");
    if (radius == 0) return 1;

    const std::string start(p);
    std::unordered_set<std::string> closure;  // every string reached in <= radius edits
    closure.insert(start);
    std::vector<std::string> frontier{start};

    const auto admit = [&](std::string&& s, std::vector<std::string>& next) {
        if (closure.size() >= budget.max_candidates)
            throw ResourceError("enumeration budget exceeded (" +
                                std::to_string(budget.max_candidates) + " candidates)");
        auto [it, inserted] = closure.insert(std::move(s));
        if (inserted) next.push_back(*it);
    };

    for (int round = 0; round < radius; ++round) {
        std::vector<std::string> next;
        for (const std::string& s : frontier) {
            for (std::size_t i = 0; i < s.size(); ++i) {  // deletions
                std::string d = s;
                d.erase(i, 1);
                admit(std::move(d), next);
            }
            for (std::size_t i = 0; i < s.size(); ++i) {  // substitutions
                for (unsigned char c : alphabet) {
                    if (static_cast<unsigned char>(s[i]) == c) continue;
                    std::string d = s;
                    d[i] = static_cast<char>(c);
                    admit(std::move(d), next);
                }
            }
            for (std::size_t i = 0; i <= s.size(); ++i) {  // insertions
                for (unsigned char c : alphabet) {
                    std::string d = s;
                    d.insert(i, 1, static_cast<char>(c));
                    admit(std::move(d), next);
                }
            }
        }
        frontier = std::move(next);
    }

    std::uint64_t count = 0;
    for (const std::string& s : closure)
        if (levenshtein(s, start) == static_cast<std::size_t>(radius)) ++count;
    return count;
}

NeighborhoodCountReport make_count_report(std::uint64_t length, std::uint64_t alphabet_size,
                                          int radius, bool attempt_exact,
                                          EnumerationBudget budget) {
    if (radius < 0 || radius > 2)
        throw ArgumentError("count report: unsupported radius " + std::to_string(radius));
    NeighborhoodCountReport r;
    r.length = length;
    r.alphabet_size = alphabet_size;
    r.radius = radius;
    r.analytic_count = analytic_candidate_count(length, alphabet_size, radius);
    // Radius 0 has a single trivial "case" (no edit); the case lists start at radius 1.
    r.termwise_count =
        radius == 0 ? 1 : termwise_candidate_count(length, alphabet_size, radius);

    if (attempt_exact) {
        if (alphabet_size > 256)
            throw ArgumentError("exact enumeration needs an alphabet of at most 256 bytes");
        std::vector<unsigned char> alphabet(alphabet_size);
        for (std::uint64_t i = 0; i < alphabet_size; ++i)
            alphabet[i] = static_cast<unsigned char>(i);
        std::string p(length, '\0');
        for (std::uint64_t i = 0; i < length; ++i)
            p[i] = static_cast<char>(i % alphabet_size);
        r.exact_distinct_count =
            enumerate_exact_neighborhood(p, alphabet, radius, budget);
    }
    return r;
}

std::string to_kv_text(const NeighborhoodCountReport& r) {
    std::string out;
    out += "length=" + std::to_string(r.length) + "\n";
    out += "alphabet_size=" + std::to_string(r.alphabet_size) + "\n";
    out += "radius=" + std::to_string(r.radius) + "\n";
    out += "analytic_count=" + std::to_string(r.analytic_count) + "\n";
    out += "termwise_count=" + std::to_string(r.termwise_count) + "\n";
    if (r.exact_distinct_count)
        out += "exact_distinct_count=" + std::to_string(*r.exact_distinct_count) + "\n";
    return out;
}

}  // namespace pwnet
