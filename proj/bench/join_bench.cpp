// Timing comparison of the serial naive join against the bucketed join in
// serial and parallel configurations.
//
//   pwnet_bench [--n SIZE]... [--threshold T] [--skip-naive]

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "pwnet/corpus.hpp"
#include "pwnet/simjoin.hpp"
#include "support/generators.hpp"

using namespace pwnet;

namespace {

double now() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

struct Timing {
    double seconds;
    std::uint64_t edges;
    std::uint64_t distance_calls;
};

Timing time_join(const Corpus& corpus, int threshold, JoinStrategy strategy) {
    JoinStats stats;
    const double start = now();
    const PasswordGraph g = build_graph(corpus, threshold, strategy, &stats);
    return Timing{now() - start, g.edge_count(), stats.distance_calls};
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> sizes;
    int threshold = 3;
    bool skip_naive = false;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--n") && i + 1 < argc)
            sizes.push_back(std::stoul(argv[++i]));
        else if (!std::strcmp(argv[i], "--threshold") && i + 1 < argc)
            threshold = std::stoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--skip-naive"))
            skip_naive = true;
        else {
            std::fprintf(stderr, "usage: %s [--n SIZE]... [--threshold T] [--skip-naive]\n",
                         argv[0]);
            return 1;
        }
    }
    if (sizes.empty()) sizes = {1'000, 2'000, 5'000};

#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
#else
    const int max_threads = 1;
#endif
    std::printf("edit-distance self-join, threshold %d, %d thread(s) available\n\n",
                threshold, max_threads);
    std::printf("%8s %14s %12s %14s %14s %10s\n", "n", "strategy", "threads",
                "seconds", "dist calls", "edges");

    for (const std::size_t n : sizes) {
        std::mt19937_64 rng(90'000 + n);
        const Corpus corpus = testsupport::random_corpus(rng, n, 4, 12);

        if (!skip_naive) {
            const Timing t = time_join(corpus, threshold, JoinStrategy::naive);
            std::printf("%8zu %14s %12d %14.3f %14llu %10llu\n", n, "naive", 1,
                        t.seconds, static_cast<unsigned long long>(t.distance_calls),
                        static_cast<unsigned long long>(t.edges));
        }

#ifdef _OPENMP
        omp_set_num_threads(1);
        const Timing serial = time_join(corpus, threshold, JoinStrategy::bucketed);
        std::printf("%8zu %14s %12d %14.3f %14llu %10llu\n", n, "bucketed", 1,
                    serial.seconds,
                    static_cast<unsigned long long>(serial.distance_calls),
                    static_cast<unsigned long long>(serial.edges));

        omp_set_num_threads(max_threads);
        const Timing parallel = time_join(corpus, threshold, JoinStrategy::bucketed);
        std::printf("%8zu %14s %12d %14.3f %14llu %10llu\n", n, "bucketed",
                    max_threads, parallel.seconds,
                    static_cast<unsigned long long>(parallel.distance_calls),
                    static_cast<unsigned long long>(parallel.edges));
        if (parallel.seconds > 0)
            std::printf("%8s speedup over serial bucketed: %.2fx\n", "",
                        serial.seconds / parallel.seconds);
#else
        const Timing serial = time_join(corpus, threshold, JoinStrategy::bucketed);
        std::printf("%8zu %14s %12d %14.3f %14llu %10llu\n", n, "bucketed", 1,
                    serial.seconds,
                    static_cast<unsigned long long>(serial.distance_calls),
                    static_cast<unsigned long long>(serial.edges));
#endif
        std::printf("\n");
    }
    return 0;
}
