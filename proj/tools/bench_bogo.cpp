// Benchmark: serial vs OpenMP bogosort trial drivers. The two must agree
// exactly; this compares only wall time.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "worstlab/harness.hpp"

int main(int argc, char** argv) {
    CLI::App app{"worstlab_bench: serial vs parallel bogosort statistics"};
    std::uint64_t n = 5;
    std::uint64_t trials = 20000;
    std::uint64_t seed = 1;
    int threads = 0;
    app.add_option("--n", n, "Input size");
    app.add_option("--trials", trials, "Trials per driver");
    app.add_option("--seed", seed, "Master seed");
    app.add_option("--threads", threads, "OpenMP threads for the parallel driver");
    CLI11_PARSE(app, argc, argv);

    using worstlab::bogo_stats_parallel;
    using worstlab::bogo_stats_serial;
    using Clock = std::chrono::steady_clock;
    const worstlab::Budget budget = worstlab::default_budget();

    auto t0 = Clock::now();
    auto serial = bogo_stats_serial(n, trials, seed, budget);
    double serial_secs = std::chrono::duration<double>(Clock::now() - t0).count();

    t0 = Clock::now();
    auto parallel = bogo_stats_parallel(n, trials, seed, budget, threads);
    double parallel_secs = std::chrono::duration<double>(Clock::now() - t0).count();

    bool identical = serial.mean_shuffles == parallel.mean_shuffles &&
                     serial.mean_swaps == parallel.mean_swaps &&
                     serial.mean_comparisons == parallel.mean_comparisons &&
                     serial.completed == parallel.completed;

    std::printf("n=%llu trials=%llu mean_shuffles=%.4f\n",
                static_cast<unsigned long long>(n),
                static_cast<unsigned long long>(trials), serial.mean_shuffles);
    std::printf("serial:   %8.3f s  (%.0f trials/s)\n", serial_secs,
                static_cast<double>(trials) / serial_secs);
    std::printf("parallel: %8.3f s  (%.0f trials/s, speedup %.2fx)\n", parallel_secs,
                static_cast<double>(trials) / parallel_secs,
                serial_secs / parallel_secs);
    std::printf("results identical: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
