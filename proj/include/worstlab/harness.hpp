#ifndef WORSTLAB_HARNESS_HPP
#define WORSTLAB_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "worstlab/costmodel.hpp"
#include "worstlab/counters.hpp"
#include "worstlab/pessimal.hpp"
#include "worstlab/value.hpp"

namespace worstlab {

enum class Algorithm { Bublesort, BogoRandom, BogoDeterministic, Multilevel, Worst };

Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm a);

// Default ceiling: 1e9 comparisons, 1e9 leaves, no wall clock limit.
// WORSTLAB_MAX_LEAVES overrides the leaf cap.
Budget default_budget();

struct ExperimentConfig {
    Algorithm algorithm = Algorithm::Bublesort;
    std::optional<std::vector<NestedValue>> input; // explicit input
    std::optional<std::uint64_t> n;                // generated input size
    std::uint64_t k = 0;                           // multilevel only
    std::optional<GrowthFunctionSpec> f;           // worst only
    std::uint64_t seed = 0;                        // bogo-random and generation
    Budget budget = default_budget();
    std::uint64_t trials = 1;
};

enum class Outcome { Sorted, Refused, BudgetExceeded, Error };

std::string outcome_name(Outcome o);

struct ExperimentReport {
    ExperimentConfig config;
    Outcome outcome = Outcome::Error;
    std::string message; // refusal reason or error text
    CounterSnapshot counters;
    std::optional<Prediction> prediction;
    double wall_seconds = 0.0;
    // Serialized output when small; above 64 KiB only leaf count + digest.
    std::optional<std::string> output_value;
    std::optional<std::uint64_t> output_leaf_count;
    std::optional<std::string> output_digest;
};

// Resolves the input (runs on a private copy), performs the feasibility
// check where applicable, executes under budget, fills counters and
// prediction. Errors land in the report, never escape.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

struct VerificationReport {
    bool passed = true;
    std::uint64_t runs = 0;
    std::vector<std::string> failures; // expected vs measured, one line each
    ExperimentReport last_run;
};

// Runs the experiment and checks measured lt_invocations against the
// predicted lt_calls (exact) and integer_comparisons against
// [cmp_min, cmp_max]. Exhaustive mode repeats over every permutation of
// the input, requiring identical lt counts and correct output each time.
// Applies to bublesort, multilevel, and worst.
VerificationReport verify(const ExperimentConfig& cfg, bool exhaustive = false);

enum class TableFormat { Json, Csv, Text };

// One row per (n, k): predicted counts as exact decimal strings and a
// feasibility flag under the given budget; digit-limit refusals render
// as overflow cells.
std::string growth_table(const std::vector<std::uint64_t>& n_values,
                         const std::vector<std::uint64_t>& k_values,
                         const Budget& budget, TableFormat format,
                         std::size_t digit_limit = kDefaultDigitLimit);

struct BogoStatsReport {
    std::uint64_t n = 0;
    std::uint64_t trials = 0;
    std::uint64_t completed = 0;
    std::uint64_t excluded = 0; // budget-exceeded trials
    double mean_shuffles = 0.0;
    double mean_swaps = 0.0;
    double mean_comparisons = 0.0;
    double variance_shuffles = 0.0;
    double variance_swaps = 0.0;
    double variance_comparisons = 0.0;
    BogosortExpectation expectation;
    std::string rng_algorithm;
};

// Runs bogosort_random `trials` times on the descending list [n..1] with
// per-trial derived seeds. Results are identical for the serial and the
// OpenMP driver; the latter splits trials across threads.
BogoStatsReport bogo_stats_serial(std::uint64_t n, std::uint64_t trials,
                                  std::uint64_t seed, const Budget& budget);
BogoStatsReport bogo_stats_parallel(std::uint64_t n, std::uint64_t trials,
                                    std::uint64_t seed, const Budget& budget,
                                    int threads = 0);

// JSON views. Big integers serialize as exact decimal strings.
nlohmann::json to_json(const CounterSnapshot& c);
nlohmann::json to_json(const Prediction& p);
nlohmann::json to_json(const ExperimentConfig& cfg);
nlohmann::json to_json(const ExperimentReport& report);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const BogoStatsReport& report);

// Derives per-trial seeds; also used for input generation.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

} // namespace worstlab

#endif // WORSTLAB_HARNESS_HPP
