#include "worstlab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <sstream>

#include "worstlab/compare.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace worstlab {

namespace {

constexpr std::size_t kInlineOutputLimit = 64 * 1024;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::string fnv1a_digest(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[19];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

std::vector<NestedValue> generate_input(std::uint64_t n, std::uint64_t seed) {
    RandomSource rng(mix_seed(seed, 0x1157));
    std::vector<NestedValue> out;
    out.reserve(n);
    std::uint64_t range = std::max<std::uint64_t>(1, 10 * n);
    for (std::uint64_t i = 0; i < n; ++i)
        out.push_back(NestedValue::leaf(static_cast<std::int64_t>(rng.next_below(range))));
    return out;
}

std::vector<NestedValue> descending_input(std::uint64_t n) {
    std::vector<NestedValue> out;
    out.reserve(n);
    for (std::uint64_t i = n; i >= 1; --i)
        out.push_back(NestedValue::leaf(static_cast<std::int64_t>(i)));
    return out;
}

std::vector<NestedValue> resolve_input(const ExperimentConfig& cfg) {
    if (cfg.input) return *cfg.input;
    if (!cfg.n) throw std::invalid_argument("either --input or --n is required");
    return generate_input(*cfg.n, cfg.seed);
}

// Uncounted sortedness/permutation check on the result; the experiment's
// counters must reflect only the algorithm itself.
bool output_valid(const std::vector<NestedValue>& input,
                  const std::vector<NestedValue>& output) {
    CounterSet scratch;
    if (!is_sorted(output, scratch)) return false;
    auto key = [](const NestedValue& v) { return serialize_value(v); };
    std::vector<std::string> a, b;
    for (const auto& v : input) a.push_back(key(v));
    for (const auto& v : output) b.push_back(key(v));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

struct TrialOutcome {
    bool completed = false;
    std::uint64_t shuffles = 0;
    std::uint64_t swaps = 0;
    std::uint64_t comparisons = 0;
};

TrialOutcome run_bogo_trial(std::uint64_t n, std::uint64_t seed, const Budget& budget) {
    std::vector<NestedValue> list = descending_input(n);
    CounterSet counters(budget);
    RandomSource rng(seed);
    TrialOutcome out;
    try {
        bogosort_random(list, counters, rng);
        out.completed = true;
    } catch (const BudgetExceededError&) {
        out.completed = false;
    }
    out.shuffles = counters.counts().shuffles;
    out.swaps = counters.counts().swaps;
    out.comparisons = counters.counts().integer_comparisons;
    return out;
}

// Integer partial sums keep aggregation exact and order-independent, so
// the serial and parallel drivers produce identical statistics.
struct TrialAccumulator {
    std::uint64_t completed = 0;
    std::uint64_t excluded = 0;
    unsigned __int128 sum_shuffles = 0, sum_swaps = 0, sum_comparisons = 0;
    unsigned __int128 sq_shuffles = 0, sq_swaps = 0, sq_comparisons = 0;

    void add(const TrialOutcome& t) {
        if (!t.completed) {
            ++excluded;
            return;
        }
        ++completed;
        sum_shuffles += t.shuffles;
        sum_swaps += t.swaps;
        sum_comparisons += t.comparisons;
        sq_shuffles += static_cast<unsigned __int128>(t.shuffles) * t.shuffles;
        sq_swaps += static_cast<unsigned __int128>(t.swaps) * t.swaps;
        sq_comparisons += static_cast<unsigned __int128>(t.comparisons) * t.comparisons;
    }

    void merge(const TrialAccumulator& other) {
        completed += other.completed;
        excluded += other.excluded;
        sum_shuffles += other.sum_shuffles;
        sum_swaps += other.sum_swaps;
        sum_comparisons += other.sum_comparisons;
        sq_shuffles += other.sq_shuffles;
        sq_swaps += other.sq_swaps;
        sq_comparisons += other.sq_comparisons;
    }
};

BogoStatsReport finish_stats(std::uint64_t n, std::uint64_t trials,
                             const TrialAccumulator& acc) {
    BogoStatsReport report;
    report.n = n;
    report.trials = trials;
    report.completed = acc.completed;
    report.excluded = acc.excluded;
    report.expectation = predict_bogosort(n);
    report.rng_algorithm = RandomSource::kAlgorithmId;
    if (acc.completed > 0) {
        auto stats = [&](unsigned __int128 sum, unsigned __int128 sq, double& mean,
                         double& variance) {
            double m = static_cast<double>(sum) / static_cast<double>(acc.completed);
            mean = m;
            variance = static_cast<double>(sq) / static_cast<double>(acc.completed) - m * m;
        };
        stats(acc.sum_shuffles, acc.sq_shuffles, report.mean_shuffles,
              report.variance_shuffles);
        stats(acc.sum_swaps, acc.sq_swaps, report.mean_swaps, report.variance_swaps);
        stats(acc.sum_comparisons, acc.sq_comparisons, report.mean_comparisons,
              report.variance_comparisons);
    }
    return report;
}

std::string budget_field(const std::optional<BigInt>& v) {
    return v ? v->str() : "unlimited";
}

} // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 1));
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "bublesort") return Algorithm::Bublesort;
    if (name == "bogo-random") return Algorithm::BogoRandom;
    if (name == "bogo-det") return Algorithm::BogoDeterministic;
    if (name == "multilevel") return Algorithm::Multilevel;
    if (name == "worst") return Algorithm::Worst;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

std::string algorithm_name(Algorithm a) {
    switch (a) {
    case Algorithm::Bublesort: return "bublesort";
    case Algorithm::BogoRandom: return "bogo-random";
    case Algorithm::BogoDeterministic: return "bogo-det";
    case Algorithm::Multilevel: return "multilevel";
    case Algorithm::Worst: return "worst";
    }
    return "?";
}

std::string outcome_name(Outcome o) {
    switch (o) {
    case Outcome::Sorted: return "sorted";
    case Outcome::Refused: return "refused";
    case Outcome::BudgetExceeded: return "budget-exceeded";
    case Outcome::Error: return "error";
    }
    return "?";
}

Budget default_budget() {
    Budget b;
    b.max_integer_comparisons = BigInt(1'000'000'000);
    b.max_leaves_materialized = BigInt(1'000'000'000);
    if (const char* env = std::getenv("WORSTLAB_MAX_LEAVES")) {
        try {
            b.max_leaves_materialized = BigInt(std::string(env));
        } catch (const std::exception&) {
            throw std::invalid_argument("WORSTLAB_MAX_LEAVES is not a valid integer");
        }
    }
    return b;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    ExperimentReport report;
    report.config = cfg;
    auto t0 = std::chrono::steady_clock::now();
    auto stamp = [&] {
        report.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    std::vector<NestedValue> input;
    try {
        input = resolve_input(cfg);
    } catch (const std::exception& e) {
        report.outcome = Outcome::Error;
        report.message = e.what();
        stamp();
        return report;
    }
    report.config.input = input; // echo the resolved input
    const auto n = static_cast<std::uint64_t>(input.size());

    // Feasibility first, before any allocation or counting.
    try {
        switch (cfg.algorithm) {
        case Algorithm::Bublesort:
            report.prediction = predict(n, 0);
            break;
        case Algorithm::Multilevel:
            report.prediction = predict(n, cfg.k);
            break;
        case Algorithm::Worst: {
            if (!cfg.f) throw std::invalid_argument("worst requires a growth function");
            BigInt depth = eval_growth(*cfg.f, n);
            if (depth > 100'000)
                throw FeasibilityRefusedError("nesting depth k = " + depth.str() +
                                              " exceeds the supported limit");
            report.prediction = predict(n, static_cast<std::uint64_t>(depth));
            break;
        }
        case Algorithm::BogoDeterministic:
            // n! permutations of n leaves each must be materialized; the
            // k=1 leaf estimate covers exactly that storage.
            if (n >= 2) {
                Prediction storage = predict(n, 1);
                if (cfg.budget.max_leaves_materialized &&
                    storage.leaves_total > *cfg.budget.max_leaves_materialized)
                    throw FeasibilityRefusedError(
                        "permutation storage " + storage.leaves_total.str() +
                        " leaves exceeds max_leaves_materialized " +
                        cfg.budget.max_leaves_materialized->str());
            }
            break;
        case Algorithm::BogoRandom:
            break;
        }
        if (report.prediction) {
            FeasibilityDecision d = check_feasible(*report.prediction, cfg.budget);
            if (!d.accepted &&
                (cfg.algorithm == Algorithm::Multilevel || cfg.algorithm == Algorithm::Worst))
                throw FeasibilityRefusedError(d.reason);
        }
    } catch (const FeasibilityRefusedError& e) {
        report.outcome = Outcome::Refused;
        report.message = e.reason();
        stamp();
        return report;
    } catch (const DigitLimitError& e) {
        report.outcome = Outcome::Refused;
        report.message = std::string("prediction overflow: ") + e.what();
        stamp();
        return report;
    } catch (const std::exception& e) {
        report.outcome = Outcome::Error;
        report.message = e.what();
        stamp();
        return report;
    }

    std::vector<NestedValue> working = input; // never mutate the caller's view
    CounterSet counters(cfg.budget);
    try {
        switch (cfg.algorithm) {
        case Algorithm::Bublesort:
            bublesort(working, counters);
            break;
        case Algorithm::Multilevel:
            multilevelsort(working, cfg.k, counters);
            break;
        case Algorithm::Worst:
            worstsort(working, *cfg.f, counters, cfg.budget);
            break;
        case Algorithm::BogoRandom: {
            RandomSource rng(cfg.seed);
            bogosort_random(working, counters, rng);
            break;
        }
        case Algorithm::BogoDeterministic:
            bogosort_deterministic(working, counters);
            break;
        }
        report.counters = counters.counts();
        report.outcome = output_valid(input, working) ? Outcome::Sorted : Outcome::Error;
        if (report.outcome == Outcome::Error)
            report.message = "output is not a sorted permutation of the input";
    } catch (const BudgetExceededError& e) {
        report.counters = e.partial_counters();
        report.outcome = Outcome::BudgetExceeded;
        report.message = e.reason();
    } catch (const FeasibilityRefusedError& e) {
        report.outcome = Outcome::Refused;
        report.message = e.reason();
    } catch (const std::exception& e) {
        report.counters = counters.counts();
        report.outcome = Outcome::Error;
        report.message = e.what();
    }

    if (report.outcome == Outcome::Sorted) {
        std::string serialized = serialize_value(working);
        if (serialized.size() <= kInlineOutputLimit) {
            report.output_value = std::move(serialized);
        } else {
            report.output_leaf_count = leaf_count(working);
            report.output_digest = fnv1a_digest(serialized);
        }
    }
    stamp();
    return report;
}

VerificationReport verify(const ExperimentConfig& cfg, bool exhaustive) {
    if (cfg.algorithm == Algorithm::BogoRandom ||
        cfg.algorithm == Algorithm::BogoDeterministic)
        throw std::invalid_argument("verify applies to bublesort, multilevel, and worst");

    VerificationReport vr;
    std::vector<std::vector<NestedValue>> inputs;
    std::vector<NestedValue> base = resolve_input(cfg);
    if (exhaustive) {
        auto by_text = [](const NestedValue& a, const NestedValue& b) {
            return serialize_value(a) < serialize_value(b);
        };
        std::vector<NestedValue> perm = base;
        std::sort(perm.begin(), perm.end(), by_text);
        do {
            inputs.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end(), by_text));
    } else {
        inputs.push_back(base);
    }

    std::optional<std::uint64_t> first_lt, first_copies;
    for (const auto& input : inputs) {
        ExperimentConfig run_cfg = cfg;
        run_cfg.input = input;
        ExperimentReport report = run_experiment(run_cfg);
        ++vr.runs;
        auto fail = [&](const std::string& msg) {
            vr.passed = false;
            vr.failures.push_back("input " + serialize_value(input) + ": " + msg);
        };
        if (report.outcome != Outcome::Sorted) {
            fail("outcome " + outcome_name(report.outcome) + " (" + report.message + ")");
            vr.last_run = std::move(report);
            continue;
        }
        const Prediction& p = *report.prediction;
        BigInt measured_lt = report.counters.lt_invocations;
        BigInt measured_cmp = report.counters.integer_comparisons;
        if (measured_lt != p.lt_calls)
            fail("lt_invocations " + measured_lt.str() + " != predicted " + p.lt_calls.str());
        if (measured_cmp < p.cmp_min || measured_cmp > p.cmp_max)
            fail("integer_comparisons " + measured_cmp.str() + " outside [" +
                 p.cmp_min.str() + ", " + p.cmp_max.str() + "]");
        if (exhaustive) {
            if (!first_lt) {
                first_lt = report.counters.lt_invocations;
                first_copies = report.counters.leaf_copies;
            } else {
                if (report.counters.lt_invocations != *first_lt)
                    fail("lt_invocations varies across permutations");
                if (report.counters.leaf_copies != *first_copies)
                    fail("leaf_copies varies across permutations");
            }
        }
        vr.last_run = std::move(report);
    }
    return vr;
}

std::string growth_table(const std::vector<std::uint64_t>& n_values,
                         const std::vector<std::uint64_t>& k_values,
                         const Budget& budget, TableFormat format,
                         std::size_t digit_limit) {
    struct Row {
        std::uint64_t n, k;
        bool overflow = false;
        double estimated_digits = 0.0;
        Prediction p;
        bool feasible = false;
    };
    std::vector<Row> rows;
    for (std::uint64_t n : n_values) {
        for (std::uint64_t k : k_values) {
            Row row{n, k};
            try {
                row.p = predict(n, k, digit_limit);
                row.feasible = check_feasible(row.p, budget).accepted;
            } catch (const DigitLimitError& e) {
                row.overflow = true;
                row.estimated_digits = e.estimated_digits();
            }
            rows.push_back(std::move(row));
        }
    }

    auto overflow_text = [](const Row& r) {
        std::ostringstream os;
        os << "overflow(~" << r.estimated_digits << " digits)";
        return os.str();
    };

    if (format == TableFormat::Json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json cell{{"n", r.n}, {"k", r.k}};
            if (r.overflow) {
                cell["overflow"] = true;
                cell["estimated_digits"] = r.estimated_digits;
            } else {
                cell["M"] = r.p.M.str();
                cell["lt_calls"] = r.p.lt_calls.str();
                cell["cmp_min"] = r.p.cmp_min.str();
                cell["cmp_max"] = r.p.cmp_max.str();
                cell["leaves_total"] = r.p.leaves_total.str();
                cell["feasible"] = r.feasible;
            }
            out.push_back(std::move(cell));
        }
        return out.dump(2) + "\n";
    }

    std::ostringstream os;
    const char sep = format == TableFormat::Csv ? ',' : '\t';
    os << "n" << sep << "k" << sep << "M" << sep << "lt_calls" << sep << "cmp_min" << sep
       << "cmp_max" << sep << "leaves_total" << sep << "feasible" << "\n";
    for (const auto& r : rows) {
        os << r.n << sep << r.k << sep;
        if (r.overflow) {
            std::string cell = overflow_text(r);
            os << cell << sep << cell << sep << cell << sep << cell << sep << cell << sep
               << "false";
        } else {
            os << r.p.M << sep << r.p.lt_calls << sep << r.p.cmp_min << sep << r.p.cmp_max
               << sep << r.p.leaves_total << sep << (r.feasible ? "true" : "false");
        }
        os << "\n";
    }
    return os.str();
}

BogoStatsReport bogo_stats_serial(std::uint64_t n, std::uint64_t trials,
                                  std::uint64_t seed, const Budget& budget) {
    TrialAccumulator acc;
    for (std::uint64_t t = 0; t < trials; ++t)
        acc.add(run_bogo_trial(n, mix_seed(seed, t), budget));
    return finish_stats(n, trials, acc);
}

BogoStatsReport bogo_stats_parallel(std::uint64_t n, std::uint64_t trials,
                                    std::uint64_t seed, const Budget& budget,
                                    int threads) {
#ifdef _OPENMP
    int num_threads = threads > 0 ? threads : omp_get_max_threads();
    std::vector<TrialAccumulator> partials(static_cast<std::size_t>(num_threads));
#pragma omp parallel num_threads(num_threads)
    {
        TrialAccumulator& local = partials[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t)
            local.add(run_bogo_trial(n, mix_seed(seed, static_cast<std::uint64_t>(t)), budget));
    }
    TrialAccumulator acc;
    for (const auto& partial : partials) acc.merge(partial);
    return finish_stats(n, trials, acc);
#else
    (void)threads;
    return bogo_stats_serial(n, trials, seed, budget);
#endif
}

nlohmann::json to_json(const CounterSnapshot& c) {
    return {{"integer_comparisons", c.integer_comparisons},
            {"lt_invocations", c.lt_invocations},
            {"swaps", c.swaps},
            {"shuffles", c.shuffles},
            {"leaf_copies", c.leaf_copies}};
}

nlohmann::json to_json(const Prediction& p) {
    return {{"n", p.n},
            {"k", p.k},
            {"M", p.M.str()},
            {"lt_calls", p.lt_calls.str()},
            {"cmp_min", p.cmp_min.str()},
            {"cmp_max", p.cmp_max.str()},
            {"leaves_total", p.leaves_total.str()},
            {"per_element_leaves", p.per_element_leaves.str()},
            {"element_depth", p.element_depth}};
}

nlohmann::json to_json(const ExperimentConfig& cfg) {
    nlohmann::json j{{"algorithm", algorithm_name(cfg.algorithm)},
                     {"k", cfg.k},
                     {"seed", cfg.seed},
                     {"trials", cfg.trials},
                     {"budget",
                      {{"max_integer_comparisons", budget_field(cfg.budget.max_integer_comparisons)},
                       {"max_leaves_materialized", budget_field(cfg.budget.max_leaves_materialized)},
                       {"max_wall_seconds", cfg.budget.max_wall_seconds
                                                ? nlohmann::json(*cfg.budget.max_wall_seconds)
                                                : nlohmann::json(nullptr)}}}};
    j["input"] = cfg.input ? nlohmann::json(serialize_value(*cfg.input)) : nlohmann::json(nullptr);
    j["n"] = cfg.n ? nlohmann::json(*cfg.n) : nlohmann::json(nullptr);
    j["f"] = cfg.f ? nlohmann::json(cfg.f->to_string()) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const ExperimentReport& report) {
    nlohmann::json j{{"config", to_json(report.config)},
                     {"outcome", outcome_name(report.outcome)},
                     {"counters", to_json(report.counters)},
                     {"wall_seconds", report.wall_seconds}};
    j["prediction"] =
        report.prediction ? to_json(*report.prediction) : nlohmann::json(nullptr);
    if (!report.message.empty()) j["message"] = report.message;
    nlohmann::json output;
    if (report.output_value) {
        output = {{"value", *report.output_value}};
    } else if (report.output_leaf_count) {
        output = {{"leaf_count", *report.output_leaf_count},
                  {"digest", *report.output_digest}};
    } else {
        output = nullptr;
    }
    j["output"] = std::move(output);
    return j;
}

nlohmann::json to_json(const VerificationReport& report) {
    return {{"passed", report.passed},
            {"runs", report.runs},
            {"failures", report.failures},
            {"last_run", to_json(report.last_run)}};
}

nlohmann::json to_json(const BogoStatsReport& report) {
    return {{"n", report.n},
            {"trials", report.trials},
            {"completed", report.completed},
            {"excluded", report.excluded},
            {"mean_shuffles", report.mean_shuffles},
            {"mean_swaps", report.mean_swaps},
            {"mean_comparisons", report.mean_comparisons},
            {"variance_shuffles", report.variance_shuffles},
            {"variance_swaps", report.variance_swaps},
            {"variance_comparisons", report.variance_comparisons},
            {"expected_shuffles", report.expectation.expected_shuffles.str()},
            {"expected_swaps", report.expectation.expected_swaps.str()},
            {"asymptotic_comparisons", report.expectation.asymptotic_comparisons},
            {"rng_algorithm", report.rng_algorithm}};
}

} // namespace worstlab
