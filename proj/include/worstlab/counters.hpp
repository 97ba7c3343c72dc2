#ifndef WORSTLAB_COUNTERS_HPP
#define WORSTLAB_COUNTERS_HPP

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace worstlab {

using BigInt = boost::multiprecision::cpp_int;

// The five tallies every algorithm charges. Time is measured in integer
// comparisons; the rest are bookkeeping for cross-checks and budgets.
struct CounterSnapshot {
    std::uint64_t integer_comparisons = 0;
    std::uint64_t lt_invocations = 0;
    std::uint64_t swaps = 0;
    std::uint64_t shuffles = 0;
    std::uint64_t leaf_copies = 0;

    bool operator==(const CounterSnapshot&) const = default;
};

// Resource ceiling for a run. Unset fields mean unlimited.
struct Budget {
    std::optional<BigInt> max_integer_comparisons;
    std::optional<BigInt> max_leaves_materialized;
    std::optional<double> max_wall_seconds;

    static Budget unlimited() { return {}; }
};

class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(std::string reason, CounterSnapshot partial)
        : std::runtime_error("budget exceeded: " + reason),
          reason_(std::move(reason)),
          partial_(partial) {}

    const std::string& reason() const { return reason_; }
    const CounterSnapshot& partial_counters() const { return partial_; }

private:
    std::string reason_;
    CounterSnapshot partial_;
};

// Mutable tally owned by exactly one experiment. Limits are checked at
// every comparison charge and every leaf materialization, so overshoot
// is at most one operation.
class CounterSet {
public:
    CounterSet() = default;

    explicit CounterSet(const Budget& budget) {
        constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
        if (budget.max_integer_comparisons && *budget.max_integer_comparisons < kMax)
            max_comparisons_ = static_cast<std::uint64_t>(*budget.max_integer_comparisons);
        if (budget.max_leaves_materialized && *budget.max_leaves_materialized < kMax)
            max_leaf_copies_ = static_cast<std::uint64_t>(*budget.max_leaves_materialized);
        if (budget.max_wall_seconds)
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(*budget.max_wall_seconds));
    }

    const CounterSnapshot& counts() const { return counts_; }

    void charge_comparison() {
        if (counts_.integer_comparisons >= max_comparisons_)
            throw BudgetExceededError("integer comparison limit reached", counts_);
        ++counts_.integer_comparisons;
        if (deadline_ && (counts_.integer_comparisons & 0xfff) == 0)
            check_deadline();
    }

    void charge_lt_invocation() { ++counts_.lt_invocations; }

    void charge_swap() { ++counts_.swaps; }

    void charge_shuffle() {
        ++counts_.shuffles;
        if (deadline_) check_deadline();
    }

    void charge_leaf_copy() {
        if (counts_.leaf_copies >= max_leaf_copies_)
            throw BudgetExceededError("leaf materialization limit reached", counts_);
        ++counts_.leaf_copies;
    }

private:
    void check_deadline() {
        if (std::chrono::steady_clock::now() > *deadline_)
            throw BudgetExceededError("wall clock limit reached", counts_);
    }

    CounterSnapshot counts_;
    std::uint64_t max_comparisons_ = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t max_leaf_copies_ = std::numeric_limits<std::uint64_t>::max();
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

} // namespace worstlab

#endif // WORSTLAB_COUNTERS_HPP
