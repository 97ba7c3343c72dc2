#ifndef WORSTLAB_PESSIMAL_HPP
#define WORSTLAB_PESSIMAL_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "worstlab/compare.hpp"
#include "worstlab/costmodel.hpp"
#include "worstlab/counters.hpp"
#include "worstlab/value.hpp"

namespace worstlab {

// The second argument of worstsort: a named monotone computable
// function f: N -> N from a closed registry of five families.
// Text form: "const:<c>" | "id" | "poly:<p>" | "exp2" | "fact".
class GrowthFunctionSpec {
public:
    enum class Family { Constant, Identity, Polynomial, Exponential2, Factorial };

    static GrowthFunctionSpec constant(std::uint64_t c);
    static GrowthFunctionSpec identity();
    static GrowthFunctionSpec polynomial(std::uint64_t p); // requires p >= 1
    static GrowthFunctionSpec exponential2();
    static GrowthFunctionSpec factorial();

    static GrowthFunctionSpec parse(const std::string& text);

    Family family() const { return family_; }
    std::uint64_t parameter() const { return parameter_; }
    std::string to_string() const;

private:
    GrowthFunctionSpec(Family family, std::uint64_t parameter)
        : family_(family), parameter_(parameter) {}

    Family family_;
    std::uint64_t parameter_;
};

BigInt eval_growth(const GrowthFunctionSpec& f, std::uint64_t n);

// Deterministic shuffle source: identical seed reproduces the identical
// shuffle sequence. Bounded draws use rejection sampling so the stream
// does not depend on std::uniform_int_distribution internals.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed)
        : seed_(seed), engine_(seed) {}

    static constexpr const char* kAlgorithmId = "mt19937_64-rejection";

    std::uint64_t seed() const { return seed_; }

    // Uniform draw from [0, bound), bound >= 1.
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

class FeasibilityRefusedError : public std::runtime_error {
public:
    explicit FeasibilityRefusedError(const std::string& reason)
        : std::runtime_error("refused: " + reason), reason_(reason) {}

    const std::string& reason() const { return reason_; }

private:
    std::string reason_;
};

// In-place bubble sort with fixed loop bounds i=2..m, j=1..m-i+1:
// exactly m(m-1)/2 lt invocations regardless of input order.
void bublesort(std::vector<NestedValue>& list, CounterSet& counters);

// All length(L)! arrangements, each a deep copy sharing no storage with
// the input. Order: for i ascending, L[i] prepended to each permutation
// of L without index i. Performs no lt calls; charges leaf_copies for
// every leaf materialized.
std::vector<NestedValue> permutations(const std::vector<NestedValue>& list,
                                      CounterSet& counters);

// k=0: bublesort. k>0: build all permutations, recursively sort them at
// level k-1, copy the first back. Total lt invocations are M(M-1)/2 with
// M = length(L)!^(k), independent of element order.
void multilevelsort(std::vector<NestedValue>& list, std::uint64_t k, CounterSet& counters);

// multilevelsort(L, f(length(L))). Evaluates f and runs the feasibility
// check against the budget before any allocation; refusal throws.
void worstsort(std::vector<NestedValue>& list, const GrowthFunctionSpec& f,
               CounterSet& counters, const Budget& budget);

// Check-then-shuffle loop; an already sorted input terminates with n-1
// comparisons and zero shuffles. Each shuffle is Fisher-Yates with n-1
// position draws, counted as n-1 swaps (identity swaps included).
void bogosort_random(std::vector<NestedValue>& list, CounterSet& counters,
                     RandomSource& random);

// Builds all permutations and linearly scans for the first sorted one.
// The original arrangement is listed first, so a sorted input costs
// exactly n-1 comparisons.
void bogosort_deterministic(std::vector<NestedValue>& list, CounterSet& counters);

} // namespace worstlab

#endif // WORSTLAB_PESSIMAL_HPP
