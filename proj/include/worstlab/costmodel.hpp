#ifndef WORSTLAB_COSTMODEL_HPP
#define WORSTLAB_COSTMODEL_HPP

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "worstlab/counters.hpp"

namespace worstlab {

// Raised when a requested big-integer result would exceed the digit
// limit (or take infeasibly long to compute exactly).
class DigitLimitError : public std::runtime_error {
public:
    DigitLimitError(double estimated_digits, std::size_t limit)
        : std::runtime_error(format_message(estimated_digits, limit)),
          estimated_digits_(estimated_digits) {}

    double estimated_digits() const { return estimated_digits_; }

private:
    static std::string format_message(double digits, std::size_t limit) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.4g", digits);
        return "result would have roughly " + std::string(buf) +
               " decimal digits, above the limit of " + std::to_string(limit);
    }

    double estimated_digits_;
};

inline constexpr std::size_t kDefaultDigitLimit = 1'000'000;

// n!^(k): the factorial applied k times to n. k=0 returns n itself.
BigInt multifactorial(std::uint64_t n, std::uint64_t k,
                      std::size_t digit_limit = kDefaultDigitLimit);

// Analytical counts for multilevelsort(L, k) on a flat list of n
// integers. The only lt caller is the bottom-level bublesort over
// M = n!^(k) elements, so lt_calls = M(M-1)/2 exactly.
//
// Comparison bounds: each lt invocation costs at least one leaf
// comparison (cmp_min = lt_calls) and at most its equal-value cost. The
// equal-value cost doubles once per nesting level: a list scan runs both
// lt(a[i],b[i]) and lt(b[i],a[i]) over every index it passes, so a leaf
// at depth d is read at most 2^d times. Compared elements have depth k
// and per_element_leaves leaves, giving
// cmp_max = lt_calls * per_element_leaves * 2^k (early exit only
// shortens the scan). For k = 0 the compared elements are integer leaves
// and every lt costs exactly one comparison, so cmp_min = cmp_max =
// lt_calls.
//
// Leaves materialized follow leaves(0) = n, leaves(j) = leaves(j-1) * n!^(j);
// leaves_total estimates the storage of the final permutation level.
struct Prediction {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    BigInt M;
    BigInt lt_calls;
    BigInt cmp_min;
    BigInt cmp_max;
    BigInt leaves_total;
    BigInt per_element_leaves;
    std::uint64_t element_depth = 0;
};

Prediction predict(std::uint64_t n, std::uint64_t k,
                   std::size_t digit_limit = kDefaultDigitLimit);

struct FeasibilityDecision {
    bool accepted = true;
    std::string reason; // names the violated limit and both values
};

FeasibilityDecision check_feasible(const Prediction& p, const Budget& b);

// Analytic references for randomized bogosort on n distinct unsorted
// elements. The comparison figure (e-1)n! is asymptotic only and is
// reported, never asserted.
struct BogosortExpectation {
    std::uint64_t n = 0;
    BigInt expected_shuffles;      // n!, geometric with success 1/n!
    BigInt expected_swaps;         // (n-1) * n!
    double asymptotic_comparisons; // (e-1) * n!, reference only
};

BogosortExpectation predict_bogosort(std::uint64_t n);

} // namespace worstlab

#endif // WORSTLAB_COSTMODEL_HPP
