#include "worstlab/costmodel.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace worstlab {

namespace {

// log10(m!) via Stirling; good enough for a guard.
double factorial_digits(double m) {
    if (m < 2) return 1.0;
    return (m * std::log(m) - m + 0.5 * std::log(2.0 * 3.14159265358979323846 * m)) /
           std::log(10.0);
}

BigInt checked_factorial(const BigInt& m, std::size_t digit_limit) {
    if (m <= 2) return m < 2 ? BigInt(1) : BigInt(2);
    if (m > std::numeric_limits<std::uint64_t>::max())
        throw DigitLimitError(std::numeric_limits<double>::infinity(), digit_limit);
    auto iterations = static_cast<std::uint64_t>(m);
    double digits = factorial_digits(static_cast<double>(iterations));
    if (digits > static_cast<double>(digit_limit))
        throw DigitLimitError(digits, digit_limit);
    BigInt result = 1;
    for (std::uint64_t i = 2; i <= iterations; ++i) result *= i;
    return result;
}

} // namespace

BigInt multifactorial(std::uint64_t n, std::uint64_t k, std::size_t digit_limit) {
    BigInt current = n;
    for (std::uint64_t i = 0; i < k; ++i) {
        current = checked_factorial(current, digit_limit);
        if (current <= 2) {
            // 1! = 1 and 2! = 2 are fixed points; remaining applications
            // change nothing.
            if (current == 0) current = 1;
            break;
        }
    }
    return current;
}

Prediction predict(std::uint64_t n, std::uint64_t k, std::size_t digit_limit) {
    Prediction p;
    p.n = n;
    p.k = k;

    // Degenerate inputs: at most one arrangement at every level, no
    // comparisons, no permutation storage to speak of.
    if (n <= 1) {
        p.M = (k == 0) ? n : 1;
        p.lt_calls = 0;
        p.cmp_min = 0;
        p.cmp_max = 0;
        p.element_depth = k;
        p.per_element_leaves = n;
        p.leaves_total = n;
        return p;
    }

    // For n >= 2, leaves_total >= 2^k: refuse depths whose results cannot
    // fit the digit limit before looping.
    if (k > 0 && 0.30103 * static_cast<double>(k) > static_cast<double>(digit_limit))
        throw DigitLimitError(0.30103 * static_cast<double>(k), digit_limit);

    // Cache the multifactorial ladder m_j = n!^(j), j = 0..k.
    std::vector<BigInt> ladder;
    ladder.reserve(k + 1);
    ladder.emplace_back(n);
    for (std::uint64_t j = 1; j <= k; ++j)
        ladder.push_back(checked_factorial(ladder.back(), digit_limit));

    p.M = ladder[k];
    p.lt_calls = p.M * (p.M - 1) / 2;
    p.cmp_min = p.lt_calls;

    if (k == 0) {
        p.per_element_leaves = 1;
        p.element_depth = 0;
        p.cmp_max = p.lt_calls; // integer leaves cost exactly one comparison
        p.leaves_total = n;
        return p;
    }

    p.element_depth = k;
    p.per_element_leaves = n;
    for (std::uint64_t j = 1; j + 1 <= k; ++j)
        p.per_element_leaves *= ladder[j];
    // Worst lt cost per element: every list level may scan both
    // directions over an equal prefix, doubling the per-leaf cost once
    // per nesting level, so a leaf at depth k costs at most 2^k.
    p.cmp_max = p.lt_calls * p.per_element_leaves * (BigInt(1) << k);
    p.leaves_total = p.per_element_leaves * ladder[k];
    return p;
}

FeasibilityDecision check_feasible(const Prediction& p, const Budget& b) {
    if (b.max_leaves_materialized && p.leaves_total > *b.max_leaves_materialized) {
        return {false, "leaves_total " + p.leaves_total.str() +
                           " exceeds max_leaves_materialized " +
                           b.max_leaves_materialized->str()};
    }
    if (b.max_integer_comparisons && p.cmp_min > *b.max_integer_comparisons) {
        return {false, "cmp_min " + p.cmp_min.str() +
                           " exceeds max_integer_comparisons " +
                           b.max_integer_comparisons->str()};
    }
    return {true, ""};
}

BogosortExpectation predict_bogosort(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("predict_bogosort requires n >= 2");
    BogosortExpectation e;
    e.n = n;
    e.expected_shuffles = checked_factorial(BigInt(n), kDefaultDigitLimit);
    e.expected_swaps = e.expected_shuffles * (n - 1);
    e.asymptotic_comparisons =
        (std::exp(1.0) - 1.0) * std::tgamma(static_cast<double>(n) + 1.0);
    return e;
}

} // namespace worstlab
