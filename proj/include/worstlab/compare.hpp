#ifndef WORSTLAB_COMPARE_HPP
#define WORSTLAB_COMPARE_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "worstlab/counters.hpp"
#include "worstlab/value.hpp"

namespace worstlab {

class ShapeMismatchError : public std::runtime_error {
public:
    explicit ShapeMismatchError(const std::string& what)
        : std::runtime_error("shape mismatch: " + what) {}
};

// Recursive lexicographic less-than. Integer leaves cost one comparison
// each; lists scan index by index with up to two recursive calls per
// index (first a<b, then b<a). Charges one lt invocation for the
// outermost call only; every leaf comparison, including recursive ones,
// goes to integer_comparisons.
bool lt(const NestedValue& a, const NestedValue& b, CounterSet& counters);

// Adjacent-pair scan with early exit; a sorted list of n distinct
// integers costs exactly n-1 comparisons.
bool is_sorted(const std::vector<NestedValue>& list, CounterSet& counters);

// Exchanges list[i] and list[j] (0-based) and charges one swap, identity
// swaps included.
void swap_elements(std::vector<NestedValue>& list, std::size_t i, std::size_t j,
                   CounterSet& counters);

} // namespace worstlab

#endif // WORSTLAB_COMPARE_HPP
