#include "worstlab/compare.hpp"

namespace worstlab {

namespace {

bool lt_recursive(const NestedValue& a, const NestedValue& b, CounterSet& counters) {
    if (a.is_leaf() != b.is_leaf())
        throw ShapeMismatchError("leaf compared against list");
    if (a.is_leaf()) {
        counters.charge_comparison();
        return a.leaf_value() < b.leaf_value();
    }
    const auto& ia = a.items();
    const auto& ib = b.items();
    if (ia.size() != ib.size())
        throw ShapeMismatchError("lists of length " + std::to_string(ia.size()) +
                                 " and " + std::to_string(ib.size()));
    for (std::size_t k = 0; k < ia.size(); ++k) {
        if (lt_recursive(ia[k], ib[k], counters)) return true;  // a[k] < b[k]
        if (lt_recursive(ib[k], ia[k], counters)) return false; // a[k] > b[k]
        // a[k] = b[k], keep going
    }
    return false; // all elements equal, hence a = b
}

} // namespace

bool lt(const NestedValue& a, const NestedValue& b, CounterSet& counters) {
    counters.charge_lt_invocation();
    return lt_recursive(a, b, counters);
}

bool is_sorted(const std::vector<NestedValue>& list, CounterSet& counters) {
    for (std::size_t j = 0; j + 1 < list.size(); ++j)
        if (lt(list[j + 1], list[j], counters)) return false;
    return true;
}

void swap_elements(std::vector<NestedValue>& list, std::size_t i, std::size_t j,
                   CounterSet& counters) {
    if (i >= list.size() || j >= list.size())
        throw std::out_of_range("swap index out of range");
    counters.charge_swap();
    if (i != j) std::swap(list[i], list[j]);
}

} // namespace worstlab
