#include "worstlab/pessimal.hpp"

#include <limits>

namespace worstlab {

GrowthFunctionSpec GrowthFunctionSpec::constant(std::uint64_t c) {
    return {Family::Constant, c};
}

GrowthFunctionSpec GrowthFunctionSpec::identity() {
    return {Family::Identity, 0};
}

GrowthFunctionSpec GrowthFunctionSpec::polynomial(std::uint64_t p) {
    if (p < 1 || p > std::numeric_limits<unsigned>::max())
        throw std::invalid_argument("polynomial exponent out of range");
    return {Family::Polynomial, p};
}

GrowthFunctionSpec GrowthFunctionSpec::exponential2() {
    return {Family::Exponential2, 0};
}

GrowthFunctionSpec GrowthFunctionSpec::factorial() {
    return {Family::Factorial, 0};
}

GrowthFunctionSpec GrowthFunctionSpec::parse(const std::string& text) {
    if (text == "id") return identity();
    if (text == "exp2") return exponential2();
    if (text == "fact") return factorial();
    auto parse_param = [&](const std::string& prefix) {
        std::size_t pos = 0;
        std::uint64_t value = std::stoull(text.substr(prefix.size()), &pos);
        if (prefix.size() + pos != text.size())
            throw std::invalid_argument("trailing characters");
        return value;
    };
    try {
        if (text.rfind("const:", 0) == 0) return constant(parse_param("const:"));
        if (text.rfind("poly:", 0) == 0) return polynomial(parse_param("poly:"));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    throw std::invalid_argument(
        "unrecognized growth function '" + text +
        "' (expected const:<c> | id | poly:<p> | exp2 | fact)");
}

std::string GrowthFunctionSpec::to_string() const {
    switch (family_) {
    case Family::Constant: return "const:" + std::to_string(parameter_);
    case Family::Identity: return "id";
    case Family::Polynomial: return "poly:" + std::to_string(parameter_);
    case Family::Exponential2: return "exp2";
    case Family::Factorial: return "fact";
    }
    return "?";
}

BigInt eval_growth(const GrowthFunctionSpec& f, std::uint64_t n) {
    switch (f.family()) {
    case GrowthFunctionSpec::Family::Constant:
        return f.parameter();
    case GrowthFunctionSpec::Family::Identity:
        return n;
    case GrowthFunctionSpec::Family::Polynomial: {
        BigInt base = n;
        return boost::multiprecision::pow(base, static_cast<unsigned>(f.parameter()));
    }
    case GrowthFunctionSpec::Family::Exponential2:
        return BigInt(1) << n;
    case GrowthFunctionSpec::Family::Factorial:
        return multifactorial(n, 1);
    }
    throw std::logic_error("unreachable growth family");
}

std::uint64_t RandomSource::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below bound must be >= 1");
    // Rejection sampling over the largest multiple of bound.
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        std::uint64_t raw = engine_();
        if (raw < limit || limit == 0) return raw % bound;
    }
}

void bublesort(std::vector<NestedValue>& list, CounterSet& counters) {
    std::size_t m = list.size();
    for (std::size_t i = 2; i <= m; ++i) {
        for (std::size_t j = 1; j <= m - i + 1; ++j) {
            if (lt(list[j], list[j - 1], counters)) // lt(L[j+1], L[j]), 1-based
                swap_elements(list, j - 1, j, counters);
        }
    }
}

std::vector<NestedValue> permutations(const std::vector<NestedValue>& list,
                                      CounterSet& counters) {
    if (list.size() <= 1) {
        // only one permutation; copy to preserve the original
        return {NestedValue::list(deep_copy(list, counters))};
    }
    std::vector<NestedValue> result;
    for (std::size_t i = 0; i < list.size(); ++i) {
        // copy of the original with the i-th element removed
        std::vector<NestedValue> rest = deep_copy(list, counters);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        std::vector<NestedValue> sub = permutations(rest, counters);
        for (auto& perm : sub) {
            std::vector<NestedValue> items;
            items.reserve(list.size());
            items.push_back(deep_copy(list[i], counters));
            for (auto& item : perm.items())
                items.push_back(std::move(item));
            result.push_back(NestedValue::list(std::move(items)));
        }
    }
    return result;
}

void multilevelsort(std::vector<NestedValue>& list, std::uint64_t k, CounterSet& counters) {
    if (k == 0) {
        bublesort(list, counters);
        return;
    }
    std::vector<NestedValue> perms = permutations(list, counters);
    multilevelsort(perms, k - 1, counters);
    list = deep_copy(perms.front().items(), counters);
}

void worstsort(std::vector<NestedValue>& list, const GrowthFunctionSpec& f,
               CounterSet& counters, const Budget& budget) {
    BigInt depth = eval_growth(f, list.size());
    // Recursion nests one level per k; cap what a native stack can take.
    constexpr std::uint64_t kMaxNesting = 100'000;
    if (depth > kMaxNesting)
        throw FeasibilityRefusedError("nesting depth k = " + depth.str() +
                                      " exceeds the supported limit of " +
                                      std::to_string(kMaxNesting));
    auto k = static_cast<std::uint64_t>(depth);
    Prediction p;
    try {
        p = predict(list.size(), k);
    } catch (const DigitLimitError& e) {
        // A prediction too large to even write down cannot fit any budget.
        throw FeasibilityRefusedError(std::string("prediction overflow: ") + e.what());
    }
    FeasibilityDecision decision = check_feasible(p, budget);
    if (!decision.accepted) throw FeasibilityRefusedError(decision.reason);
    multilevelsort(list, k, counters);
}

void bogosort_random(std::vector<NestedValue>& list, CounterSet& counters,
                     RandomSource& random) {
    std::size_t n = list.size();
    while (!is_sorted(list, counters)) {
        // Fisher-Yates, n-1 position draws
        for (std::size_t i = n - 1; i >= 1; --i)
            swap_elements(list, i, random.next_below(i + 1), counters);
        counters.charge_shuffle();
    }
}

void bogosort_deterministic(std::vector<NestedValue>& list, CounterSet& counters) {
    std::vector<NestedValue> perms = permutations(list, counters);
    for (auto& perm : perms) {
        if (is_sorted(perm.items(), counters)) {
            list = deep_copy(perm.items(), counters);
            return;
        }
    }
    throw std::logic_error("no sorted permutation found"); // unreachable
}

} // namespace worstlab
