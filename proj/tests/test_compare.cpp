#include <doctest.h>

#include <algorithm>

#include "test_util.hpp"
#include "worstlab/compare.hpp"

using namespace worstlab;

TEST_CASE("lt on leaves charges exactly one comparison") {
    CounterSet c;
    CHECK(lt(NestedValue::leaf(2), NestedValue::leaf(3), c));
    CHECK(c.counts().integer_comparisons == 1);
    CHECK(c.counts().lt_invocations == 1);

    CHECK_FALSE(lt(NestedValue::leaf(3), NestedValue::leaf(2), c));
    CHECK_FALSE(lt(NestedValue::leaf(2), NestedValue::leaf(2), c));
    CHECK(c.counts().integer_comparisons == 3);
}

TEST_CASE("lt on lists: two-call scan costs") {
    CounterSet c;
    CHECK(lt(parse_value("[1,2]"), parse_value("[1,3]"), c));
    CHECK(c.counts().integer_comparisons == 3); // 1<1, 1<1, 2<3
    CHECK(c.counts().lt_invocations == 1);      // outermost only

    CounterSet c2;
    CHECK_FALSE(lt(parse_value("[2,3,1]"), parse_value("[2,3,1]"), c2));
    CHECK(c2.counts().integer_comparisons == 6); // 2 per index, all equal

    CounterSet c3;
    CHECK_FALSE(lt(parse_value("[]"), parse_value("[]"), c3));
    CHECK(c3.counts().integer_comparisons == 0);
}

TEST_CASE("lt shape mismatch") {
    CounterSet c;
    CHECK_THROWS_AS(lt(parse_value("[1,2]"), parse_value("[1,2,3]"), c), ShapeMismatchError);
    CHECK_THROWS_AS(lt(parse_value("[1,[2]]"), parse_value("[1,2]"), c), ShapeMismatchError);
    // mismatch below the first index is only an error when reached
    CHECK(lt(parse_value("[1,[2]]"), parse_value("[2,[3,4]]"), c));
}

TEST_CASE("lt agrees with the oracle and is a strict total order") {
    std::mt19937_64 rng(42);
    for (int round = 0; round < 200; ++round) {
        auto values = test::random_same_shape_list(rng, 3);
        const auto &a = values[0], &b = values[1], &x = values[2];
        CounterSet c;

        bool ab = lt(a, b, c);
        bool ba = lt(b, a, c);
        CHECK(ab == test::oracle_less(a, b));
        // trichotomy: exactly one of <, >, =
        int holds = int(ab) + int(ba) + int(a == b);
        CHECK(holds == 1);
        // irreflexive
        CHECK_FALSE(lt(a, a, c));
        // transitive
        if (ab && lt(b, x, c)) CHECK(lt(a, x, c));
    }
}

TEST_CASE("lt on flat equal-length int lists matches std::lexicographical_compare") {
    std::mt19937_64 rng(1234);
    for (int round = 0; round < 200; ++round) {
        std::size_t n = rng() % 6;
        std::vector<std::int64_t> xs, ys;
        for (std::size_t i = 0; i < n; ++i) {
            xs.push_back(static_cast<std::int64_t>(rng() % 4));
            ys.push_back(static_cast<std::int64_t>(rng() % 4));
        }
        std::vector<NestedValue> a, b;
        for (auto v : xs) a.push_back(NestedValue::leaf(v));
        for (auto v : ys) b.push_back(NestedValue::leaf(v));
        CounterSet c;
        CHECK(lt(NestedValue::list(a), NestedValue::list(b), c) ==
              std::lexicographical_compare(xs.begin(), xs.end(), ys.begin(), ys.end()));
    }
}

TEST_CASE("lt leaf-comparison cost bounds; equal values attain the max") {
    // For flat lists the worst case is 2 per leaf; each extra nesting
    // level doubles it, because both scan directions revisit equal
    // prefixes (e.g. lt([[1]],[[0]]) costs 3, above 2 * leaf_count).
    std::mt19937_64 rng(99);
    for (int round = 0; round < 300; ++round) {
        auto values = test::random_same_shape_list(rng, 2);
        const auto &a = values[0], &b = values[1];
        if (leaf_count(a) == 0) continue;
        CounterSet c;
        lt(a, b, c);
        auto cost = c.counts().integer_comparisons;
        CHECK(cost >= 1);
        CHECK(cost <= test::oracle_max_cost(a));
        if (a == b) CHECK(cost == test::oracle_max_cost(a));
    }
    CounterSet c;
    CHECK_FALSE(lt(parse_value("[[1]]"), parse_value("[[0]]"), c));
    CHECK(c.counts().integer_comparisons == 3);
}

TEST_CASE("is_sorted") {
    CounterSet c;
    CHECK(is_sorted(test::int_list({1, 2, 3}), c));
    CHECK(c.counts().integer_comparisons == 2); // n-1 on sorted distinct

    CounterSet c2;
    CHECK_FALSE(is_sorted(test::int_list({3, 1, 2}), c2));
    CHECK(c2.counts().integer_comparisons == 1); // early exit at first pair

    CounterSet c3;
    CHECK(is_sorted({}, c3));
    CHECK(is_sorted(test::int_list({7}), c3));
    CHECK(c3.counts().integer_comparisons == 0);

    CounterSet c4;
    CHECK(is_sorted(test::int_list({2, 2, 2}), c4)); // duplicates are non-decreasing
}

TEST_CASE("swap_elements") {
    CounterSet c;
    auto list = test::int_list({1, 2});
    swap_elements(list, 0, 1, c);
    CHECK(serialize_value(list) == "[2,1]");
    CHECK(c.counts().swaps == 1);

    auto single = test::int_list({5});
    swap_elements(single, 0, 0, c);
    CHECK(serialize_value(single) == "[5]");
    CHECK(c.counts().swaps == 2); // identity swap still counted

    auto nested = parse_value("[[1],[2],[3]]").items();
    swap_elements(nested, 0, 2, c);
    CHECK(serialize_value(nested) == "[[3],[2],[1]]");

    CHECK_THROWS_AS(swap_elements(single, 0, 1, c), std::out_of_range);
}

TEST_CASE("budget aborts at the first violating comparison") {
    Budget b;
    b.max_integer_comparisons = BigInt(3);
    CounterSet c(b);
    auto list = test::int_list({1, 2, 3, 4, 5});
    try {
        is_sorted(list, c);
        FAIL("expected BudgetExceededError");
    } catch (const BudgetExceededError& e) {
        CHECK(e.partial_counters().integer_comparisons == 3);
    }
}
