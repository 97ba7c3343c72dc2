#include <doctest.h>

#include "worstlab/costmodel.hpp"

using namespace worstlab;

TEST_CASE("multifactorial") {
    CHECK(multifactorial(5, 0) == 5);
    CHECK(multifactorial(3, 1) == 6);
    CHECK(multifactorial(3, 2) == 720);
    CHECK(multifactorial(2, 3) == 2); // 2! = 2 fixed point
    CHECK(multifactorial(4, 1) == 24);
    CHECK(multifactorial(0, 0) == 0);
    CHECK(multifactorial(0, 1) == 1);
    CHECK(multifactorial(0, 5) == 1);
    CHECK(multifactorial(1, 100) == 1);
    CHECK(multifactorial(2, 1'000'000'000ull) == 2);
}

TEST_CASE("multifactorial monotonicity for n >= 2") {
    for (std::uint64_t n = 2; n <= 5; ++n) {
        for (std::uint64_t k = 0; k <= 2; ++k) {
            CHECK(multifactorial(n, k) <= multifactorial(n + 1, k));
            try {
                BigInt deeper = multifactorial(n, k + 1);
                CHECK(multifactorial(n, k) <= deeper);
            } catch (const DigitLimitError&) {
                // (n, k+1) beyond the representable domain, nothing to compare
            }
        }
    }
    // at n = 2 the k-monotonicity is an equality
    CHECK(multifactorial(2, 1) == multifactorial(2, 2));
}

TEST_CASE("multifactorial digit limit refusal") {
    CHECK_THROWS_AS(multifactorial(3, 4), DigitLimitError); // (720!)!
    // a tight limit refuses even 720!
    CHECK_THROWS_AS(multifactorial(3, 3, 100), DigitLimitError);
    CHECK(multifactorial(3, 3, 2000) > 0); // 720! has ~1747 digits
}

TEST_CASE("predict: frozen examples") {
    Prediction p = predict(3, 1);
    CHECK(p.M == 6);
    CHECK(p.lt_calls == 15);
    CHECK(p.cmp_min == 15);
    CHECK(p.per_element_leaves == 3);
    CHECK(p.cmp_max == 90);
    CHECK(p.leaves_total == 18);
    CHECK(p.element_depth == 1);

    p = predict(3, 2);
    CHECK(p.M == 720);
    CHECK(p.lt_calls == 258840);
    CHECK(p.leaves_total == 12960); // 3 * 6 * 720
    CHECK(p.per_element_leaves == 18);
    CHECK(p.cmp_max == BigInt(258840) * 18 * 4); // 2^k per leaf at k = 2
    CHECK(p.element_depth == 2);

    p = predict(1, 5);
    CHECK(p.M == 1);
    CHECK(p.lt_calls == 0);

    p = predict(4, 1);
    CHECK(p.lt_calls == 276); // 24*23/2

    p = predict(2, 2);
    CHECK(p.M == 2);
    CHECK(p.lt_calls == 1);

    // k=0 is plain bublesort on integer leaves: one comparison per lt
    p = predict(10, 0);
    CHECK(p.M == 10);
    CHECK(p.lt_calls == 45);
    CHECK(p.cmp_min == 45);
    CHECK(p.cmp_max == 45);
    CHECK(p.leaves_total == 10);
    CHECK(p.element_depth == 0);
}

TEST_CASE("prediction algebra: 2*lt_calls + M = M^2") {
    for (std::uint64_t n = 0; n <= 6; ++n) {
        for (std::uint64_t k = 0; k <= 4; ++k) {
            Prediction p;
            try {
                p = predict(n, k);
            } catch (const DigitLimitError&) {
                continue; // beyond the representable domain
            }
            CHECK(2 * p.lt_calls + p.M == p.M * p.M);
            CHECK(p.cmp_min <= p.cmp_max);
            if (p.M >= 1 && n >= 1) CHECK(p.lt_calls <= p.cmp_min);
        }
    }
}

TEST_CASE("leaves recurrence: leaves(n,k) = leaves(n,k-1) * n!^(k)") {
    for (std::uint64_t n = 0; n <= 5; ++n) {
        for (std::uint64_t k = 1; k <= 3; ++k) {
            Prediction lo, hi;
            try {
                lo = predict(n, k - 1);
                hi = predict(n, k);
            } catch (const DigitLimitError&) {
                continue;
            }
            CHECK(hi.leaves_total == lo.leaves_total * multifactorial(n, k));
        }
    }
}

TEST_CASE("check_feasible") {
    Budget b;
    b.max_integer_comparisons = BigInt(1'000'000'000);
    b.max_leaves_materialized = BigInt(1'000'000'000);

    CHECK(check_feasible(predict(3, 2), b).accepted);
    CHECK(check_feasible(predict(0, 3), b).accepted);

    auto refusal = check_feasible(predict(4, 2), b);
    CHECK_FALSE(refusal.accepted);
    CHECK(refusal.reason.find("leaves_total") != std::string::npos);
    CHECK(refusal.reason.find("1000000000") != std::string::npos);

    Budget tight;
    tight.max_integer_comparisons = BigInt(10);
    auto cmp_refusal = check_feasible(predict(3, 1), tight);
    CHECK_FALSE(cmp_refusal.accepted);
    CHECK(cmp_refusal.reason.find("cmp_min") != std::string::npos);

    CHECK(check_feasible(predict(4, 2), Budget::unlimited()).accepted);
}

TEST_CASE("predict_bogosort") {
    auto e = predict_bogosort(5);
    CHECK(e.expected_shuffles == 120);
    CHECK(e.expected_swaps == 480);
    CHECK(e.asymptotic_comparisons == doctest::Approx(206.19).epsilon(0.01));

    CHECK(predict_bogosort(2).expected_shuffles == 2);
    CHECK_THROWS_AS(predict_bogosort(1), std::invalid_argument);
}
