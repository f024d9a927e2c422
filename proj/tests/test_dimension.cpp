#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "slipforge/bigint.hpp"
#include "slipforge/dimension.hpp"

using namespace slipforge;

namespace {

// Closed forms for qubits: d(2,n) = (1+(-1)^n)/2, d(4,n) = (2^{n-1}+(-1)^n)/3,
// d(6,n) = (36 + 44(-1)^n + 8*2^n + 3(-3)^n + 5^{n-1}) / 144.
BigInt d2_closed(int n) { return (BigInt(1) + BigInt(-1).pow(n)) / BigInt(2); }
BigInt d4_closed(int n) { return (BigInt(2).pow(n - 1) + BigInt(-1).pow(n)) / BigInt(3); }
BigInt d6_closed(int n) {
    BigInt s = BigInt(36) + BigInt(44) * BigInt(-1).pow(n) + BigInt(8) * BigInt(2).pow(n)
             + BigInt(3) * BigInt(-3).pow(n) + BigInt(5).pow(n - 1);
    BigInt q, r;
    BigInt::divmod(s, BigInt(144), q, r);
    REQUIRE(r.is_zero());
    return q;
}

} // namespace

TEST_CASE("qubit dimension closed forms, n = 1..12") {
    for (int n = 1; n <= 12; ++n) {
        CHECK(slip_dim(2, n, 2) == d2_closed(n));
        CHECK(slip_dim(4, n, 2) == d4_closed(n));
        CHECK(slip_dim(6, n, 2) == d6_closed(n));
    }
    CHECK(slip_dim(2, 4, 2).to_int64() == 1);
    CHECK(slip_dim(4, 4, 2).to_int64() == 3);
    CHECK(slip_dim(6, 5, 2).to_int64() == 1);   // the unique degree-6 five-qubit invariant
    CHECK(slip_dim(4, 3, 2).to_int64() == 1);
    CHECK(slip_dim(4, 5, 2).to_int64() == 5);
    CHECK(slip_dim(4, 7, 2).to_int64() == 21);
}

TEST_CASE("odd degrees vanish for qubits") {
    for (int k = 1; k <= 11; k += 2)
        for (int n = 1; n <= 8; ++n) CHECK(slip_dim(k, n, 2).is_zero());
}

TEST_CASE("degree zero counts the constants") {
    CHECK(slip_dim(0, 3, 2).to_int64() == 1);
    CHECK(slip_dim(0, 2, 5).to_int64() == 1);
}

TEST_CASE("serial and parallel partition sums agree exactly") {
    for (int k : {2, 4, 6, 8, 10})
        for (int n : {1, 3, 7, 12}) CHECK(slip_dim(k, n, 2) == slip_dim_serial(k, n, 2));
    for (int k : {3, 6, 9})
        for (int n : {2, 5}) CHECK(slip_dim(k, n, 3) == slip_dim_serial(k, n, 3));
}

TEST_CASE("symbolic form k = 2 qubits") {
    ExpPolyDim p = slip_dim_symbolic(2, 2);
    REQUIRE(p.terms.size() == 2);
    CHECK(p.terms.at(BigInt(1)) == Rational(BigInt(1), BigInt(2)));
    CHECK(p.terms.at(BigInt(-1)) == Rational(BigInt(1), BigInt(2)));
}

TEST_CASE("symbolic form k = 6 matches the closed form term by term") {
    // (1/144)(36 + 44(-1)^n + 8*2^n + 3(-3)^n + 5^{n-1}) over 720:
    // {1: 180/720, -1: 220/720, 2: 40/720, -3: 15/720, 5: 1/720}
    ExpPolyDim p = slip_dim_symbolic(6, 2);
    REQUIRE(p.terms.size() == 5);
    const BigInt f720 = BigInt::factorial(6);
    auto numerator_over_720 = [&](int64_t base) {
        Rational scaled = p.terms.at(BigInt(base)) * Rational(f720);
        REQUIRE(scaled.is_integer());
        return scaled.num().to_int64();
    };
    CHECK(numerator_over_720(1) == 180);
    CHECK(numerator_over_720(-1) == 220);
    CHECK(numerator_over_720(2) == 40);
    CHECK(numerator_over_720(-3) == 15);
    CHECK(numerator_over_720(5) == 1);
}

TEST_CASE("symbolic form k = 10 matches the published expansion") {
    // 272160 + 28448(-3)^n + 766080(-1)^n + 338751*2^n + 14175(-1)^n 2^{2+n}
    // + 11200*3^{n+1} + 35*2^{n+1} 3^{n+2} + 315(-1)^n 4^{n+3} + 189(-2)^n 5^{n+1}
    // + 45*14^n + 42^n, all over 10! = 3628800.  In canonical base form:
    const std::vector<std::pair<int64_t, int64_t>> expected = {
        {-10, 945}, {-4, 20160}, {-3, 28448}, {-2, 56700}, {-1, 766080},
        {1, 272160}, {2, 338751}, {3, 33600}, {6, 630}, {14, 45}, {42, 1}};
    ExpPolyDim p = slip_dim_symbolic(10, 2);
    REQUIRE(p.terms.size() == expected.size());
    const BigInt f10 = BigInt::factorial(10);
    CHECK(f10.to_int64() == 3628800);
    size_t i = 0;
    for (const auto& [base, coeff] : p.terms) {
        CHECK(base.to_int64() == expected[i].first);
        Rational scaled = coeff * Rational(f10);
        REQUIRE(scaled.is_integer());
        CHECK(scaled.num().to_int64() == expected[i].second);
        ++i;
    }
}

TEST_CASE("symbolic evaluation equals the numeric dimension") {
    for (int k = 2; k <= 10; k += 2) {
        ExpPolyDim p = slip_dim_symbolic(k, 2);
        for (int n = 1; n <= 12; ++n) CHECK(p.eval(n) == slip_dim(k, n, 2));
    }
    for (int k = 3; k <= 9; k += 3) {
        ExpPolyDim p = slip_dim_symbolic(k, 3);
        for (int n = 1; n <= 12; ++n) CHECK(p.eval(n) == slip_dim(k, n, 3));
    }
}

TEST_CASE("symbolic evaluations are nonnegative integers") {
    for (int k : {2, 4, 6, 8}) {
        ExpPolyDim p = slip_dim_symbolic(k, 2);
        for (int n = 1; n <= 16; ++n) CHECK(p.eval(n) >= BigInt(0));
    }
}

TEST_CASE("symbolic form is zero when m does not divide k") {
    CHECK(slip_dim_symbolic(5, 2).empty());
    CHECK(slip_dim_symbolic(4, 3).empty());
}

TEST_CASE("degree gate") {
    CHECK(degree_gate(6, {2, 3}));
    CHECK_FALSE(degree_gate(4, {2, 3}));
    CHECK(degree_gate(2, {2, 2, 2}));
    CHECK_FALSE(degree_gate(3, {2, 2}));
    CHECK(degree_gate(12, {2, 3, 4}));
    CHECK_FALSE(degree_gate(8, {2, 3, 4}));
    CHECK(degree_gate(0, {2, 3}));
    CHECK_THROWS_AS(degree_gate(2, {1, 2}), std::invalid_argument);
}

TEST_CASE("asymptotic ratios approach 1/6 and 1/720") {
    auto r4 = asymptotic_ratio(4, 2, 20);
    REQUIRE(r4.size() == 20);
    Rational gap4 = (r4.back() - Rational(BigInt(1), BigInt(6))).abs();
    CHECK(gap4 < Rational(BigInt(1), BigInt(1000)));

    auto r6 = asymptotic_ratio(6, 2, 20);
    Rational gap6 = (r6.back() - Rational(BigInt(1), BigInt(720))).abs();
    CHECK(gap6 < Rational(BigInt(1), BigInt(1000)));

    // k = 2: the ratio alternates 0, 1 (no limit)
    auto r2 = asymptotic_ratio(2, 2, 8);
    for (int n = 1; n <= 8; ++n)
        CHECK(r2[static_cast<size_t>(n - 1)] == Rational((n % 2 == 0) ? 1 : 0));
}
