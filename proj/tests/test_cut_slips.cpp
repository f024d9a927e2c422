#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "slipforge/cut_slips.hpp"
#include "slipforge/dimension.hpp"
#include "slipforge/qstate.hpp"

using namespace slipforge;

TEST_CASE("canonical cut enumeration") {
    auto c3 = canonical_cuts(3);
    REQUIRE(c3.size() == 3);   // 2^{3-1} - 1
    CHECK(c3[0].side_a == std::vector<int>{1});
    CHECK(c3[1].side_a == std::vector<int>{2});
    CHECK(c3[2].side_a == std::vector<int>{3});
    CHECK(canonical_cuts(5).size() == 15);
    CHECK(canonical_cuts(7).size() == 63);
    // even n: size-n/2 cuts appear once, with the site-1 representative
    auto c4 = canonical_cuts(4);
    CHECK(c4.size() == 7);
    for (const auto& cut : c4)
        if (cut.q() == 2) CHECK(cut.side_a.front() == 1);
}

TEST_CASE("matricize reads coefficients off the cut") {
    QuditState bell = bell_state();
    CMatrix a = matricize(bell, BipartiteCut({1}, 2));
    CHECK(a.at(0, 0).real() == doctest::Approx(std::sqrt(0.5)));
    CHECK(a.at(1, 1).real() == doctest::Approx(std::sqrt(0.5)));
    CHECK(std::abs(a.at(0, 1)) == 0.0);
    CHECK(std::abs(a.at(1, 0)) == 0.0);

    CMatrix z = matricize(zeros_state({2, 2}), BipartiteCut({1}, 2));
    CHECK(z.at(0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(z.at(0, 1)) + std::abs(z.at(1, 0)) + std::abs(z.at(1, 1)) == 0.0);

    // product states have matricization rank 1 on every cut
    QuditState prod = zeros_state({2, 2, 2});
    for (const auto& cut : canonical_cuts(3)) {
        CMatrix m = matricize(prod, cut);
        CHECK(numerical_rank(m, 1e-10) == 1);
    }
}

TEST_CASE("gram matrices are J tensor powers") {
    auto [u1, v1] = gram_matrices(BipartiteCut({1}, 3), 3);
    CHECK(u1.at(0, 1).real() == 1.0);
    CHECK(u1.at(1, 0).real() == -1.0);
    CHECK(std::abs(u1.at(0, 0)) + std::abs(u1.at(1, 1)) == 0.0);

    // q = 2: symmetric; q = 3: antisymmetric
    auto [u2, v2] = gram_matrices(BipartiteCut({1, 2}, 5), 5);
    for (size_t i = 0; i < u2.rows; ++i)
        for (size_t j = 0; j < u2.cols; ++j) CHECK(u2.at(i, j) == u2.at(j, i));
    CHECK(v2.rows == 8);
    for (size_t i = 0; i < v2.rows; ++i)
        for (size_t j = 0; j < v2.cols; ++j) CHECK(v2.at(i, j) == -v2.at(j, i));
}

TEST_CASE("f_1 on the Bell state across the single cut is -1") {
    Cx v = f_ell(bell_state(), BipartiteCut({1}, 2), 1);
    CHECK(v.real() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("product states sit in the kernel of every f_ell") {
    QuditState prod = zeros_state({2, 2, 2, 2});
    for (const auto& cut : canonical_cuts(4))
        for (int ell = 1; ell <= 3; ++ell) CHECK(std::abs(f_ell(prod, cut, ell)) <= 1e-14);
}

TEST_CASE("f_ell is invariant under random special-linear maps") {
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> dims(static_cast<size_t>(n), 2);
        auto cuts = canonical_cuts(n);
        for (uint64_t trial = 0; trial < 100; ++trial) {
            QuditState psi = random_state(dims, 1000 + trial).normalized();
            LocalOperator g = random_local_sl(dims, 5000 + trial);
            QuditState gpsi = apply_local(g, psi);
            const BipartiteCut& cut = cuts[trial % cuts.size()];
            int ell = 1 + static_cast<int>(trial % 3);
            Cx before = f_ell(psi, cut, ell);
            Cx after = f_ell(gpsi, cut, ell);
            CHECK(std::abs(after - before) <= 1e-9 * std::max(1.0, std::abs(before)));
        }
    }
}

TEST_CASE("homogeneity: f_ell(c psi) = c^{2 ell} f_ell(psi)") {
    QuditState psi = random_state({2, 2, 2, 2}, 404);
    for (Cx c : {Cx{2.0, 0.0}, Cx{0.0, 1.0}}) {
        for (int ell = 1; ell <= 3; ++ell) {
            const BipartiteCut cut({2, 4}, 4);
            Cx scaled = f_ell(psi.scaled(c), cut, ell);
            Cx expect = std::pow(c, 2 * ell) * f_ell(psi, cut, ell);
            CHECK(std::abs(scaled - expect) <= 1e-10 * std::max(1.0, std::abs(expect)));
        }
    }
}

TEST_CASE("cut and complement give the same polynomial") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        QuditState psi = random_state({2, 2, 2, 2, 2}, 600 + seed);
        for (int ell = 1; ell <= 3; ++ell) {
            Cx a = f_ell(psi, BipartiteCut({1, 3}, 5), ell);
            Cx b = f_ell(psi, BipartiteCut({2, 4, 5}, 5), ell);
            CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
        }
    }
}

TEST_CASE("even n, ell = 1: every cut gives the same value up to a constant") {
    const int n = 4;
    auto cuts = canonical_cuts(n);
    std::vector<int> dims(static_cast<size_t>(n), 2);
    // ratios to the first cut must be state-independent
    std::vector<Cx> reference_ratio(cuts.size(), Cx{0.0, 0.0});
    for (uint64_t s = 0; s < 50; ++s) {
        QuditState psi = random_state(dims, 700 + s);
        Cx base = f_ell(psi, cuts[0], 1);
        REQUIRE(std::abs(base) > 1e-12);
        for (size_t c = 1; c < cuts.size(); ++c) {
            Cx ratio = f_ell(psi, cuts[c], 1) / base;
            if (s == 0) {
                reference_ratio[c] = ratio;
            } else {
                CHECK(std::abs(ratio - reference_ratio[c]) <= 1e-8 * std::max(1.0, std::abs(ratio)));
            }
        }
    }
}

TEST_CASE("even n, ell = 1 agrees with the bilinear pairing up to a constant") {
    const int n = 4;
    std::vector<int> dims(static_cast<size_t>(n), 2);
    const BipartiteCut cut({1, 4}, n);
    Cx ratio{0.0, 0.0};
    for (uint64_t s = 0; s < 20; ++s) {
        QuditState psi = random_state(dims, 800 + s);
        Cx pair = bilinear_form(psi, psi);
        REQUIRE(std::abs(pair) > 1e-12);
        Cx r = f_ell(psi, cut, 1) / pair;
        if (s == 0) {
            ratio = r;
        } else {
            CHECK(std::abs(r - ratio) <= 1e-8 * std::max(1.0, std::abs(ratio)));
        }
    }
}

TEST_CASE("degree-4 span rank matches the dimension formula") {
    CHECK(degree4_span_rank(3, 16) == slip_dim(4, 3, 2).to_int64());   // 1
    CHECK(degree4_span_rank(5, 64) == slip_dim(4, 5, 2).to_int64());   // 5
    CHECK(degree4_span_rank(7, 256) == slip_dim(4, 7, 2).to_int64());  // 21
    CHECK_THROWS_AS(degree4_span_rank(4, 64), std::invalid_argument);
    CHECK_THROWS_AS(degree4_span_rank(5, 10), std::invalid_argument);
}

TEST_CASE("cut validation") {
    CHECK_THROWS_AS(BipartiteCut({}, 3), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteCut({1, 2, 3}, 3), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteCut({0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteCut({4}, 3), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteCut({2, 2}, 3), std::invalid_argument);
}
