#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "slipforge/linalg.hpp"
#include "slipforge/qstate.hpp"
#include "slipforge/rng.hpp"
#include "slipforge/slocc.hpp"

using namespace slipforge;

namespace {

// random special-unitary block: QR of a Gaussian matrix, phase-fixed to det 1
CMatrix random_su(int m, uint64_t seed) {
    Rng rng(seed);
    CMatrix a(static_cast<size_t>(m), static_cast<size_t>(m));
    for (Cx& v : a.data) v = rng.complex_gaussian();
    // Gram-Schmidt columns
    for (int c = 0; c < m; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            Cx overlap{0.0, 0.0};
            for (int r = 0; r < m; ++r)
                overlap += std::conj(a.at(static_cast<size_t>(r), static_cast<size_t>(prev))) *
                           a.at(static_cast<size_t>(r), static_cast<size_t>(c));
            for (int r = 0; r < m; ++r)
                a.at(static_cast<size_t>(r), static_cast<size_t>(c)) -=
                    overlap * a.at(static_cast<size_t>(r), static_cast<size_t>(prev));
        }
        double norm = 0.0;
        for (int r = 0; r < m; ++r) norm += std::norm(a.at(static_cast<size_t>(r), static_cast<size_t>(c)));
        norm = std::sqrt(norm);
        for (int r = 0; r < m; ++r) a.at(static_cast<size_t>(r), static_cast<size_t>(c)) /= norm;
    }
    Cx det = determinant(a);
    Cx phase = std::pow(det, -1.0 / static_cast<double>(m));
    for (Cx& v : a.data) v *= phase;
    return a;
}

} // namespace

TEST_CASE("default degree battery") {
    CHECK(default_degrees({2, 2, 2}) == std::vector<int>{2, 4, 6});
    CHECK(default_degrees({2, 3}) == std::vector<int>{6});
    CHECK(default_degrees({3, 3}) == std::vector<int>{3, 6});
}

TEST_CASE("signatures are projective under scaling") {
    QuditState psi = random_state({2, 2, 2, 2}, 31).normalized();
    RatioSignature a = signature(psi, 4, 1);
    RatioSignature b = signature(psi.scaled(Cx{0.5, 1.25}), 4, 1);
    REQUIRE(a.values.size() == b.values.size());
    REQUIRE(a.values.size() == 3);
    // common factor c^4 across the vector
    Cx factor = b.values[0] / a.values[0];
    for (size_t i = 1; i < a.values.size(); ++i) {
        Cx f = b.values[i] / a.values[i];
        CHECK(std::abs(f - factor) <= 1e-8 * std::abs(factor));
    }
}

TEST_CASE("signatures match along an orbit") {
    QuditState psi = random_state({2, 2, 2, 2}, 77).normalized();
    LocalOperator g = random_local_sl({2, 2, 2, 2}, 78);
    QuditState moved = apply_local(g, psi).normalized();
    RatioSignature a = signature(psi, 4, 1);
    RatioSignature b = signature(moved, 4, 1);
    REQUIRE(a.reference_index >= 0);
    Cx ra = a.values[static_cast<size_t>(a.reference_index)];
    Cx rb = b.values[static_cast<size_t>(a.reference_index)];
    for (size_t i = 0; i < a.values.size(); ++i) {
        Cx lhs = a.values[i] * rb;
        Cx rhs = b.values[i] * ra;
        CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(std::abs(lhs), 1.0));
    }
}

TEST_CASE("zero state has the all-zero signature") {
    QuditState zero({2, 2}, std::vector<Cx>(4, Cx{0.0, 0.0}));
    RatioSignature sig = signature(zero, 2, 1);
    CHECK(sig.reference_index == -1);
    for (const Cx& v : sig.values) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("orbit pairs come back EQUIVALENT_CANDIDATE") {
    std::vector<int> dims{2, 2, 2, 2};
    for (uint64_t t = 0; t < 5; ++t) {
        QuditState psi = random_state(dims, 100 + t).normalized();
        LocalOperator g = random_local_sl(dims, 200 + t);
        QuditState phi = apply_local(g, psi).normalized();
        Verdict v = compare_states(psi, phi, {2, 4}, 1e-6, 1);
        CHECK(v.kind == VerdictKind::EquivalentCandidate);
        CHECK(!v.caveat.empty());   // stable-state assumption is spelled out
    }
}

TEST_CASE("GHZ vs W is INEQUIVALENT with a degree-4 witness") {
    Verdict v = compare_states(ghz_state(3), w_state(3), {4}, 1e-6, 1);
    CHECK(v.kind == VerdictKind::Inequivalent);
    CHECK(v.witness_degree == 4);
    CHECK(v.witness_f == v.witness_h);   // one-sided vanishing witness
}

TEST_CASE("|000> vs W at degree 4: both in the tested null cone") {
    Verdict v = compare_states(zeros_state({2, 2, 2}), w_state(3), {4}, 1e-6, 1);
    CHECK(v.kind == VerdictKind::NullConeIndistinguishable);
    CHECK(!v.caveat.empty());
}

TEST_CASE("comparison is symmetric and reflexive") {
    QuditState a = random_state({2, 2, 2}, 301).normalized();
    QuditState b = random_state({2, 2, 2}, 302).normalized();
    Verdict fwd = compare_states(a, b, {4}, 1e-6, 1);
    Verdict rev = compare_states(b, a, {4}, 1e-6, 1);
    CHECK(fwd.kind == rev.kind);
    Verdict self = compare_states(a, a, {4}, 1e-6, 1);
    CHECK(self.kind == VerdictKind::EquivalentCandidate);
}

TEST_CASE("GHZ vs GHZ under independent local unitaries stays a candidate") {
    for (uint64_t t = 0; t < 50; ++t) {
        QuditState a = ghz_state(3);
        QuditState b = ghz_state(3);
        LocalOperator ga, gb;
        for (int s = 0; s < 3; ++s) {
            ga.blocks.push_back(random_su(2, 1000 + 10 * t + static_cast<uint64_t>(s)));
            gb.blocks.push_back(random_su(2, 2000 + 10 * t + static_cast<uint64_t>(s)));
        }
        REQUIRE(ga.is_special_linear(1e-9));
        Verdict v = compare_states(apply_local(ga, a), apply_local(gb, b), {2, 4}, 1e-6, 1);
        CHECK(v.kind == VerdictKind::EquivalentCandidate);
    }
}

TEST_CASE("random inequivalent four-qubit states are separated") {
    // two generic states' degree-4 ratio vectors differ with probability 1
    QuditState a = random_state({2, 2, 2, 2}, 881).normalized();
    QuditState b = random_state({2, 2, 2, 2}, 882).normalized();
    Verdict v = compare_states(a, b, {4}, 1e-6, 1);
    CHECK(v.kind == VerdictKind::Inequivalent);
    CHECK(v.witness_degree == 4);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(compare_states(ghz_state(3), w_state(3), {3}, 1e-6, 1), std::invalid_argument);
    CHECK_THROWS_AS(compare_states(ghz_state(3), w_state(3), {}, 1e-6, 1), std::invalid_argument);
    CHECK_THROWS_AS(compare_states(ghz_state(3), ghz_state(4).normalized(), {4}, 1e-6, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(signature(ghz_state(3), 3, 1), std::invalid_argument);
}
