#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slipforge/invariant_basis.hpp"
#include "slipforge/qstate.hpp"

namespace slipforge {

// Evaluations of the seeded degree-k basis at one state.  Signatures compare
// projectively: two states in one orbit differ by a common factor c^k across
// the whole vector.
struct RatioSignature {
    int degree = 0;
    uint64_t seed = 0;
    std::vector<Cx> values;
    int reference_index = -1;   // index of the largest-magnitude value, -1 if all vanish
};

enum class VerdictKind {
    EquivalentCandidate,
    Inequivalent,
    NullConeIndistinguishable,
};

// INEQUIVALENT verdicts carry a concrete witness: the degree and the pair of
// polynomial indices whose cross-multiplied ratio test failed (f_index ==
// h_index marks a one-sided vanishing witness).
struct Verdict {
    VerdictKind kind = VerdictKind::EquivalentCandidate;
    int witness_degree = -1;
    int witness_f = -1;
    int witness_h = -1;
    std::string caveat;

    [[nodiscard]] std::string kind_string() const;
};

RatioSignature signature(const QuditState& psi, int k, uint64_t seed);

// Ratio-vector test over the listed degrees, using the cross-multiplied form
// f_i(psi) f_j(phi) vs f_i(phi) f_j(psi) so small denominators never divide.
// Equality of all ratios is necessary for SLOCC equivalence and, for stable
// states tested at every degree, also sufficient; the verdict's caveat field
// records that assumption.  States on which every tested polynomial vanishes
// are mutually indistinguishable to this test.
Verdict compare_states(const QuditState& psi, const QuditState& phi,
                       const std::vector<int>& degrees, double tol, uint64_t seed);

// All gated degrees up to the qubit cap k <= 6 (lowest nontrivial battery).
std::vector<int> default_degrees(const std::vector<int>& dims);

} // namespace slipforge
