#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "slipforge/linalg.hpp"
#include "slipforge/qstate.hpp"

namespace slipforge {

// Thrown when a request exceeds the desk-scale feasibility caps (full S_k
// sums for k <= 8, per-factor spaces m^k <= 2^16, dense contractions
// (prod dims)^k <= 2^21).  The CLI maps this to exit code 2.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Perfect matching of the copy set {0..k-1}: pairs (p, q) with p < q,
// sorted by p.
using Matching = std::vector<std::pair<int, int>>;

// The Catalan(k/2) non-crossing perfect matchings of {0..k-1}; a basis of
// the SL(2)-invariant subspace of (C^2)^{(x)k} via epsilon products.
std::vector<Matching> non_crossing_matchings(int k);

// ── transpose intertwiner ─────────────────────────────────────────────────────
//
// Pure index bijection between (x)^k H_n labels (one flat H_n label per copy)
// and (x)_s (C^{m_s})^{(x)k} labels (one flat m_s^k label per site).  Both
// sides use the big-endian digit convention of QuditState.
std::vector<int64_t> copy_to_factor_labels(const std::vector<int>& dims, int k,
                                           const std::vector<int64_t>& copy_labels);
std::vector<int64_t> factor_to_copy_labels(const std::vector<int>& dims, int k,
                                           const std::vector<int64_t>& factor_labels);

// ── single-factor projector (Schur-Weyl) ─────────────────────────────────────
//
// P w = (d_lambda / k!) sum_{sigma in S_k} chi_lambda(sigma) sigma.w for the
// rectangular lambda = (k/m, ..., k/m); the orthogonal projection of
// (C^m)^{(x)k} onto the SL(m)-invariants.  Zero when m does not divide k.
std::vector<Cx> project_single(int m, int k, const std::vector<Cx>& w);
std::vector<Cx> project_single_serial(int m, int k, const std::vector<Cx>& w);

// Orthonormal basis of the image of project_single; the count always equals
// rect_dim(m, k/m).
std::vector<std::vector<Cx>> invariant_basis_single(int m, int k);

// ── invariant tensors and their polynomials ───────────────────────────────────
//
// An invariant tensor v in ((x)^k H_n)^G, stored structurally so that
// f_v(psi) = <v | psi^{(x)k}> never materializes psi^{(x)k}:
//   matching form (qubits): one perfect matching per site, v^T the product of
//     epsilon tensors along the matchings;
//   product form: one dense per-site vector w_s in (C^{m_s})^{(x)k}, each in
//     the SL(m_s)-invariant subspace, v = (w_1 (x) ... (x) w_n)^T.
// A tensor is a complex linear combination of such components (usually one).
struct InvariantTensor {
    struct Component {
        std::vector<Matching> matchings;          // matching form when nonempty
        std::vector<std::vector<Cx>> factors;     // product form otherwise
        [[nodiscard]] bool is_matching() const { return !matchings.empty(); }
    };

    std::vector<int> dims;
    int k = 0;
    std::vector<std::pair<Cx, Component>> terms;
};

InvariantTensor matching_tensor(std::vector<int> dims, int k, std::vector<Matching> matchings);
InvariantTensor product_tensor(std::vector<int> dims, int k, std::vector<std::vector<Cx>> factors);

// f_v(psi) = <v | psi^{(x)k}>.  Matching components contract as a tensor
// network, eliminating copies in ascending order (cost sum_j 2^{open_j} 2^n,
// open_j = epsilon edges spanning the copy-j frontier); product components
// run an odometer over all (prod dims)^k copy labels (cost (prod dims)^k
// per component, guarded by the feasibility cap).
Cx eval_slip(const InvariantTensor& v, const QuditState& psi);

// ── degree-k basis construction ───────────────────────────────────────────────
//
// Spanning candidates (site-wise invariant-basis tuples, orbit-deduplicated
// under simultaneous S_k action in the qubit case) are evaluated at
// 3x(candidate count) seeded random states; a rank-revealing decomposition
// (threshold 1e-8 of the largest singular value) picks a maximal linearly
// independent subset.  Returns the empty list when the degree gate fails.
// For equal dims the count always matches slip_dim(k, n, m).
std::vector<InvariantTensor> slip_basis(const std::vector<int>& dims, int k, uint64_t seed);

// Evaluation matrix E[r][c] = f_{candidate c}(psi_r); exposed so the serial
// and OpenMP builders can be compared and benchmarked.
CMatrix build_evaluation_matrix(const std::vector<InvariantTensor>& candidates,
                                const std::vector<QuditState>& states);
CMatrix build_evaluation_matrix_serial(const std::vector<InvariantTensor>& candidates,
                                       const std::vector<QuditState>& states);

} // namespace slipforge
