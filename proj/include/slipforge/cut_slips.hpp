#pragma once

#include <cstdint>
#include <vector>

#include "slipforge/linalg.hpp"
#include "slipforge/qstate.hpp"

namespace slipforge {

// ── BipartiteCut: a nonempty proper subset of qubit sites (1-based) ──────────
//
// A cut and its complement generate the same polynomial family; the canonical
// representative keeps |side_a| <= n/2, ties broken lexicographically.
struct BipartiteCut {
    std::vector<int> side_a;   // sorted ascending, 1-based

    BipartiteCut(std::vector<int> sites, int n);

    [[nodiscard]] int q() const { return static_cast<int>(side_a.size()); }
    [[nodiscard]] std::vector<int> complement(int n) const;
    [[nodiscard]] std::string to_string() const;
};

// All canonical cuts of an n-qubit system: 2^{n-1} - 1 of them.
std::vector<BipartiteCut> canonical_cuts(int n);

// Reshape psi along the cut: A[j][k] = amplitude of |u_j>|v_k>, where u runs
// over side-A computational labels and v over side-B labels, each side in
// ascending site order (lower site index more significant).
CMatrix matricize(const QuditState& psi, const BipartiteCut& cut);

// Gram matrices of the bilinear pairing on the two sides' computational
// product bases: U = J^{(x)q} and V = J^{(x)(n-q)} as sign matrices.
std::pair<CMatrix, CMatrix> gram_matrices(const BipartiteCut& cut, int n);

// f_ell(psi) = Tr[(U A V A^T)^ell]: a degree-2*ell invariant for every cut.
Cx f_ell(const QuditState& psi, const BipartiteCut& cut, int ell);

// Numerical rank of the evaluation matrix of {f_2 over all canonical cuts}
// at `samples` seeded random states; singular values below 1e-8 of the
// largest count as zero.  Requires odd n in 3..7 and samples >= 4 * 2^{n-1}.
int degree4_span_rank(int n, int samples, uint64_t seed = 20240901);

} // namespace slipforge
