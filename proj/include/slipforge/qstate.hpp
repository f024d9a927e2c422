#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "slipforge/linalg.hpp"

namespace slipforge {

// ── QuditState: dense amplitudes over C^{m_1} x ... x C^{m_n} ────────────────
//
// Index convention (shared by every module and file format): basis label
// (b_1, ..., b_n) maps to the flat index sum_s b_s * prod_{t>s} m_t, i.e. the
// first qudit is most significant.  States need not be normalized.
struct QuditState {
    std::vector<int> dims;
    std::vector<Cx> amps;

    QuditState() = default;
    QuditState(std::vector<int> d, std::vector<Cx> a);

    [[nodiscard]] size_t total_dim() const;
    [[nodiscard]] int num_sites() const { return static_cast<int>(dims.size()); }
    [[nodiscard]] double norm() const;
    [[nodiscard]] QuditState normalized() const;
    [[nodiscard]] QuditState scaled(Cx factor) const;

    [[nodiscard]] size_t flat_index(const std::vector<int>& labels) const;
};

// One square block per site; applying means acting with the Kronecker product
// A_1 (x) ... (x) A_n without ever forming it.
struct LocalOperator {
    std::vector<CMatrix> blocks;

    // det of every block within tol of 1 (the special-linear check)
    [[nodiscard]] bool is_special_linear(double tol = 1e-12) const;
};

QuditState apply_local(const LocalOperator& g, const QuditState& psi);

// Apply one block on one site (0-based); building block of apply_local.
QuditState apply_single_site(const CMatrix& block, int site, const QuditState& psi);

// Seeded m x m complex matrix with |det - 1| <= 1e-10: Gaussian entries
// rescaled by a principal-branch m-th root of the determinant.  Draws with
// |det| < 0.5 are rejected and redrawn so the rescaled matrix stays
// well-conditioned.
CMatrix random_sl(int m, uint64_t seed);

// Independent local special-linear blocks for every site.
LocalOperator random_local_sl(const std::vector<int>& dims, uint64_t seed);

// The qubit bilinear pairing (psi, phi)_n = <psi*| J x...x J |phi> with
// J = [[0, 1], [-1, 0]].  Degree-2 invariant for even n; vanishes
// identically on psi = phi for odd n.
Cx bilinear_form(const QuditState& psi, const QuditState& phi);

// ── named states and random states ────────────────────────────────────────────

QuditState zeros_state(const std::vector<int>& dims);
QuditState ghz_state(int n);                               // (|0..0> + |1..1>)/sqrt(2)
QuditState w_state(int n);                                 // uniform single-excitation
QuditState bell_state();                                   // ghz_state(2)
QuditState random_state(const std::vector<int>& dims, uint64_t seed);   // Gaussian amps

} // namespace slipforge
