#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "slipforge/bigint.hpp"
#include "slipforge/qstate.hpp"

namespace slipforge {

// ── SparsePoly: exact polynomials in x_0..x_N, y_0..y_N ──────────────────────
//
// Exponent vectors have length 2*(N+1): the x-block first, then the y-block.
// Coefficients are exact rationals; zero coefficients are never stored, and
// the map ordering fixes a canonical term order for serialization.
struct SparsePoly {
    int nvars = 0;   // N+1: number of x-variables (and of y-variables)
    std::map<std::vector<uint8_t>, Rational> terms;

    explicit SparsePoly(int n_vars = 0) : nvars(n_vars) {}

    [[nodiscard]] bool is_zero() const { return terms.empty(); }
    [[nodiscard]] size_t term_count() const { return terms.size(); }

    // single monomial c * prod x_j^{ex_j} * prod y_j^{ey_j}
    static SparsePoly monomial(int n_vars, const std::vector<std::pair<int, int>>& x_exps,
                               const std::vector<std::pair<int, int>>& y_exps, Rational coeff);

    void add_term(const std::vector<uint8_t>& exps, const Rational& coeff);

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return a.nvars == b.nvars && a.terms == b.terms;
    }

    [[nodiscard]] SparsePoly scaled(const Rational& c) const;
    [[nodiscard]] SparsePoly times(const SparsePoly& o) const;

    // (deg_x, deg_y), or (-1, -1) when the bidegree is mixed / the poly is 0
    [[nodiscard]] std::pair<int, int> bidegree() const;

    // substitute complex values for all variables
    [[nodiscard]] Cx eval(const std::vector<Cx>& x, const std::vector<Cx>& y) const;

    // swap the x- and y-blocks: p(x, y) -> p(y, x)
    [[nodiscard]] SparsePoly swapped_xy() const;
};

// ── the sl2 ladder: X = sum x_j d/dy_j, Y = sum y_j d/dx_j, H = [X, Y] ───────
SparsePoly op_X(const SparsePoly& p);
SparsePoly op_Y(const SparsePoly& p);
SparsePoly op_H(const SparsePoly& p);

// prod_{j=1..kmax} (YX - j(j+1)) applied to a weight-zero polynomial; the
// result is annihilated by both X and Y (or is zero).  Rejects H(p) != 0.
SparsePoly extract_invariant(const SparsePoly& p, int kmax);

// set x_j = y_j = 0 for j >= keep; commutes with X, Y and H
SparsePoly restrict_prefix(const SparsePoly& p, int keep);

// ── the five-qubit degree-6 invariant ─────────────────────────────────────────
//
// Coordinates z_{r,s} live on the Bell-product basis u_r (x) u_s of 4 qubits.
// Variable/basis index order puts the diagonal pairs first (index j <-> u_j
// (x) u_j for j = 0..3) so that restriction to the first four variables hits
// the diagonal of Z; the off-diagonal pairs follow in row-major order.
int bell_pair_index(int r, int s);
std::pair<int, int> bell_index_pair(int j);

// the Bell (magic) basis of 2 qubits, as vectors over the computational basis
std::vector<std::vector<Cx>> bell_basis_2q();

// w = sum_j (df/dx_j)(dg/dy_j) with f = det Z (x-block) and
// g = tr((Z Z^T)^2) (y-block); bidegree (3,3) in 16 + 16 variables.
SparsePoly build_w();

// the cached symbolic invariant: prod_{j=1..3}(YX - j(j+1)) w
const SparsePoly& degree6_polynomial();

// evaluate the degree-6 invariant on a 5-qubit state: x-coordinates from the
// |0> (x) (4-qubit) block, y-coordinates from the |1> block, both expressed
// in the Bell-product basis
Cx degree6_five_qubit(const QuditState& psi);

} // namespace slipforge
