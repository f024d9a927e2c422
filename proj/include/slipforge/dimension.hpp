#pragma once

#include <map>
#include <vector>

#include "slipforge/bigint.hpp"
#include "slipforge/characters.hpp"
#include "slipforge/partitions.hpp"

namespace slipforge {

// ── ExpPolyDim: dimension as an exponential polynomial in n ──────────────────
//
// d(k, n) = sum_b c_b * b^n with exact rational coefficients, one term per
// distinct nonzero character value b of the rectangular lambda.  Coefficient
// denominators divide k!.
struct ExpPolyDim {
    int k = 0;
    std::map<BigInt, Rational> terms;   // base -> coefficient, zero bases never stored

    [[nodiscard]] bool empty() const { return terms.empty(); }

    // Evaluate at n; the result is always a nonnegative integer.
    [[nodiscard]] BigInt eval(int n) const;
};

// Dimension of the space of degree-k SL-invariant polynomials on n qudits of
// equal local dimension m: (1/k!) * sum over cycle types mu of
// chi_lambda(mu)^n * |c_mu|, lambda = (k/m, ..., k/m) with m rows.
// Returns 0 when m does not divide k; k = 0 counts the constants (1).
BigInt slip_dim(int k, int n, int m);

// Serial reference for the partition sum; the OpenMP version must agree
// exactly (integer arithmetic, no rounding anywhere).
BigInt slip_dim_serial(int k, int n, int m);

// The same sum with n left symbolic.  Zero-character cycle types are
// dropped and coinciding bases merged.  m must divide k (else the zero
// polynomial is returned).
ExpPolyDim slip_dim_symbolic(int k, int m);

// true iff lcm(dims) divides k; the necessary condition for any degree-k
// invariant to exist.
bool degree_gate(int k, const std::vector<int>& dims);

// Exact rationals slip_dim(k, n, m) / rect_dim(m, k/m)^n for n = 1..n_max.
// Approaches 1/k! for k > 4 and 1/6 for (k, m) = (4, 2).
std::vector<Rational> asymptotic_ratio(int k, int m, int n_max);

} // namespace slipforge
