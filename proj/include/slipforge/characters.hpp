#pragma once

#include <vector>

#include "slipforge/bigint.hpp"
#include "slipforge/partitions.hpp"

namespace slipforge {

// Number of fixed points of a permutation of cycle type mu acting on the
// p-element subsets of {1..p+q} (equivalently on S_{p+q} / (S_p x S_q)).
//
// A fixed subset must be a union of whole cycles, so the recursion assigns
// the largest cycle to one side or the other.  The branch order follows the
// classic formulation exactly: empty cycle list first, then the swap making
// p >= q, the s == 0 shortcut, the all-fixed-points binomial shortcut, and
// finally the one- or two-branch descent on the leading cycle.
BigInt fixed_points(int p, int q, const Partition& mu);

// chi_{(k/2, k/2)}(mu) for even k, via the two-row fixed-point difference
// chi = FP(k/2, k/2, mu) - FP(k/2+1, k/2-1, mu).
BigInt char_two_row(int k, const Partition& mu);

// chi_lambda(mu) for the rectangular partition lambda = (r,...,r) with m rows,
// mu a cycle type of k = m*r.  Murnaghan-Nakayama with memoization on the
// beta-number encoding of the remaining shape; exact integers throughout.
// The memo lives on the call stack, so concurrent calls are independent.
BigInt char_rectangular(int m, int r, const Partition& mu);

// dim V^{(r,...,r)} (m rows) = k! * prod_{i<j}(j-i) / prod_{j=1..m} (r+m-j)!.
// For m = 2 this is the r-th Catalan number.
BigInt rect_dim(int m, int r);

// The multinomial Catalan generalization
//   C(m, r) = (mr)! * prod_{1<=i<j<=m}(j-i) / prod_{j=0..m-1}(r+j)!
// It coincides with rect_dim(m, r); both are kept so the two published
// factorial arrangements can be cross-checked against each other.
BigInt generalized_catalan(int m, int r);

// One row of the character table for rectangular lambda: chi_lambda over every
// conjugacy class of S_k, paired with the class size.  Order follows
// partitions_of(k).
struct CharTableEntry {
    Partition cycle_type;
    BigInt value;
    BigInt class_size;
};
std::vector<CharTableEntry> character_table_row(int m, int r);

} // namespace slipforge
