#pragma once

#include <map>
#include <vector>

#include "slipforge/bigint.hpp"

namespace slipforge {

// ── Partition: weakly decreasing positive parts summing to k ─────────────────
//
// Doubles as the label of a conjugacy class of S_k (the cycle type).  The
// empty partition is the unique partition of 0.
struct Partition {
    std::vector<int> parts;   // weakly decreasing, all >= 1

    Partition() = default;
    explicit Partition(std::vector<int> p);

    [[nodiscard]] int sum() const;
    [[nodiscard]] bool empty() const { return parts.empty(); }
    [[nodiscard]] size_t rows() const { return parts.size(); }
    [[nodiscard]] bool is_rectangular() const;   // all parts equal (or empty)

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }

    [[nodiscard]] std::string to_string() const;   // "(3,1)"
};

// Cycle type view of a partition: multiplicity m_j of each cycle length j.
struct CycleType {
    Partition partition;
    std::map<int, int> multiplicities;   // j -> m_j, only m_j > 0 stored

    explicit CycleType(Partition p);
    [[nodiscard]] int k() const { return partition.sum(); }
};

// All partitions of k in descending lexicographic order, e.g. for k = 4:
// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).  k = 0 yields the empty partition.
std::vector<Partition> partitions_of(int k);

// Number of partitions of k (same count as partitions_of(k).size(), computed
// without enumerating).
BigInt partition_count(int k);

// cstd(mu) = prod_j (m_j! * j^m_j): the size of the centralizer of a
// permutation of cycle type mu.  k!/cstd(mu) is the conjugacy class size.
BigInt cstd(const Partition& mu);

// |c_mu| = k! / cstd(mu); the division is always exact.
BigInt class_size(const Partition& mu);

} // namespace slipforge
