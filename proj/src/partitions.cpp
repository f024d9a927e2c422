#include "slipforge/partitions.hpp"

#include <stdexcept>

namespace slipforge {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("Partition: parts must be >= 1");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::sum() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

bool Partition::is_rectangular() const {
    for (int p : parts)
        if (p != parts.front()) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

CycleType::CycleType(Partition p) : partition(std::move(p)) {
    for (int part : partition.parts) multiplicities[part]++;
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        Partition p;
        p.parts = prefix;
        out.push_back(std::move(p));
        return;
    }
    for (int first = std::min(remaining, max_part); first >= 1; --first) {
        prefix.push_back(first);
        emit_partitions(remaining - first, first, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int k) {
    if (k < 0) throw std::invalid_argument("partitions_of: k must be >= 0");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(k, k == 0 ? 1 : k, prefix, out);
    return out;
}

BigInt partition_count(int k) {
    if (k < 0) throw std::invalid_argument("partition_count: k must be >= 0");
    // p(n) via the bounded-part recurrence q(n, m) = q(n-m, m) + q(n, m-1)
    std::vector<std::vector<BigInt>> q(static_cast<size_t>(k) + 1,
                                       std::vector<BigInt>(static_cast<size_t>(k) + 1));
    for (int m = 0; m <= k; ++m) q[0][m] = BigInt(1);
    for (int n = 1; n <= k; ++n) {
        for (int m = 1; m <= k; ++m) {
            q[n][m] = q[n][m - 1];
            if (n >= m) q[n][m] += q[n - m][m];
        }
    }
    return q[k][k];
}

BigInt cstd(const Partition& mu) {
    CycleType ct(mu);
    BigInt r(1);
    for (const auto& [j, m] : ct.multiplicities) {
        r *= BigInt::factorial(static_cast<uint64_t>(m));
        r *= BigInt(j).pow(static_cast<uint64_t>(m));
    }
    return r;
}

BigInt class_size(const Partition& mu) {
    BigInt total = BigInt::factorial(static_cast<uint64_t>(mu.sum()));
    BigInt c = cstd(mu);
    BigInt q, r;
    BigInt::divmod(total, c, q, r);
    if (!r.is_zero()) throw std::logic_error("class_size: cstd does not divide k!");
    return q;
}

} // namespace slipforge
