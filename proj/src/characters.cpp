#include "slipforge/characters.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace slipforge {

namespace {

BigInt fp_recurse(int p, int q, const std::vector<int>& cycles, size_t pos) {
    if (pos == cycles.size()) return BigInt(0);
    int r = p, s = q;
    if (p < q) { r = q; s = p; }
    if (s == 0) return BigInt(1);
    // only 1-cycles left: every assignment works
    if (cycles[pos] == 1)
        return BigInt::binomial(static_cast<uint64_t>(r + s), static_cast<uint64_t>(r));
    int a = cycles[pos];
    if (a > r) return BigInt(0);
    if (a <= s)
        return fp_recurse(r - a, s, cycles, pos + 1) + fp_recurse(r, s - a, cycles, pos + 1);
    return fp_recurse(r - a, s, cycles, pos + 1);
}

} // namespace

BigInt fixed_points(int p, int q, const Partition& mu) {
    if (p < 0 || q < 0) throw std::invalid_argument("fixed_points: p, q must be >= 0");
    if (mu.sum() != p + q)
        throw std::invalid_argument("fixed_points: mu must be a partition of p + q");
    return fp_recurse(p, q, mu.parts, 0);
}

BigInt char_two_row(int k, const Partition& mu) {
    if (k <= 0 || k % 2 != 0) throw std::invalid_argument("char_two_row: k must be even and positive");
    if (mu.sum() != k) throw std::invalid_argument("char_two_row: mu must be a partition of k");
    return fixed_points(k / 2, k / 2, mu) - fixed_points(k / 2 + 1, k / 2 - 1, mu);
}

namespace {

// Murnaghan-Nakayama over beta-numbers.  The shape with row lengths
// lambda_1 >= ... >= lambda_m is encoded as the strictly decreasing set
// {lambda_i + m - i}.  Removing a border strip of length t moves one beta
// value b to b - t (which must be vacant); the strip height contributes
// (-1)^{#betas strictly between b-t and b}.
struct MnSolver {
    const std::vector<int>& cycles;            // mu parts, any fixed order
    std::map<std::pair<std::vector<int>, size_t>, BigInt> memo;

    explicit MnSolver(const std::vector<int>& c) : cycles(c) {}

    BigInt chi(std::vector<int> betas, size_t pos) {
        if (pos == cycles.size()) return BigInt(1);   // shape fully consumed
        auto key = std::make_pair(betas, pos);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        int t = cycles[pos];
        BigInt total(0);
        for (size_t i = 0; i < betas.size(); ++i) {
            int target = betas[i] - t;
            if (target < 0) continue;
            if (std::binary_search(betas.begin(), betas.end(), target)) continue;
            std::vector<int> next = betas;
            next[i] = target;
            std::sort(next.begin(), next.end());
            // count betas passed over when b slides down to target
            int crossings = 0;
            for (int b : betas)
                if (b > target && b < betas[i]) ++crossings;
            BigInt term = chi(std::move(next), pos + 1);
            if (crossings % 2 != 0) term = term.negated();
            total += term;
        }
        memo.emplace(std::move(key), total);
        return total;
    }
};

} // namespace

BigInt char_rectangular(int m, int r, const Partition& mu) {
    if (m < 1 || r < 1) throw std::invalid_argument("char_rectangular: m, r must be >= 1");
    if (mu.sum() != m * r)
        throw std::invalid_argument("char_rectangular: mu must be a partition of m*r");
    std::vector<int> betas(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) betas[static_cast<size_t>(i)] = r + i;   // sorted ascending
    MnSolver solver(mu.parts);
    return solver.chi(std::move(betas), 0);
}

BigInt rect_dim(int m, int r) {
    if (m < 1 || r < 1) throw std::invalid_argument("rect_dim: m, r must be >= 1");
    BigInt num = BigInt::factorial(static_cast<uint64_t>(m) * static_cast<uint64_t>(r));
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) num *= BigInt(j - i);
    BigInt den(1);
    for (int j = 1; j <= m; ++j) den *= BigInt::factorial(static_cast<uint64_t>(r + m - j));
    BigInt q, rem;
    BigInt::divmod(num, den, q, rem);
    if (!rem.is_zero()) throw std::logic_error("rect_dim: non-integral result");
    return q;
}

BigInt generalized_catalan(int m, int r) {
    if (m < 1 || r < 1) throw std::invalid_argument("generalized_catalan: m, r must be >= 1");
    BigInt num = BigInt::factorial(static_cast<uint64_t>(m) * static_cast<uint64_t>(r));
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) num *= BigInt(j - i);
    BigInt den(1);
    for (int j = 0; j < m; ++j) den *= BigInt::factorial(static_cast<uint64_t>(r + j));
    BigInt q, rem;
    BigInt::divmod(num, den, q, rem);
    if (!rem.is_zero()) throw std::logic_error("generalized_catalan: non-integral result");
    return q;
}

std::vector<CharTableEntry> character_table_row(int m, int r) {
    std::vector<CharTableEntry> rows;
    for (const Partition& mu : partitions_of(m * r)) {
        BigInt chi = (m == 2) ? char_two_row(2 * r, mu) : char_rectangular(m, r, mu);
        rows.push_back({mu, std::move(chi), class_size(mu)});
    }
    return rows;
}

} // namespace slipforge
