#include "slipforge/cut_slips.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "slipforge/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace slipforge {

BipartiteCut::BipartiteCut(std::vector<int> sites, int n) : side_a(std::move(sites)) {
    std::sort(side_a.begin(), side_a.end());
    if (side_a.empty()) throw std::invalid_argument("BipartiteCut: side A must be nonempty");
    if (std::adjacent_find(side_a.begin(), side_a.end()) != side_a.end())
        throw std::invalid_argument("BipartiteCut: duplicate site");
    if (side_a.front() < 1 || side_a.back() > n)
        throw std::invalid_argument("BipartiteCut: site index out of range");
    if (static_cast<int>(side_a.size()) >= n)
        throw std::invalid_argument("BipartiteCut: side A must be a proper subset");
}

std::vector<int> BipartiteCut::complement(int n) const {
    std::vector<int> rest;
    size_t pos = 0;
    for (int s = 1; s <= n; ++s) {
        if (pos < side_a.size() && side_a[pos] == s) {
            ++pos;
        } else {
            rest.push_back(s);
        }
    }
    return rest;
}

std::string BipartiteCut::to_string() const {
    std::string s = "{";
    for (size_t i = 0; i < side_a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(side_a[i]);
    }
    return s + "}";
}

std::vector<BipartiteCut> canonical_cuts(int n) {
    if (n < 2) throw std::invalid_argument("canonical_cuts: n must be >= 2");
    std::vector<BipartiteCut> cuts;
    for (unsigned mask = 1; mask < (1u << n) - 1; ++mask) {
        int size = __builtin_popcount(mask);
        if (2 * size > n) continue;
        // at even split keep the representative containing site 1
        if (2 * size == n && !(mask & 1u)) continue;
        std::vector<int> sites;
        for (int s = 0; s < n; ++s)
            if (mask & (1u << s)) sites.push_back(s + 1);
        cuts.emplace_back(std::move(sites), n);
    }
    std::sort(cuts.begin(), cuts.end(), [](const BipartiteCut& a, const BipartiteCut& b) {
        if (a.side_a.size() != b.side_a.size()) return a.side_a.size() < b.side_a.size();
        return a.side_a < b.side_a;
    });
    return cuts;
}

CMatrix matricize(const QuditState& psi, const BipartiteCut& cut) {
    for (int m : psi.dims)
        if (m != 2) throw std::invalid_argument("matricize: qubit systems only");
    int n = psi.num_sites();
    if (cut.side_a.back() > n) throw std::invalid_argument("matricize: cut exceeds system size");
    std::vector<int> side_b = cut.complement(n);
    int q = cut.q();

    CMatrix a(size_t{1} << q, size_t{1} << (n - q));
    std::vector<int> labels(static_cast<size_t>(n), 0);
    for (size_t j = 0; j < a.rows; ++j) {
        for (int bit = 0; bit < q; ++bit)
            labels[static_cast<size_t>(cut.side_a[static_cast<size_t>(bit)] - 1)] =
                static_cast<int>((j >> (q - 1 - bit)) & 1u);
        for (size_t k = 0; k < a.cols; ++k) {
            for (int bit = 0; bit < n - q; ++bit)
                labels[static_cast<size_t>(side_b[static_cast<size_t>(bit)] - 1)] =
                    static_cast<int>((k >> (n - q - 1 - bit)) & 1u);
            a.at(j, k) = psi.amps[psi.flat_index(labels)];
        }
    }
    return a;
}

namespace {

// J^{(x)q} as a dense sign matrix: entry (a, ~a) = (-1)^{popcount(a)}.
CMatrix j_power(int q) {
    size_t dim = size_t{1} << q;
    CMatrix u(dim, dim);
    for (size_t row = 0; row < dim; ++row) {
        double sign = __builtin_popcountll(row) % 2 == 0 ? 1.0 : -1.0;
        u.at(row, dim - 1 - row) = Cx{sign, 0.0};
    }
    return u;
}

} // namespace

std::pair<CMatrix, CMatrix> gram_matrices(const BipartiteCut& cut, int n) {
    int q = cut.q();
    if (q >= n) throw std::invalid_argument("gram_matrices: cut exceeds system size");
    return {j_power(q), j_power(n - q)};
}

Cx f_ell(const QuditState& psi, const BipartiteCut& cut, int ell) {
    if (ell < 1) throw std::invalid_argument("f_ell: ell must be >= 1");
    int n = psi.num_sites();
    CMatrix a = matricize(psi, cut);
    auto [u, v] = gram_matrices(cut, n);
    CMatrix core = matmul(matmul(u, a), matmul(v, a.transpose()));
    CMatrix acc = core;
    for (int i = 1; i < ell; ++i) acc = matmul(acc, core);
    return acc.trace();
}

int degree4_span_rank(int n, int samples, uint64_t seed) {
    if (n % 2 == 0 || n < 3 || n > 7)
        throw std::invalid_argument("degree4_span_rank: n must be odd, 3 <= n <= 7");
    if (samples < 4 * (1 << (n - 1)))
        throw std::invalid_argument("degree4_span_rank: insufficient samples");
    std::vector<BipartiteCut> cuts = canonical_cuts(n);
    std::vector<int> dims(static_cast<size_t>(n), 2);

    CMatrix evals(static_cast<size_t>(samples), cuts.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int row = 0; row < samples; ++row) {
        QuditState psi = random_state(dims, Rng::derive(seed, static_cast<uint64_t>(row)));
        for (size_t c = 0; c < cuts.size(); ++c)
            evals.at(static_cast<size_t>(row), c) = f_ell(psi, cuts[c], 2);
    }
    return numerical_rank(evals, 1e-8);
}

} // namespace slipforge
