#include "slipforge/dimension.hpp"

#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace slipforge {

BigInt ExpPolyDim::eval(int n) const {
    Rational total(0);
    for (const auto& [base, coeff] : terms)
        total += coeff * Rational(base.pow(static_cast<uint64_t>(n)));
    if (!total.is_integer())
        throw std::logic_error("ExpPolyDim::eval: non-integral dimension");
    return total.num();
}

namespace {

BigInt rect_char(int m, int r, const Partition& mu) {
    return (m == 2) ? char_two_row(2 * r, mu) : char_rectangular(m, r, mu);
}

BigInt divide_by_factorial(BigInt sum, int k) {
    BigInt q, rem;
    BigInt::divmod(sum, BigInt::factorial(static_cast<uint64_t>(k)), q, rem);
    if (!rem.is_zero()) throw std::logic_error("slip_dim: character sum not divisible by k!");
    return q;
}

} // namespace

BigInt slip_dim_serial(int k, int n, int m) {
    if (k < 0 || n < 1 || m < 2) throw std::invalid_argument("slip_dim: need k >= 0, n >= 1, m >= 2");
    if (k == 0) return BigInt(1);   // constants
    if (k % m != 0) return BigInt(0);
    int r = k / m;
    BigInt sum(0);
    for (const Partition& mu : partitions_of(k))
        sum += rect_char(m, r, mu).pow(static_cast<uint64_t>(n)) * class_size(mu);
    return divide_by_factorial(std::move(sum), k);
}

BigInt slip_dim(int k, int n, int m) {
    if (k < 0 || n < 1 || m < 2) throw std::invalid_argument("slip_dim: need k >= 0, n >= 1, m >= 2");
    if (k == 0) return BigInt(1);
    if (k % m != 0) return BigInt(0);
    int r = k / m;
    std::vector<Partition> mus = partitions_of(k);
    const int count = static_cast<int>(mus.size());
    std::vector<BigInt> contributions(mus.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < count; ++i) {
        const Partition& mu = mus[static_cast<size_t>(i)];
        contributions[static_cast<size_t>(i)] =
            rect_char(m, r, mu).pow(static_cast<uint64_t>(n)) * class_size(mu);
    }
    BigInt sum(0);   // fixed summation order; integers, so any order agrees anyway
    for (const BigInt& c : contributions) sum += c;
    return divide_by_factorial(std::move(sum), k);
}

ExpPolyDim slip_dim_symbolic(int k, int m) {
    if (k < 0 || m < 2) throw std::invalid_argument("slip_dim_symbolic: need k >= 0, m >= 2");
    ExpPolyDim poly;
    poly.k = k;
    if (k == 0 || k % m != 0) {
        if (k == 0) poly.terms.emplace(BigInt(1), Rational(1));
        return poly;
    }
    int r = k / m;
    for (const Partition& mu : partitions_of(k)) {
        BigInt chi = rect_char(m, r, mu);
        if (chi.is_zero()) continue;
        Rational weight(BigInt(1), cstd(mu));
        auto [it, inserted] = poly.terms.emplace(std::move(chi), weight);
        if (!inserted) it->second += weight;
    }
    return poly;
}

bool degree_gate(int k, const std::vector<int>& dims) {
    if (dims.empty()) throw std::invalid_argument("degree_gate: dims must be nonempty");
    long long l = 1;
    for (int d : dims) {
        if (d < 2) throw std::invalid_argument("degree_gate: dims must be >= 2");
        l = std::lcm(l, static_cast<long long>(d));
    }
    return k % l == 0;
}

std::vector<Rational> asymptotic_ratio(int k, int m, int n_max) {
    if (n_max < 1) throw std::invalid_argument("asymptotic_ratio: n_max must be >= 1");
    if (k <= 0 || k % m != 0) throw std::invalid_argument("asymptotic_ratio: m must divide k");
    BigInt base = rect_dim(m, k / m);
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n)
        out.emplace_back(slip_dim(k, n, m), base.pow(static_cast<uint64_t>(n)));
    return out;
}

} // namespace slipforge
