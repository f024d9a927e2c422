#include "slipforge/qstate.hpp"

#include <cmath>
#include <stdexcept>

#include "slipforge/rng.hpp"

namespace slipforge {

QuditState::QuditState(std::vector<int> d, std::vector<Cx> a)
    : dims(std::move(d)), amps(std::move(a)) {
    if (dims.empty()) throw std::invalid_argument("QuditState: need at least one site");
    size_t expect = 1;
    for (int m : dims) {
        if (m < 2) throw std::invalid_argument("QuditState: site dimensions must be >= 2");
        expect *= static_cast<size_t>(m);
    }
    if (amps.size() != expect)
        throw std::invalid_argument("QuditState: amplitude count does not match dims");
}

size_t QuditState::total_dim() const {
    size_t d = 1;
    for (int m : dims) d *= static_cast<size_t>(m);
    return d;
}

double QuditState::norm() const {
    double s = 0.0;
    for (const Cx& a : amps) s += std::norm(a);
    return std::sqrt(s);
}

QuditState QuditState::normalized() const {
    double n = norm();
    if (n == 0.0) throw std::invalid_argument("QuditState: cannot normalize the zero state");
    return scaled(Cx{1.0 / n, 0.0});
}

QuditState QuditState::scaled(Cx factor) const {
    QuditState r = *this;
    for (Cx& a : r.amps) a *= factor;
    return r;
}

size_t QuditState::flat_index(const std::vector<int>& labels) const {
    if (labels.size() != dims.size())
        throw std::invalid_argument("flat_index: label count mismatch");
    size_t idx = 0;
    for (size_t s = 0; s < dims.size(); ++s) {
        if (labels[s] < 0 || labels[s] >= dims[s])
            throw std::invalid_argument("flat_index: label out of range");
        idx = idx * static_cast<size_t>(dims[s]) + static_cast<size_t>(labels[s]);
    }
    return idx;
}

bool LocalOperator::is_special_linear(double tol) const {
    for (const CMatrix& b : blocks)
        if (std::abs(determinant(b) - Cx{1.0, 0.0}) > tol) return false;
    return true;
}

QuditState apply_single_site(const CMatrix& block, int site, const QuditState& psi) {
    if (site < 0 || site >= psi.num_sites())
        throw std::invalid_argument("apply_single_site: site out of range");
    size_t m = static_cast<size_t>(psi.dims[static_cast<size_t>(site)]);
    if (block.rows != m || block.cols != m)
        throw std::invalid_argument("apply_single_site: block size does not match site dimension");

    size_t inner = 1;   // stride of this site's digit
    for (size_t t = static_cast<size_t>(site) + 1; t < psi.dims.size(); ++t)
        inner *= static_cast<size_t>(psi.dims[t]);
    size_t outer = psi.total_dim() / (inner * m);

    QuditState out = psi;
    std::vector<Cx> column(m);
    for (size_t o = 0; o < outer; ++o) {
        for (size_t i = 0; i < inner; ++i) {
            size_t base = o * m * inner + i;
            for (size_t a = 0; a < m; ++a) column[a] = psi.amps[base + a * inner];
            for (size_t a = 0; a < m; ++a) {
                Cx acc{0.0, 0.0};
                for (size_t b = 0; b < m; ++b) acc += block.at(a, b) * column[b];
                out.amps[base + a * inner] = acc;
            }
        }
    }
    return out;
}

QuditState apply_local(const LocalOperator& g, const QuditState& psi) {
    if (g.blocks.size() != psi.dims.size())
        throw std::invalid_argument("apply_local: block count does not match site count");
    QuditState cur = psi;
    for (int s = 0; s < psi.num_sites(); ++s)
        cur = apply_single_site(g.blocks[static_cast<size_t>(s)], s, cur);
    return cur;
}

CMatrix random_sl(int m, uint64_t seed) {
    if (m < 2) throw std::invalid_argument("random_sl: m must be >= 2");
    Rng rng(seed);
    for (;;) {
        CMatrix a(static_cast<size_t>(m), static_cast<size_t>(m));
        for (Cx& v : a.data) v = rng.complex_gaussian();
        Cx det = determinant(a);
        if (std::abs(det) < 0.5) continue;   // redraw ill-conditioned samples
        Cx root = std::pow(det, 1.0 / static_cast<double>(m));   // principal branch
        for (Cx& v : a.data) v /= root;
        if (std::abs(determinant(a) - Cx{1.0, 0.0}) <= 1e-10) return a;
    }
}

LocalOperator random_local_sl(const std::vector<int>& dims, uint64_t seed) {
    LocalOperator g;
    g.blocks.reserve(dims.size());
    for (size_t s = 0; s < dims.size(); ++s)
        g.blocks.push_back(random_sl(dims[s], Rng::derive(seed, s)));
    return g;
}

Cx bilinear_form(const QuditState& psi, const QuditState& phi) {
    if (psi.dims != phi.dims)
        throw std::invalid_argument("bilinear_form: states must share dimensions");
    for (int m : psi.dims)
        if (m != 2) throw std::invalid_argument("bilinear_form: defined for qubits only");
    size_t dim = psi.total_dim();
    size_t full = dim - 1;
    // (J x...x J)[a][b] is nonzero only for b = bitwise complement of a,
    // with value prod_s J_{a_s, 1-a_s} = (-1)^{popcount(a)}.
    Cx total{0.0, 0.0};
    for (size_t a = 0; a < dim; ++a) {
        Cx term = psi.amps[a] * phi.amps[full - a];
        int sign = __builtin_popcountll(a) % 2 == 0 ? 1 : -1;
        total += static_cast<double>(sign) * term;
    }
    return total;
}

QuditState zeros_state(const std::vector<int>& dims) {
    size_t d = 1;
    for (int m : dims) d *= static_cast<size_t>(m);
    std::vector<Cx> amps(d, Cx{0.0, 0.0});
    amps[0] = Cx{1.0, 0.0};
    return {dims, std::move(amps)};
}

QuditState ghz_state(int n) {
    if (n < 2) throw std::invalid_argument("ghz_state: n must be >= 2");
    std::vector<int> dims(static_cast<size_t>(n), 2);
    std::vector<Cx> amps(size_t{1} << n, Cx{0.0, 0.0});
    const double r = 1.0 / std::sqrt(2.0);
    amps.front() = Cx{r, 0.0};
    amps.back() = Cx{r, 0.0};
    return {std::move(dims), std::move(amps)};
}

QuditState w_state(int n) {
    if (n < 2) throw std::invalid_argument("w_state: n must be >= 2");
    std::vector<int> dims(static_cast<size_t>(n), 2);
    std::vector<Cx> amps(size_t{1} << n, Cx{0.0, 0.0});
    const double r = 1.0 / std::sqrt(static_cast<double>(n));
    for (int s = 0; s < n; ++s) amps[size_t{1} << (n - 1 - s)] = Cx{r, 0.0};
    return {std::move(dims), std::move(amps)};
}

QuditState bell_state() { return ghz_state(2); }

QuditState random_state(const std::vector<int>& dims, uint64_t seed) {
    size_t d = 1;
    for (int m : dims) {
        if (m < 2) throw std::invalid_argument("random_state: dims must be >= 2");
        d *= static_cast<size_t>(m);
    }
    Rng rng(seed);
    std::vector<Cx> amps(d);
    for (Cx& a : amps) a = rng.complex_gaussian();
    return {dims, std::move(amps)};
}

} // namespace slipforge
