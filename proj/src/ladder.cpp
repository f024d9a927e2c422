#include "slipforge/ladder.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace slipforge {

SparsePoly SparsePoly::monomial(int n_vars, const std::vector<std::pair<int, int>>& x_exps,
                                const std::vector<std::pair<int, int>>& y_exps, Rational coeff) {
    SparsePoly p(n_vars);
    if (coeff.is_zero()) return p;
    std::vector<uint8_t> e(static_cast<size_t>(2 * n_vars), 0);
    for (auto [j, d] : x_exps) e[static_cast<size_t>(j)] += static_cast<uint8_t>(d);
    for (auto [j, d] : y_exps) e[static_cast<size_t>(n_vars + j)] += static_cast<uint8_t>(d);
    p.terms.emplace(std::move(e), std::move(coeff));
    return p;
}

void SparsePoly::add_term(const std::vector<uint8_t>& exps, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms.erase(it);
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    if (nvars != o.nvars) throw std::invalid_argument("SparsePoly: variable count mismatch");
    for (const auto& [e, c] : o.terms) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    if (nvars != o.nvars) throw std::invalid_argument("SparsePoly: variable count mismatch");
    for (const auto& [e, c] : o.terms) add_term(e, -c);
    return *this;
}

SparsePoly SparsePoly::scaled(const Rational& c) const {
    SparsePoly p(nvars);
    if (c.is_zero()) return p;
    for (const auto& [e, coeff] : terms) p.terms.emplace(e, coeff * c);
    return p;
}

SparsePoly SparsePoly::times(const SparsePoly& o) const {
    if (nvars != o.nvars) throw std::invalid_argument("SparsePoly: variable count mismatch");
    SparsePoly p(nvars);
    for (const auto& [ea, ca] : terms) {
        for (const auto& [eb, cb] : o.terms) {
            std::vector<uint8_t> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = static_cast<uint8_t>(ea[i] + eb[i]);
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

std::pair<int, int> SparsePoly::bidegree() const {
    int dx = -1, dy = -1;
    for (const auto& [e, c] : terms) {
        int tx = 0, ty = 0;
        for (int j = 0; j < nvars; ++j) {
            tx += e[static_cast<size_t>(j)];
            ty += e[static_cast<size_t>(nvars + j)];
        }
        if (dx == -1) {
            dx = tx;
            dy = ty;
        } else if (dx != tx || dy != ty) {
            return {-1, -1};
        }
    }
    return {dx, dy};
}

Cx SparsePoly::eval(const std::vector<Cx>& x, const std::vector<Cx>& y) const {
    if (static_cast<int>(x.size()) != nvars || static_cast<int>(y.size()) != nvars)
        throw std::invalid_argument("SparsePoly::eval: wrong number of values");
    Cx total{0.0, 0.0};
    for (const auto& [e, c] : terms) {
        Cx v{c.to_double(), 0.0};
        for (int j = 0; j < nvars; ++j) {
            for (int d = 0; d < e[static_cast<size_t>(j)]; ++d) v *= x[static_cast<size_t>(j)];
            for (int d = 0; d < e[static_cast<size_t>(nvars + j)]; ++d) v *= y[static_cast<size_t>(j)];
        }
        total += v;
    }
    return total;
}

SparsePoly SparsePoly::swapped_xy() const {
    SparsePoly p(nvars);
    for (const auto& [e, c] : terms) {
        std::vector<uint8_t> f(e.size());
        for (int j = 0; j < nvars; ++j) {
            f[static_cast<size_t>(j)] = e[static_cast<size_t>(nvars + j)];
            f[static_cast<size_t>(nvars + j)] = e[static_cast<size_t>(j)];
        }
        p.add_term(f, c);
    }
    return p;
}

// ── ladder operators ──────────────────────────────────────────────────────────

SparsePoly op_X(const SparsePoly& p) {
    SparsePoly out(p.nvars);
    for (const auto& [e, c] : p.terms) {
        for (int j = 0; j < p.nvars; ++j) {
            uint8_t ey = e[static_cast<size_t>(p.nvars + j)];
            if (ey == 0) continue;
            std::vector<uint8_t> f = e;
            f[static_cast<size_t>(p.nvars + j)] = static_cast<uint8_t>(ey - 1);
            f[static_cast<size_t>(j)]++;
            out.add_term(f, c * Rational(ey));
        }
    }
    return out;
}

SparsePoly op_Y(const SparsePoly& p) {
    SparsePoly out(p.nvars);
    for (const auto& [e, c] : p.terms) {
        for (int j = 0; j < p.nvars; ++j) {
            uint8_t ex = e[static_cast<size_t>(j)];
            if (ex == 0) continue;
            std::vector<uint8_t> f = e;
            f[static_cast<size_t>(j)] = static_cast<uint8_t>(ex - 1);
            f[static_cast<size_t>(p.nvars + j)]++;
            out.add_term(f, c * Rational(ex));
        }
    }
    return out;
}

SparsePoly op_H(const SparsePoly& p) {
    SparsePoly out(p.nvars);
    for (const auto& [e, c] : p.terms) {
        int weight = 0;
        for (int j = 0; j < p.nvars; ++j)
            weight += e[static_cast<size_t>(j)] - e[static_cast<size_t>(p.nvars + j)];
        if (weight != 0) out.add_term(e, c * Rational(weight));
    }
    return out;
}

SparsePoly extract_invariant(const SparsePoly& p, int kmax) {
    if (kmax < 0) throw std::invalid_argument("extract_invariant: kmax must be >= 0");
    if (!op_H(p).is_zero())
        throw std::invalid_argument("extract_invariant: input must have weight zero");
    SparsePoly r = p;
    for (int j = 1; j <= kmax; ++j) {
        SparsePoly yx = op_Y(op_X(r));
        yx -= r.scaled(Rational(static_cast<int64_t>(j) * (j + 1)));
        r = std::move(yx);
    }
    return r;
}

SparsePoly restrict_prefix(const SparsePoly& p, int keep) {
    if (keep < 0 || keep > p.nvars)
        throw std::invalid_argument("restrict_prefix: keep out of range");
    SparsePoly out(p.nvars);
    for (const auto& [e, c] : p.terms) {
        bool survives = true;
        for (int j = keep; j < p.nvars && survives; ++j)
            if (e[static_cast<size_t>(j)] != 0 || e[static_cast<size_t>(p.nvars + j)] != 0)
                survives = false;
        if (survives) out.terms.emplace(e, c);
    }
    return out;
}

// ── the degree-6 five-qubit invariant ─────────────────────────────────────────

namespace {

// basis/variable index table: diagonal pairs first, off-diagonal row-major
constexpr std::array<std::pair<int, int>, 16> kBellPairs = {{
    {0, 0}, {1, 1}, {2, 2}, {3, 3},
    {0, 1}, {0, 2}, {0, 3},
    {1, 0}, {1, 2}, {1, 3},
    {2, 0}, {2, 1}, {2, 3},
    {3, 0}, {3, 1}, {3, 2},
}};

int sign_of_permutation(const std::array<int, 4>& p) {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[static_cast<size_t>(i)] > p[static_cast<size_t>(j)]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

} // namespace

int bell_pair_index(int r, int s) {
    for (int j = 0; j < 16; ++j)
        if (kBellPairs[static_cast<size_t>(j)] == std::pair<int, int>{r, s}) return j;
    throw std::invalid_argument("bell_pair_index: indices must lie in 0..3");
}

std::pair<int, int> bell_index_pair(int j) {
    if (j < 0 || j >= 16) throw std::invalid_argument("bell_index_pair: index out of range");
    return kBellPairs[static_cast<size_t>(j)];
}

std::vector<std::vector<Cx>> bell_basis_2q() {
    const double r = 1.0 / std::sqrt(2.0);
    // components over the computational basis |00>, |01>, |10>, |11>
    return {
        {{r, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {r, 0.0}},     // u0 = (|00> + |11>)/sqrt(2)
        {{0.0, r}, {0.0, 0.0}, {0.0, 0.0}, {0.0, -r}},    // u1 = i(|00> - |11>)/sqrt(2)
        {{0.0, 0.0}, {0.0, r}, {0.0, r}, {0.0, 0.0}},     // u2 = i(|01> + |10>)/sqrt(2)
        {{0.0, 0.0}, {r, 0.0}, {-r, 0.0}, {0.0, 0.0}},    // u3 = (|01> - |10>)/sqrt(2)
    };
}

SparsePoly build_w() {
    const int nv = 16;

    // f(x) = det Z over the x-block
    SparsePoly f(nv);
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        std::vector<std::pair<int, int>> xs;
        xs.reserve(4);
        for (int row = 0; row < 4; ++row)
            xs.emplace_back(bell_pair_index(row, perm[static_cast<size_t>(row)]), 1);
        f += SparsePoly::monomial(nv, xs, {}, Rational(sign_of_permutation(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));

    // g(y) = tr((Z Z^T)^2) over the y-block
    SparsePoly g(nv);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    std::vector<std::pair<int, int>> ys = {
                        {bell_pair_index(a, b), 1},
                        {bell_pair_index(c, b), 1},
                        {bell_pair_index(c, d), 1},
                        {bell_pair_index(a, d), 1},
                    };
                    g += SparsePoly::monomial(nv, {}, ys, Rational(1));
                }

    // w = sum_j (df/dx_j)(dg/dy_j)
    auto derivative = [](const SparsePoly& p, int slot) {
        SparsePoly out(p.nvars);
        for (const auto& [e, c] : p.terms) {
            uint8_t d = e[static_cast<size_t>(slot)];
            if (d == 0) continue;
            std::vector<uint8_t> f2 = e;
            f2[static_cast<size_t>(slot)] = static_cast<uint8_t>(d - 1);
            out.add_term(f2, c * Rational(d));
        }
        return out;
    };

    SparsePoly w(nv);
    for (int j = 0; j < 16; ++j) {
        SparsePoly dfx = derivative(f, j);
        SparsePoly dgy = derivative(g, nv + j);
        w += dfx.times(dgy);
    }
    return w;
}

const SparsePoly& degree6_polynomial() {
    static SparsePoly cached;
    static std::once_flag flag;
    std::call_once(flag, [] { cached = extract_invariant(build_w(), 3); });
    return cached;
}

Cx degree6_five_qubit(const QuditState& psi) {
    if (psi.dims != std::vector<int>{2, 2, 2, 2, 2})
        throw std::invalid_argument("degree6_five_qubit: five qubits required");

    auto bells = bell_basis_2q();
    // Bell-product basis vector v_j over the 4-qubit computational basis
    std::vector<std::vector<Cx>> v(16, std::vector<Cx>(16));
    for (int j = 0; j < 16; ++j) {
        auto [r, s] = bell_index_pair(j);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                v[static_cast<size_t>(j)][static_cast<size_t>(4 * a + b)] =
                    bells[static_cast<size_t>(r)][static_cast<size_t>(a)] *
                    bells[static_cast<size_t>(s)][static_cast<size_t>(b)];
    }

    // coordinates of the two 16-dimensional qubit-1 blocks in that basis
    std::vector<Cx> x(16, Cx{0.0, 0.0}), y(16, Cx{0.0, 0.0});
    for (int j = 0; j < 16; ++j) {
        for (int a = 0; a < 16; ++a) {
            Cx basis_amp = std::conj(v[static_cast<size_t>(j)][static_cast<size_t>(a)]);
            x[static_cast<size_t>(j)] += basis_amp * psi.amps[static_cast<size_t>(a)];
            y[static_cast<size_t>(j)] += basis_amp * psi.amps[static_cast<size_t>(16 + a)];
        }
    }
    return degree6_polynomial().eval(x, y);
}

} // namespace slipforge
