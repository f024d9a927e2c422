#include "slipforge/invariant_basis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "slipforge/characters.hpp"
#include "slipforge/dimension.hpp"
#include "slipforge/partitions.hpp"
#include "slipforge/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace slipforge {

namespace {

constexpr int kMaxFullSymmetricDegree = 8;        // full S_k sums: k! <= 40320
constexpr size_t kMaxFactorSpace = 1u << 16;      // per-site dense space m^k
constexpr size_t kMaxDenseContraction = 1u << 21; // product-form odometer (prod dims)^k
constexpr size_t kMaxCanonicalizationWork = 1u << 28;

size_t checked_pow(size_t base, int exp, size_t cap, const char* what) {
    size_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > cap / base) throw InfeasibleError(std::string(what) + ": size cap exceeded");
        r *= base;
    }
    return r;
}

} // namespace

std::vector<Matching> non_crossing_matchings(int k) {
    if (k < 0 || k % 2 != 0) throw std::invalid_argument("non_crossing_matchings: k must be even");
    // match the first point to an odd-offset partner; recurse inside and outside
    std::function<std::vector<Matching>(const std::vector<int>&)> gen =
        [&](const std::vector<int>& points) -> std::vector<Matching> {
        if (points.empty()) return {Matching{}};
        std::vector<Matching> out;
        for (size_t i = 1; i < points.size(); i += 2) {
            std::vector<int> inside(points.begin() + 1, points.begin() + static_cast<long>(i));
            std::vector<int> outside(points.begin() + static_cast<long>(i) + 1, points.end());
            for (const Matching& in : gen(inside)) {
                for (const Matching& outm : gen(outside)) {
                    Matching m;
                    m.emplace_back(points[0], points[i]);
                    m.insert(m.end(), in.begin(), in.end());
                    m.insert(m.end(), outm.begin(), outm.end());
                    std::sort(m.begin(), m.end());
                    out.push_back(std::move(m));
                }
            }
        }
        return out;
    };
    std::vector<int> pts(static_cast<size_t>(k));
    std::iota(pts.begin(), pts.end(), 0);
    auto result = gen(pts);
    std::sort(result.begin(), result.end());
    return result;
}

// ── transpose intertwiner ─────────────────────────────────────────────────────

std::vector<int64_t> copy_to_factor_labels(const std::vector<int>& dims, int k,
                                           const std::vector<int64_t>& copy_labels) {
    if (static_cast<int>(copy_labels.size()) != k)
        throw std::invalid_argument("copy_to_factor_labels: need one label per copy");
    size_t n = dims.size();
    // digit b_{s j} of copy label j at site s
    std::vector<std::vector<int>> digits(n, std::vector<int>(static_cast<size_t>(k)));
    for (int j = 0; j < k; ++j) {
        int64_t rest = copy_labels[static_cast<size_t>(j)];
        for (size_t s = n; s-- > 0;) {
            digits[s][static_cast<size_t>(j)] = static_cast<int>(rest % dims[s]);
            rest /= dims[s];
        }
        if (rest != 0) throw std::invalid_argument("copy_to_factor_labels: label out of range");
    }
    std::vector<int64_t> out(n);
    for (size_t s = 0; s < n; ++s) {
        int64_t idx = 0;
        for (int j = 0; j < k; ++j) idx = idx * dims[s] + digits[s][static_cast<size_t>(j)];
        out[s] = idx;
    }
    return out;
}

std::vector<int64_t> factor_to_copy_labels(const std::vector<int>& dims, int k,
                                           const std::vector<int64_t>& factor_labels) {
    if (factor_labels.size() != dims.size())
        throw std::invalid_argument("factor_to_copy_labels: need one label per site");
    size_t n = dims.size();
    std::vector<std::vector<int>> digits(n, std::vector<int>(static_cast<size_t>(k)));
    for (size_t s = 0; s < n; ++s) {
        int64_t rest = factor_labels[s];
        for (int j = k; j-- > 0;) {
            digits[s][static_cast<size_t>(j)] = static_cast<int>(rest % dims[s]);
            rest /= dims[s];
        }
        if (rest != 0) throw std::invalid_argument("factor_to_copy_labels: label out of range");
    }
    std::vector<int64_t> out(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
        int64_t idx = 0;
        for (size_t s = 0; s < n; ++s) idx = idx * dims[s] + digits[s][static_cast<size_t>(j)];
        out[static_cast<size_t>(j)] = idx;
    }
    return out;
}

// ── single-factor projector ───────────────────────────────────────────────────

namespace {

// lexicographically `rank`-th permutation of 0..k-1 (factorial number system)
std::vector<int> unrank_permutation(int k, uint64_t rank) {
    std::vector<int> pool(static_cast<size_t>(k));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<uint64_t> fact(static_cast<size_t>(k), 1);
    for (int i = 1; i < k; ++i)
        fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i - 1)] * static_cast<uint64_t>(i);
    std::vector<int> perm;
    perm.reserve(static_cast<size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
        uint64_t f = fact[static_cast<size_t>(i)];
        size_t pick = static_cast<size_t>(rank / f);
        rank %= f;
        perm.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<long>(pick));
    }
    return perm;
}

std::vector<int> cycle_type_sorted(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> cycles;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(perm[j]);
            ++len;
        }
        cycles.push_back(len);
    }
    std::sort(cycles.rbegin(), cycles.rend());
    return cycles;
}

// chi_lambda value per cycle type for the rectangular lambda of k = m*r
std::map<std::vector<int>, double> character_lookup(int m, int k) {
    std::map<std::vector<int>, double> chi;
    for (const Partition& mu : partitions_of(k)) {
        BigInt value = (m == 2) ? char_two_row(k, mu) : char_rectangular(m, k / m, mu);
        chi[mu.parts] = value.to_double();
    }
    return chi;
}

// accumulate sum over a contiguous lexicographic run of permutations:
// acc[I] += chi(sigma) * w[sigma(I)] with sigma(I) permuting index digits
void accumulate_projector_run(int m, int k, const std::vector<Cx>& w,
                              const std::map<std::vector<int>, double>& chi,
                              uint64_t first_rank, uint64_t count, std::vector<Cx>& acc) {
    const size_t dim = w.size();
    std::vector<int> perm = unrank_permutation(k, first_rank);
    std::vector<size_t> stride(static_cast<size_t>(k));
    {
        size_t s = 1;
        for (int j = k; j-- > 0;) {
            stride[static_cast<size_t>(j)] = s;
            s *= static_cast<size_t>(m);
        }
    }
    std::vector<int> digit(static_cast<size_t>(k));
    for (uint64_t c = 0; c < count; ++c) {
        double x = chi.at(cycle_type_sorted(perm));
        if (x != 0.0) {
            for (size_t idx = 0; idx < dim; ++idx) {
                size_t rest = idx;
                for (int j = 0; j < k; ++j) {
                    digit[static_cast<size_t>(j)] =
                        static_cast<int>(rest / stride[static_cast<size_t>(j)]);
                    rest %= stride[static_cast<size_t>(j)];
                }
                size_t src = 0;
                for (int j = 0; j < k; ++j)
                    src += static_cast<size_t>(digit[static_cast<size_t>(perm[static_cast<size_t>(j)])]) *
                           stride[static_cast<size_t>(j)];
                acc[idx] += x * w[src];
            }
        }
        std::next_permutation(perm.begin(), perm.end());
    }
}

void check_projector_args(int m, int k, const std::vector<Cx>& w) {
    if (m < 2 || k < 1) throw std::invalid_argument("project_single: need m >= 2, k >= 1");
    if (k > kMaxFullSymmetricDegree)
        throw InfeasibleError("project_single: full S_k sum capped at k <= 8");
    size_t dim = checked_pow(static_cast<size_t>(m), k, kMaxFactorSpace, "project_single");
    if (w.size() != dim) throw std::invalid_argument("project_single: vector has wrong length");
}

uint64_t factorial_u64(int k) {
    uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<uint64_t>(i);
    return f;
}

} // namespace

std::vector<Cx> project_single_serial(int m, int k, const std::vector<Cx>& w) {
    check_projector_args(m, k, w);
    std::vector<Cx> acc(w.size(), Cx{0.0, 0.0});
    if (k % m != 0) return acc;
    auto chi = character_lookup(m, k);
    uint64_t total = factorial_u64(k);
    accumulate_projector_run(m, k, w, chi, 0, total, acc);
    double scale = rect_dim(m, k / m).to_double() / static_cast<double>(total);
    for (Cx& v : acc) v *= scale;
    return acc;
}

std::vector<Cx> project_single(int m, int k, const std::vector<Cx>& w) {
    check_projector_args(m, k, w);
    std::vector<Cx> out(w.size(), Cx{0.0, 0.0});
    if (k % m != 0) return out;
    auto chi = character_lookup(m, k);
    uint64_t total = factorial_u64(k);

    // fixed chunk grid, so the reduction order (and thus the result bits)
    // does not depend on the thread count
    const int chunks = total > 64 ? 64 : 1;
    std::vector<std::vector<Cx>> partial(static_cast<size_t>(chunks),
                                         std::vector<Cx>(w.size(), Cx{0.0, 0.0}));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int c = 0; c < chunks; ++c) {
        uint64_t lo = total * static_cast<uint64_t>(c) / static_cast<uint64_t>(chunks);
        uint64_t hi = total * static_cast<uint64_t>(c + 1) / static_cast<uint64_t>(chunks);
        accumulate_projector_run(m, k, w, chi, lo, hi - lo, partial[static_cast<size_t>(c)]);
    }
    for (const auto& p : partial)
        for (size_t i = 0; i < out.size(); ++i) out[i] += p[i];
    double scale = rect_dim(m, k / m).to_double() / static_cast<double>(total);
    for (Cx& v : out) v *= scale;
    return out;
}

std::vector<std::vector<Cx>> invariant_basis_single(int m, int k) {
    if (k % m != 0) return {};
    size_t dim = checked_pow(static_cast<size_t>(m), k, kMaxFactorSpace, "invariant_basis_single");
    size_t target = static_cast<size_t>(rect_dim(m, k / m).to_int64());
    std::vector<std::vector<Cx>> basis;
    for (size_t seed_index = 0; seed_index < dim && basis.size() < target; ++seed_index) {
        // invariants live in the weight-zero subspace: the projection of a
        // basis vector vanishes unless each digit occurs exactly k/m times
        {
            std::vector<int> counts(static_cast<size_t>(m), 0);
            size_t rest = seed_index;
            for (int j = 0; j < k; ++j) {
                counts[rest % static_cast<size_t>(m)]++;
                rest /= static_cast<size_t>(m);
            }
            bool balanced = std::all_of(counts.begin(), counts.end(),
                                        [&](int c) { return c == k / m; });
            if (!balanced) continue;
        }
        std::vector<Cx> e(dim, Cx{0.0, 0.0});
        e[seed_index] = Cx{1.0, 0.0};
        std::vector<Cx> v = project_single(m, k, e);
        // modified Gram-Schmidt, twice for numerical safety
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& b : basis) {
                Cx overlap{0.0, 0.0};
                for (size_t i = 0; i < dim; ++i) overlap += std::conj(b[i]) * v[i];
                for (size_t i = 0; i < dim; ++i) v[i] -= overlap * b[i];
            }
        }
        double norm = 0.0;
        for (const Cx& x : v) norm += std::norm(x);
        norm = std::sqrt(norm);
        if (norm > 1e-8) {
            for (Cx& x : v) x /= norm;
            basis.push_back(std::move(v));
        }
    }
    if (basis.size() != target)
        throw std::logic_error("invariant_basis_single: projector rank mismatch");
    return basis;
}

// ── invariant tensors ─────────────────────────────────────────────────────────

InvariantTensor matching_tensor(std::vector<int> dims, int k, std::vector<Matching> matchings) {
    if (matchings.size() != dims.size())
        throw std::invalid_argument("matching_tensor: one matching per site required");
    for (int m : dims)
        if (m != 2) throw std::invalid_argument("matching_tensor: qubits only");
    for (const Matching& m : matchings) {
        std::vector<bool> used(static_cast<size_t>(k), false);
        for (auto [p, q] : m) {
            if (p < 0 || q < 0 || p >= k || q >= k || p >= q)
                throw std::invalid_argument("matching_tensor: malformed pair");
            if (used[static_cast<size_t>(p)] || used[static_cast<size_t>(q)])
                throw std::invalid_argument("matching_tensor: repeated copy in matching");
            used[static_cast<size_t>(p)] = used[static_cast<size_t>(q)] = true;
        }
        for (bool u : used)
            if (!u) throw std::invalid_argument("matching_tensor: matching is not perfect");
    }
    InvariantTensor t;
    t.dims = std::move(dims);
    t.k = k;
    InvariantTensor::Component comp;
    comp.matchings = std::move(matchings);
    t.terms.emplace_back(Cx{1.0, 0.0}, std::move(comp));
    return t;
}

InvariantTensor product_tensor(std::vector<int> dims, int k, std::vector<std::vector<Cx>> factors) {
    if (factors.size() != dims.size())
        throw std::invalid_argument("product_tensor: one factor per site required");
    for (size_t s = 0; s < dims.size(); ++s) {
        size_t expect = checked_pow(static_cast<size_t>(dims[s]), k, kMaxFactorSpace, "product_tensor");
        if (factors[s].size() != expect)
            throw std::invalid_argument("product_tensor: factor has wrong length");
    }
    InvariantTensor t;
    t.dims = std::move(dims);
    t.k = k;
    InvariantTensor::Component comp;
    comp.factors = std::move(factors);
    t.terms.emplace_back(Cx{1.0, 0.0}, std::move(comp));
    return t;
}

namespace {

// Tensor-network contraction of a matching component: copies are eliminated
// in ascending order; the frontier holds one amplitude per assignment of the
// open epsilon edges.
Cx eval_matching_component(const InvariantTensor::Component& comp, const QuditState& psi, int k) {
    const size_t n = psi.dims.size();
    const size_t state_dim = psi.amps.size();

    // partner[s][j]: the copy matched with copy j at site s
    std::vector<std::vector<int>> partner(n, std::vector<int>(static_cast<size_t>(k)));
    for (size_t s = 0; s < n; ++s) {
        for (auto [p, q] : comp.matchings[s]) {
            partner[s][static_cast<size_t>(p)] = q;
            partner[s][static_cast<size_t>(q)] = p;
        }
    }

    struct OpenLeg {
        int site;
        int origin;   // copy where the edge opened
    };
    std::vector<OpenLeg> open;
    std::vector<Cx> frontier{Cx{1.0, 0.0}};

    for (int j = 0; j < k; ++j) {
        // legs closing at this copy, with their positions in the open list
        std::vector<std::pair<int, int>> closing;   // (position, site)
        for (size_t pos = 0; pos < open.size(); ++pos)
            if (partner[static_cast<size_t>(open[pos].site)][static_cast<size_t>(open[pos].origin)] == j)
                closing.emplace_back(static_cast<int>(pos), open[pos].site);
        std::vector<int> opening;   // sites whose edge at j points forward
        for (size_t s = 0; s < n; ++s)
            if (partner[s][static_cast<size_t>(j)] > j) opening.push_back(static_cast<int>(s));

        std::vector<OpenLeg> next_open;
        std::vector<int> survivor_pos;   // positions of surviving old legs, in order
        for (size_t pos = 0; pos < open.size(); ++pos) {
            bool closes = false;
            for (auto [cpos, csite] : closing)
                if (cpos == static_cast<int>(pos)) closes = true;
            if (!closes) {
                survivor_pos.push_back(static_cast<int>(pos));
                next_open.push_back(open[pos]);
            }
        }
        for (int s : opening) next_open.push_back({s, j});

        std::vector<Cx> next(size_t{1} << next_open.size(), Cx{0.0, 0.0});
        const size_t old_count = frontier.size();
        for (size_t f = 0; f < old_count; ++f) {
            if (frontier[f] == Cx{0.0, 0.0}) continue;
            for (size_t b = 0; b < state_dim; ++b) {
                Cx val = frontier[f] * psi.amps[b];
                if (val == Cx{0.0, 0.0}) continue;
                // epsilon factors for edges closing here: edge (p, j) carries
                // eps_{bit_p, bit_j} with eps_{01} = +1, eps_{10} = -1
                bool dead = false;
                double sign = 1.0;
                for (auto [cpos, csite] : closing) {
                    int stored = static_cast<int>((f >> cpos) & 1u);
                    int current = static_cast<int>((b >> (n - 1 - static_cast<size_t>(csite))) & 1u);
                    if (stored == current) { dead = true; break; }
                    if (stored == 1) sign = -sign;
                }
                if (dead) continue;
                size_t g = 0;
                for (size_t pos = 0; pos < survivor_pos.size(); ++pos)
                    g |= ((f >> survivor_pos[pos]) & 1u) << pos;
                for (size_t e = 0; e < opening.size(); ++e) {
                    size_t bit = (b >> (n - 1 - static_cast<size_t>(opening[e]))) & 1u;
                    g |= bit << (survivor_pos.size() + e);
                }
                next[g] += sign * val;
            }
        }
        open = std::move(next_open);
        frontier = std::move(next);
    }
    return frontier.front();
}

// Odometer over all copy labels; product components conjugate their factor
// entries (f_v is an inner product against v).  Per-site factor indices and
// amplitude prefix products are maintained incrementally: a typical odometer
// step only touches the last copy slot.
Cx eval_product_component(const InvariantTensor::Component& comp, const QuditState& psi, int k) {
    const size_t n = psi.dims.size();
    const size_t d = psi.amps.size();
    checked_pow(d, k, kMaxDenseContraction, "eval_slip(product)");

    // digit of each flat copy label at each site
    std::vector<std::vector<int>> digit(n, std::vector<int>(d));
    {
        std::vector<size_t> stride(n, 1);
        for (size_t s = n; s-- > 1;) stride[s - 1] = stride[s] * static_cast<size_t>(psi.dims[s]);
        for (size_t s = 0; s < n; ++s)
            for (size_t lab = 0; lab < d; ++lab)
                digit[s][lab] =
                    static_cast<int>((lab / stride[s]) % static_cast<size_t>(psi.dims[s]));
    }
    // pw[s][j] = m_s^{k-1-j}: the weight of copy slot j inside site s's factor label
    std::vector<std::vector<int64_t>> pw(n, std::vector<int64_t>(static_cast<size_t>(k)));
    for (size_t s = 0; s < n; ++s) {
        int64_t p = 1;
        for (int j = k; j-- > 0;) {
            pw[s][static_cast<size_t>(j)] = p;
            p *= psi.dims[s];
        }
    }

    std::vector<size_t> label(static_cast<size_t>(k), 0);
    std::vector<int64_t> site_idx(n, 0);   // all-zero labels have digit 0 everywhere
    std::vector<Cx> prefix(static_cast<size_t>(k) + 1);
    prefix[0] = Cx{1.0, 0.0};
    for (int j = 0; j < k; ++j) prefix[static_cast<size_t>(j) + 1] = prefix[static_cast<size_t>(j)] * psi.amps[0];

    Cx total{0.0, 0.0};
    for (;;) {
        Cx amp = prefix[static_cast<size_t>(k)];
        if (amp != Cx{0.0, 0.0}) {
            Cx weight{1.0, 0.0};
            for (size_t s = 0; s < n && weight != Cx{0.0, 0.0}; ++s)
                weight *= std::conj(comp.factors[s][static_cast<size_t>(site_idx[s])]);
            total += weight * amp;
        }
        int j = k - 1;
        while (j >= 0) {
            size_t old = label[static_cast<size_t>(j)];
            if (old + 1 == d) {
                label[static_cast<size_t>(j)] = 0;
                for (size_t s = 0; s < n; ++s)
                    site_idx[s] -= digit[s][old] * pw[s][static_cast<size_t>(j)];
                --j;
            } else {
                label[static_cast<size_t>(j)] = old + 1;
                for (size_t s = 0; s < n; ++s)
                    site_idx[s] += (digit[s][old + 1] - digit[s][old]) * pw[s][static_cast<size_t>(j)];
                break;
            }
        }
        if (j < 0) break;
        for (int t = j; t < k; ++t)
            prefix[static_cast<size_t>(t) + 1] =
                prefix[static_cast<size_t>(t)] * psi.amps[label[static_cast<size_t>(t)]];
    }
    return total;
}

} // namespace

Cx eval_slip(const InvariantTensor& v, const QuditState& psi) {
    if (v.dims != psi.dims) throw std::invalid_argument("eval_slip: dimension mismatch");
    Cx total{0.0, 0.0};
    for (const auto& [coeff, comp] : v.terms) {
        Cx value = comp.is_matching() ? eval_matching_component(comp, psi, v.k)
                                      : eval_product_component(comp, psi, v.k);
        total += coeff * value;
    }
    return total;
}

// ── basis construction ────────────────────────────────────────────────────────

namespace {

Matching permuted_matching(const Matching& m, const std::vector<int>& sigma) {
    Matching out;
    out.reserve(m.size());
    for (auto [p, q] : m) {
        int a = sigma[static_cast<size_t>(p)];
        int b = sigma[static_cast<size_t>(q)];
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// canonical representative of a matching tuple under simultaneous S_k action:
// the lexicographically smallest permuted image
std::vector<Matching> canonical_tuple(const std::vector<Matching>& tuple, int k) {
    std::vector<int> sigma(static_cast<size_t>(k));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<Matching> best = tuple;
    {
        std::vector<Matching> start;
        start.reserve(tuple.size());
        for (const Matching& m : tuple) start.push_back(permuted_matching(m, sigma));
        best = std::move(start);
    }
    while (std::next_permutation(sigma.begin(), sigma.end())) {
        std::vector<Matching> image;
        image.reserve(tuple.size());
        for (const Matching& m : tuple) image.push_back(permuted_matching(m, sigma));
        if (image < best) best = std::move(image);
    }
    return best;
}

std::vector<InvariantTensor> qubit_candidates(const std::vector<int>& dims, int k) {
    const size_t n = dims.size();
    std::vector<Matching> site_basis = non_crossing_matchings(k);
    const size_t per_site = site_basis.size();

    size_t tuple_count = 1;
    for (size_t s = 0; s < n; ++s) {
        if (tuple_count > kMaxCanonicalizationWork / per_site)
            throw InfeasibleError("slip_basis: candidate enumeration cap exceeded");
        tuple_count *= per_site;
    }
    uint64_t kfact = factorial_u64(k);
    if (tuple_count * kfact > kMaxCanonicalizationWork)
        throw InfeasibleError("slip_basis: canonicalization cap exceeded");

    std::set<std::vector<Matching>> canon;
    std::vector<size_t> pick(n, 0);
    bool done = false;
    while (!done) {
        std::vector<Matching> tuple;
        tuple.reserve(n);
        for (size_t s = 0; s < n; ++s) tuple.push_back(site_basis[pick[s]]);
        canon.insert(canonical_tuple(tuple, k));
        done = true;
        for (size_t s = n; s-- > 0;) {
            if (++pick[s] < per_site) { done = false; break; }
            pick[s] = 0;
        }
    }

    std::vector<InvariantTensor> out;
    out.reserve(canon.size());
    for (const auto& tuple : canon) out.push_back(matching_tensor(dims, k, tuple));
    return out;
}

std::vector<InvariantTensor> product_candidates(const std::vector<int>& dims, int k) {
    const size_t n = dims.size();
    std::vector<std::vector<std::vector<Cx>>> site_bases;
    site_bases.reserve(n);
    for (int m : dims) site_bases.push_back(invariant_basis_single(m, k));

    size_t count = 1;
    for (const auto& b : site_bases) {
        if (b.empty()) return {};
        count *= b.size();
        if (count > 4096) throw InfeasibleError("slip_basis: candidate enumeration cap exceeded");
    }

    std::vector<InvariantTensor> out;
    out.reserve(count);
    std::vector<size_t> pick(n, 0);
    bool done = false;
    while (!done) {
        std::vector<std::vector<Cx>> factors;
        factors.reserve(n);
        for (size_t s = 0; s < n; ++s) factors.push_back(site_bases[s][pick[s]]);
        out.push_back(product_tensor(dims, k, std::move(factors)));
        done = true;
        for (size_t s = n; s-- > 0;) {
            if (++pick[s] < site_bases[s].size()) { done = false; break; }
            pick[s] = 0;
        }
    }
    return out;
}

} // namespace

CMatrix build_evaluation_matrix_serial(const std::vector<InvariantTensor>& candidates,
                                       const std::vector<QuditState>& states) {
    CMatrix e(states.size(), candidates.size());
    for (size_t r = 0; r < states.size(); ++r)
        for (size_t c = 0; c < candidates.size(); ++c)
            e.at(r, c) = eval_slip(candidates[c], states[r]);
    return e;
}

CMatrix build_evaluation_matrix(const std::vector<InvariantTensor>& candidates,
                                const std::vector<QuditState>& states) {
    CMatrix e(states.size(), candidates.size());
    const long long cells = static_cast<long long>(states.size() * candidates.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long cell = 0; cell < cells; ++cell) {
        size_t r = static_cast<size_t>(cell) / candidates.size();
        size_t c = static_cast<size_t>(cell) % candidates.size();
        e.at(r, c) = eval_slip(candidates[c], states[r]);
    }
    return e;
}

std::vector<InvariantTensor> slip_basis(const std::vector<int>& dims, int k, uint64_t seed) {
    if (dims.empty()) throw std::invalid_argument("slip_basis: dims must be nonempty");
    if (k < 0) throw std::invalid_argument("slip_basis: k must be >= 0");
    if (k == 0 || !degree_gate(k, dims)) return {};

    bool all_qubits = std::all_of(dims.begin(), dims.end(), [](int m) { return m == 2; });
    std::vector<InvariantTensor> candidates =
        all_qubits ? qubit_candidates(dims, k) : product_candidates(dims, k);
    if (candidates.empty()) return {};

    size_t r_states = std::max<size_t>(8, 3 * candidates.size());
    std::vector<QuditState> states;
    states.reserve(r_states);
    for (size_t r = 0; r < r_states; ++r)
        states.push_back(random_state(dims, Rng::derive(seed, r)).normalized());

    CMatrix evals = build_evaluation_matrix(candidates, states);
    // identically-zero candidate sets produce a pure rounding-noise matrix:
    // with unit-norm states its largest singular value sits many orders below
    // any honest evaluation, so an absolute floor separates the two regimes
    std::vector<double> sv = singular_values(evals);
    if (sv.empty() || sv.front() <= 1e-8) return {};
    int rank = 0;
    for (double s : sv)
        if (s > 1e-8 * sv.front()) ++rank;
    if (rank == 0) return {};
    std::vector<int> cols = independent_columns(evals, rank);

    // the selected columns must reproduce the full rank on their own
    CMatrix sub(evals.rows, cols.size());
    for (size_t r = 0; r < evals.rows; ++r)
        for (size_t c = 0; c < cols.size(); ++c)
            sub.at(r, c) = evals.at(r, static_cast<size_t>(cols[c]));
    if (numerical_rank(sub, 1e-8) != rank)
        throw std::logic_error("slip_basis: selected columns lost rank");

    std::vector<InvariantTensor> out;
    out.reserve(cols.size());
    for (int c : cols) out.push_back(candidates[static_cast<size_t>(c)]);
    return out;
}

} // namespace slipforge
