#include "slipforge/slocc.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "slipforge/dimension.hpp"

namespace slipforge {

namespace {

// the seeded basis is deterministic, so share it across signature calls
const std::vector<InvariantTensor>& cached_basis(const std::vector<int>& dims, int k,
                                                 uint64_t seed) {
    using Key = std::tuple<std::vector<int>, int, uint64_t>;
    static std::map<Key, std::vector<InvariantTensor>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    Key key{dims, k, seed};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, slip_basis(dims, k, seed)).first;
    return it->second;
}

} // namespace

std::string Verdict::kind_string() const {
    switch (kind) {
        case VerdictKind::EquivalentCandidate: return "EQUIVALENT_CANDIDATE";
        case VerdictKind::Inequivalent: return "INEQUIVALENT";
        case VerdictKind::NullConeIndistinguishable: return "NULL_CONE_INDISTINGUISHABLE";
    }
    return "UNKNOWN";
}

RatioSignature signature(const QuditState& psi, int k, uint64_t seed) {
    if (!degree_gate(k, psi.dims))
        throw std::invalid_argument("signature: degree fails the divisibility gate");
    RatioSignature sig;
    sig.degree = k;
    sig.seed = seed;
    for (const InvariantTensor& t : cached_basis(psi.dims, k, seed))
        sig.values.push_back(eval_slip(t, psi));
    double best = 0.0;
    for (size_t i = 0; i < sig.values.size(); ++i) {
        double mag = std::abs(sig.values[i]);
        if (mag > best) {
            best = mag;
            sig.reference_index = static_cast<int>(i);
        }
    }
    return sig;
}

std::vector<int> default_degrees(const std::vector<int>& dims) {
    std::vector<int> out;
    for (int k = 1; k <= 6; ++k)
        if (degree_gate(k, dims)) out.push_back(k);
    return out;
}

Verdict compare_states(const QuditState& psi, const QuditState& phi,
                       const std::vector<int>& degrees, double tol, uint64_t seed) {
    if (psi.dims != phi.dims)
        throw std::invalid_argument("compare_states: states must share dimensions");
    if (degrees.empty()) throw std::invalid_argument("compare_states: no degrees given");
    if (tol <= 0.0) throw std::invalid_argument("compare_states: tol must be positive");

    const std::string stability_caveat =
        "sufficiency assumes stable states (closed orbits) and holds only for the tested degrees";

    bool any_nonvanishing = false;
    for (int k : degrees) {
        if (!degree_gate(k, psi.dims))
            throw std::invalid_argument("compare_states: degree fails the divisibility gate");
        const auto& basis = cached_basis(psi.dims, k, seed);
        if (basis.empty()) continue;

        std::vector<Cx> f_psi, f_phi;
        for (const InvariantTensor& t : basis) {
            f_psi.push_back(eval_slip(t, psi));
            f_phi.push_back(eval_slip(t, phi));
        }
        // vanishing is judged against the homogeneous scale ||state||^k
        double scale_psi = tol * std::pow(std::max(psi.norm(), 1e-300), k);
        double scale_phi = tol * std::pow(std::max(phi.norm(), 1e-300), k);
        double max_psi = 0.0, max_phi = 0.0;
        int arg_psi = 0, arg_phi = 0;
        for (size_t i = 0; i < f_psi.size(); ++i) {
            if (std::abs(f_psi[i]) > max_psi) { max_psi = std::abs(f_psi[i]); arg_psi = static_cast<int>(i); }
            if (std::abs(f_phi[i]) > max_phi) { max_phi = std::abs(f_phi[i]); arg_phi = static_cast<int>(i); }
        }
        bool psi_vanishes = max_psi <= scale_psi;
        bool phi_vanishes = max_phi <= scale_phi;

        if (psi_vanishes != phi_vanishes) {
            // one-sided vanishing: h is nonzero on one state and zero on the other
            Verdict v;
            v.kind = VerdictKind::Inequivalent;
            v.witness_degree = k;
            v.witness_f = psi_vanishes ? arg_phi : arg_psi;
            v.witness_h = v.witness_f;
            v.caveat = "";
            return v;
        }
        if (psi_vanishes && phi_vanishes) continue;
        any_nonvanishing = true;

        for (size_t i = 0; i < f_psi.size(); ++i) {
            for (size_t j = i + 1; j < f_psi.size(); ++j) {
                Cx cross_a = f_psi[i] * f_phi[j];
                Cx cross_b = f_phi[i] * f_psi[j];
                double magnitude = std::max(std::abs(cross_a), std::abs(cross_b));
                double floor = scale_psi * scale_phi;
                if (std::abs(cross_a - cross_b) > tol * std::max(magnitude, floor)) {
                    Verdict v;
                    v.kind = VerdictKind::Inequivalent;
                    v.witness_degree = k;
                    v.witness_f = static_cast<int>(i);
                    v.witness_h = static_cast<int>(j);
                    return v;
                }
            }
        }
    }

    Verdict v;
    if (!any_nonvanishing) {
        v.kind = VerdictKind::NullConeIndistinguishable;
        v.caveat = "all tested polynomials vanish on both states; "
                   "ratio classification is blind on the null cone";
    } else {
        v.kind = VerdictKind::EquivalentCandidate;
        v.caveat = stability_caveat;
    }
    return v;
}

} // namespace slipforge
