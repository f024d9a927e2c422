#include "slipforge/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace slipforge {

Json complex_to_json(Cx v) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::invalid_argument("complex_to_json: non-finite value");
    return Json::array({v.real(), v.imag()});
}

Cx complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("complex_from_json: expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json bigint_to_json(const BigInt& v) {
    if (v.fits_int64()) {
        int64_t x = v.to_int64();
        if (x <= (int64_t{1} << 53) && x >= -(int64_t{1} << 53)) return Json(x);
    }
    return Json(v.to_string());
}

Json state_to_json(const QuditState& psi) {
    Json amps = Json::array();
    for (const Cx& a : psi.amps) amps.push_back(complex_to_json(a));
    return Json{{"dims", psi.dims}, {"amps", std::move(amps)}};
}

QuditState state_from_json(const Json& j) {
    if (!j.contains("dims") || !j.contains("amps"))
        throw std::invalid_argument("state_from_json: need dims and amps");
    std::vector<int> dims = j.at("dims").get<std::vector<int>>();
    std::vector<Cx> amps;
    for (const Json& a : j.at("amps")) amps.push_back(complex_from_json(a));
    return {std::move(dims), std::move(amps)};
}

QuditState load_state(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("load_state: cannot open " + path);
    Json j;
    in >> j;
    return state_from_json(j);
}

void save_state(const QuditState& psi, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("save_state: cannot open " + path);
    out << state_to_json(psi).dump(2) << "\n";
}

Json basis_to_json(const std::vector<InvariantTensor>& basis, const std::vector<int>& dims,
                   int k, uint64_t seed) {
    Json tensors = Json::array();
    for (const InvariantTensor& t : basis) {
        Json terms = Json::array();
        for (const auto& [coeff, comp] : t.terms) {
            Json term;
            term["coeff"] = complex_to_json(coeff);
            if (comp.is_matching()) {
                term["form"] = "matching";
                Json sites = Json::array();
                for (const Matching& m : comp.matchings) {
                    Json pairs = Json::array();
                    for (auto [p, q] : m) pairs.push_back(Json::array({p + 1, q + 1}));
                    sites.push_back(std::move(pairs));
                }
                term["matchings"] = std::move(sites);
            } else {
                term["form"] = "product";
                Json sites = Json::array();
                for (const auto& f : comp.factors) {
                    Json vec = Json::array();
                    for (const Cx& v : f) vec.push_back(complex_to_json(v));
                    sites.push_back(std::move(vec));
                }
                term["factors"] = std::move(sites);
            }
            terms.push_back(std::move(term));
        }
        tensors.push_back(Json{{"terms", std::move(terms)}});
    }
    return Json{{"schema", "slipforge-basis-v1"},
                {"dims", dims},
                {"k", k},
                {"seed", seed},
                {"count", basis.size()},
                {"tensors", std::move(tensors)}};
}

std::vector<InvariantTensor> basis_from_json(const Json& j) {
    if (j.value("schema", "") != "slipforge-basis-v1")
        throw std::invalid_argument("basis_from_json: unknown schema");
    std::vector<int> dims = j.at("dims").get<std::vector<int>>();
    int k = j.at("k").get<int>();
    std::vector<InvariantTensor> out;
    for (const Json& jt : j.at("tensors")) {
        InvariantTensor combined;
        combined.dims = dims;
        combined.k = k;
        for (const Json& term : jt.at("terms")) {
            Cx coeff = complex_from_json(term.at("coeff"));
            if (term.at("form") == "matching") {
                std::vector<Matching> matchings;
                for (const Json& site : term.at("matchings")) {
                    Matching m;
                    for (const Json& pair : site)
                        m.emplace_back(pair[0].get<int>() - 1, pair[1].get<int>() - 1);
                    std::sort(m.begin(), m.end());
                    matchings.push_back(std::move(m));
                }
                InvariantTensor checked = matching_tensor(dims, k, std::move(matchings));
                combined.terms.emplace_back(coeff, std::move(checked.terms[0].second));
            } else if (term.at("form") == "product") {
                std::vector<std::vector<Cx>> factors;
                for (const Json& site : term.at("factors")) {
                    std::vector<Cx> f;
                    for (const Json& v : site) f.push_back(complex_from_json(v));
                    factors.push_back(std::move(f));
                }
                InvariantTensor checked = product_tensor(dims, k, std::move(factors));
                combined.terms.emplace_back(coeff, std::move(checked.terms[0].second));
            } else {
                throw std::invalid_argument("basis_from_json: unknown tensor form");
            }
        }
        out.push_back(std::move(combined));
    }
    return out;
}

std::vector<InvariantTensor> load_basis(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("load_basis: cannot open " + path);
    Json j;
    in >> j;
    return basis_from_json(j);
}

Json exp_poly_to_json(const ExpPolyDim& poly) {
    BigInt kfact = BigInt::factorial(static_cast<uint64_t>(poly.k));
    Json terms = Json::array();
    for (const auto& [base, coeff] : poly.terms) {
        Rational numerator = coeff * Rational(kfact);
        if (!numerator.is_integer())
            throw std::logic_error("exp_poly_to_json: coefficient denominator exceeds k!");
        terms.push_back(Json{{"base", bigint_to_json(base)},
                             {"numerator", bigint_to_json(numerator.num())}});
    }
    return Json{{"factorial_denominator", bigint_to_json(kfact)}, {"terms", std::move(terms)}};
}

Json sparse_poly_to_json(const SparsePoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms) {   // map order = canonical exponent order
        Json exps = Json::array();
        for (uint8_t d : e) exps.push_back(static_cast<int>(d));
        terms.push_back(Json{{"exponents", std::move(exps)},
                             {"num", c.num().to_string()},
                             {"den", c.den().to_string()}});
    }
    return Json{{"x_vars", p.nvars}, {"y_vars", p.nvars}, {"terms", std::move(terms)}};
}

} // namespace slipforge
