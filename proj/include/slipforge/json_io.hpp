#pragma once

#include <string>

#include <json.hpp>

#include "slipforge/bigint.hpp"
#include "slipforge/dimension.hpp"
#include "slipforge/invariant_basis.hpp"
#include "slipforge/ladder.hpp"
#include "slipforge/qstate.hpp"

namespace slipforge {

using Json = nlohmann::json;

// complex values serialize as [re, im]; non-finite numbers are rejected
Json complex_to_json(Cx v);
Cx complex_from_json(const Json& j);

// exact integers serialize as JSON numbers when they fit in 53 bits and as
// decimal strings beyond that
Json bigint_to_json(const BigInt& v);

// state files: {"dims": [...], "amps": [[re, im], ...]} in the shared
// big-endian index convention
Json state_to_json(const QuditState& psi);
QuditState state_from_json(const Json& j);
QuditState load_state(const std::string& path);
void save_state(const QuditState& psi, const std::string& path);

// basis manifests: matching tuples (1-based copies) or dense per-site vectors
Json basis_to_json(const std::vector<InvariantTensor>& basis, const std::vector<int>& dims,
                   int k, uint64_t seed);
std::vector<InvariantTensor> basis_from_json(const Json& j);
std::vector<InvariantTensor> load_basis(const std::string& path);

// symbolic dimension: {"factorial_denominator": k!, "terms": [{"base", "numerator"}...]}
Json exp_poly_to_json(const ExpPolyDim& poly);

// canonical sparse polynomial dump: terms sorted by exponent vector,
// coefficients as exact integer pairs
Json sparse_poly_to_json(const SparsePoly& p);

} // namespace slipforge
