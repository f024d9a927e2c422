// slipforge command-line front end.
//
// Machine-readable JSON goes to stdout, diagnostics to stderr.  Exit codes:
// 0 success, 1 validation error, 2 infeasible-size rejection.  Stochastic
// subcommands require an explicit seed so runs are reproducible; the
// SLIPFORGE_THREADS environment variable bounds internal parallelism.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slipforge/bigint.hpp"
#include "slipforge/characters.hpp"
#include "slipforge/cut_slips.hpp"
#include "slipforge/dimension.hpp"
#include "slipforge/invariant_basis.hpp"
#include "slipforge/json_io.hpp"
#include "slipforge/ladder.hpp"
#include "slipforge/qstate.hpp"
#include "slipforge/slocc.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace slipforge;

void apply_thread_env() {
#ifdef _OPENMP
    if (const char* env = std::getenv("SLIPFORGE_THREADS")) {
        int want = std::atoi(env);
        if (want >= 1 && want < omp_get_max_threads()) omp_set_num_threads(want);
    }
#endif
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<int> parse_int_list(const std::string& csv, const char* what) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < csv.size()) {
        size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        try {
            out.push_back(std::stoi(csv.substr(pos, comma - pos)));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": malformed integer list");
        }
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

// ── subcommand bodies ─────────────────────────────────────────────────────────

int run_dim(int k, int n, int m, const std::string& dims_csv, bool symbolic) {
    if (!dims_csv.empty()) {
        std::vector<int> dims = parse_int_list(dims_csv, "--dims");
        if (!degree_gate(k, dims)) {
            emit(Json{{"dimension", 0}, {"reason", "degree gate"}});
            return 0;
        }
        bool equal = std::all_of(dims.begin(), dims.end(), [&](int d) { return d == dims[0]; });
        if (!equal)
            throw std::invalid_argument(
                "dim: counting for unequal dims is not defined here; use `basis` for the "
                "constructive rank");
        m = dims[0];
        n = static_cast<int>(dims.size());
    }
    if (m < 2) throw std::invalid_argument("dim: need --m >= 2 or --dims");
    if (symbolic) {
        if (k <= 0 || k % m != 0)
            throw std::invalid_argument("dim --symbolic: m must divide k > 0");
        emit(exp_poly_to_json(slip_dim_symbolic(k, m)));
        return 0;
    }
    if (n < 1) throw std::invalid_argument("dim: need --n >= 1 or --dims");
    emit(Json{{"dimension", bigint_to_json(slip_dim(k, n, m))}});
    return 0;
}

int run_char(int k, const std::string& lambda_csv) {
    std::vector<int> lambda = parse_int_list(lambda_csv, "--lambda");
    Partition shape(lambda);
    if (!shape.is_rectangular() || shape.empty())
        throw std::invalid_argument("char: lambda must be rectangular (r,...,r)");
    if (shape.sum() != k) throw std::invalid_argument("char: lambda must be a partition of k");
    int m = static_cast<int>(shape.rows());
    int r = shape.parts[0];
    if (k > 12) throw InfeasibleError("char: table capped at k <= 12");
    Json rows = Json::array();
    for (const CharTableEntry& row : character_table_row(m, r))
        rows.push_back(Json{{"cycle_type", row.cycle_type.parts},
                            {"value", bigint_to_json(row.value)},
                            {"class_size", bigint_to_json(row.class_size)}});
    emit(rows);
    return 0;
}

int run_basis(const std::string& dims_csv, int k, uint64_t seed, const std::string& out_path) {
    std::vector<int> dims = parse_int_list(dims_csv, "--dims");
    auto basis = slip_basis(dims, k, seed);
    Json j = basis_to_json(basis, dims, k, seed);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("basis: cannot open " + out_path);
        out << j.dump(2) << "\n";
        std::cerr << "basis manifest written to " << out_path << "\n";
    }
    emit(j);
    return 0;
}

int run_eval(const std::string& basis_path, const std::string& state_path) {
    auto basis = load_basis(basis_path);
    QuditState psi = load_state(state_path);
    Json values = Json::array();
    for (const InvariantTensor& t : basis) values.push_back(complex_to_json(eval_slip(t, psi)));
    emit(Json{{"values", std::move(values)}});
    return 0;
}

int run_qubit_slip(const std::string& state_path, const std::string& cut_csv, int ell) {
    QuditState psi = load_state(state_path);
    BipartiteCut cut(parse_int_list(cut_csv, "--cut"), psi.num_sites());
    emit(Json{{"value", complex_to_json(f_ell(psi, cut, ell))}});
    return 0;
}

int run_d6q5(const std::string& state_path, const std::string& dump_path) {
    if (!dump_path.empty()) {
        const SparsePoly& poly = degree6_polynomial();
        std::ofstream out(dump_path);
        if (!out) throw std::invalid_argument("d6q5: cannot open " + dump_path);
        out << sparse_poly_to_json(poly).dump(2) << "\n";
        emit(Json{{"dumped", dump_path}, {"term_count", poly.term_count()}});
        return 0;
    }
    if (state_path.empty()) throw std::invalid_argument("d6q5: need --state or --dump-poly");
    emit(Json{{"value", complex_to_json(degree6_five_qubit(load_state(state_path)))}});
    return 0;
}

int run_classify(const std::string& a_path, const std::string& b_path,
                 const std::string& degrees_csv, double tol, uint64_t seed) {
    QuditState a = load_state(a_path);
    QuditState b = load_state(b_path);
    std::vector<int> degrees =
        degrees_csv.empty() ? default_degrees(a.dims) : parse_int_list(degrees_csv, "--degrees");
    Verdict v = compare_states(a, b, degrees, tol, seed);
    Json witness;
    if (v.kind == VerdictKind::Inequivalent)
        witness = Json{{"degree", v.witness_degree}, {"f_index", v.witness_f}, {"h_index", v.witness_h}};
    emit(Json{{"verdict", v.kind_string()},
              {"degrees", degrees},
              {"tol", tol},
              {"witness", witness},
              {"caveat", v.caveat}});
    return 0;
}

int run_random_state(const std::string& dims_csv, uint64_t seed, bool have_seed,
                     const std::string& named, const std::string& out_path) {
    QuditState psi;
    if (!named.empty()) {
        std::vector<int> dims = parse_int_list(dims_csv, "--dims");
        int n = static_cast<int>(dims.size());
        if (named == "ghz") psi = ghz_state(n);
        else if (named == "w") psi = w_state(n);
        else if (named == "zeros") psi = zeros_state(dims);
        else if (named == "bell") psi = bell_state();
        else throw std::invalid_argument("random-state: unknown --named (ghz|w|zeros|bell)");
        for (int d : dims)
            if (d != 2 && named != "zeros")
                throw std::invalid_argument("random-state: named states are qubit states");
    } else {
        if (!have_seed) throw std::invalid_argument("random-state: --seed is required");
        psi = random_state(parse_int_list(dims_csv, "--dims"), seed);
    }
    if (!out_path.empty()) {
        save_state(psi, out_path);
        std::cerr << "state written to " << out_path << "\n";
    }
    emit(state_to_json(psi));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    apply_thread_env();

    CLI::App app{"slipforge: SL-invariant polynomials and SLOCC classification"};
    app.require_subcommand(1);

    // dim
    auto* dim = app.add_subcommand("dim", "dimension of the degree-k invariant space");
    int dim_k = 0, dim_n = 0, dim_m = 0;
    std::string dim_dims;
    bool dim_symbolic = false;
    dim->add_option("--k", dim_k, "degree")->required();
    dim->add_option("--n", dim_n, "number of qudits");
    dim->add_option("--m", dim_m, "local dimension");
    dim->add_option("--dims", dim_dims, "comma-separated local dimensions");
    dim->add_flag("--symbolic", dim_symbolic, "exponential-polynomial form in n");

    // char
    auto* chr = app.add_subcommand("char", "character table row for rectangular lambda");
    int chr_k = 0;
    std::string chr_lambda;
    chr->add_option("--k", chr_k, "degree (size of the symmetric group)")->required();
    chr->add_option("--lambda", chr_lambda, "rectangular partition, e.g. 2,2")->required();

    // basis
    auto* bas = app.add_subcommand("basis", "construct an independent degree-k basis");
    std::string bas_dims, bas_out;
    int bas_k = 0;
    uint64_t bas_seed = 0;
    bas->add_option("--dims", bas_dims, "comma-separated local dimensions")->required();
    bas->add_option("--k", bas_k, "degree")->required();
    bas->add_option("--seed", bas_seed, "evaluation-state seed")->required();
    bas->add_option("--out", bas_out, "also write the manifest to this path");

    // eval
    auto* evl = app.add_subcommand("eval", "evaluate a stored basis at a state");
    std::string evl_basis, evl_state;
    evl->add_option("--basis", evl_basis, "basis manifest path")->required();
    evl->add_option("--state", evl_state, "state JSON path")->required();

    // qubit-slip
    auto* qs = app.add_subcommand("qubit-slip", "trace invariant over a bipartite cut");
    std::string qs_state, qs_cut;
    int qs_ell = 1;
    qs->add_option("--state", qs_state, "state JSON path")->required();
    qs->add_option("--cut", qs_cut, "side-A qubit indices, e.g. 1,3")->required();
    qs->add_option("--ell", qs_ell, "trace power (degree = 2*ell)")->required();

    // d6q5
    auto* d6 = app.add_subcommand("d6q5", "the degree-6 five-qubit invariant");
    std::string d6_state, d6_dump;
    d6->add_option("--state", d6_state, "state JSON path");
    d6->add_option("--dump-poly", d6_dump, "write the symbolic polynomial to this path");

    // classify
    auto* cls = app.add_subcommand("classify", "ratio-vector SLOCC comparison");
    std::string cls_a, cls_b, cls_degrees;
    double cls_tol = 1e-6;
    uint64_t cls_seed = 0;
    cls->add_option("--a", cls_a, "first state JSON path")->required();
    cls->add_option("--b", cls_b, "second state JSON path")->required();
    cls->add_option("--degrees", cls_degrees, "comma-separated degrees (default: gated k <= 6)");
    cls->add_option("--tol", cls_tol, "ratio tolerance");
    cls->add_option("--seed", cls_seed, "basis seed")->required();

    // random-state
    auto* rnd = app.add_subcommand("random-state", "seeded Gaussian or named state");
    std::string rnd_dims, rnd_named, rnd_out;
    uint64_t rnd_seed = 0;
    bool rnd_have_seed = false;
    rnd->add_option("--dims", rnd_dims, "comma-separated local dimensions")->required();
    rnd->add_option("--seed", rnd_seed, "amplitude seed")->each([&](const std::string&) {
        rnd_have_seed = true;
    });
    rnd->add_option("--named", rnd_named, "ghz | w | zeros | bell");
    rnd->add_option("--out", rnd_out, "also write the state to this path");

    try {
        app.parse(argc, argv);
        if (dim->parsed()) return run_dim(dim_k, dim_n, dim_m, dim_dims, dim_symbolic);
        if (chr->parsed()) return run_char(chr_k, chr_lambda);
        if (bas->parsed()) return run_basis(bas_dims, bas_k, bas_seed, bas_out);
        if (evl->parsed()) return run_eval(evl_basis, evl_state);
        if (qs->parsed()) return run_qubit_slip(qs_state, qs_cut, qs_ell);
        if (d6->parsed()) return run_d6q5(d6_state, d6_dump);
        if (cls->parsed()) return run_classify(cls_a, cls_b, cls_degrees, cls_tol, cls_seed);
        if (rnd->parsed()) return run_random_state(rnd_dims, rnd_seed, rnd_have_seed, rnd_named, rnd_out);
        std::cerr << "no subcommand selected\n";
        return 1;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const slipforge::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
