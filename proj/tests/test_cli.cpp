// Black-box checks of the command-line tool: JSON outputs, exit codes, and
// byte-stable reruns.  The binary path arrives via SLIPFORGE_CLI_BIN.

#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "slipforge/json_io.hpp"
#include "slipforge/qstate.hpp"

using namespace slipforge;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("SLIPFORGE_CLI_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "SLIPFORGE_CLI_BIN must point at the slipforge binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/slipforge_test_") + name;
}

} // namespace

TEST_CASE("dim: numeric, gate, and symbolic outputs") {
    RunResult r = run_cli("dim --k 6 --n 5 --m 2");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("dimension") == 1);

    r = run_cli("dim --k 4 --dims 2,3");
    CHECK(r.exit_code == 0);
    j = Json::parse(r.out);
    CHECK(j.at("dimension") == 0);
    CHECK(j.at("reason") == "degree gate");

    r = run_cli("dim --k 10 --m 2 --symbolic");
    CHECK(r.exit_code == 0);
    j = Json::parse(r.out);
    CHECK(j.at("factorial_denominator") == 3628800);
    REQUIRE(j.at("terms").size() == 11);
    bool found = false;
    for (const Json& t : j.at("terms"))
        if (t.at("base") == -3) {
            CHECK(t.at("numerator") == 28448);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("char: the k = 4 two-row table") {
    RunResult r = run_cli("char --k 4 --lambda 2,2");
    CHECK(r.exit_code == 0);
    Json rows = Json::parse(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].at("cycle_type") == Json::array({4}));
    CHECK(rows[0].at("value") == 0);
    CHECK(rows[0].at("class_size") == 6);
    CHECK(rows[1].at("value") == -1);
    CHECK(rows[1].at("class_size") == 8);
    CHECK(rows[2].at("value") == 2);
    CHECK(rows[2].at("class_size") == 3);
    CHECK(rows[4].at("value") == 2);
    CHECK(rows[4].at("class_size") == 1);
}

TEST_CASE("exit codes: validation 1, infeasible 2") {
    CHECK(run_cli("dim --k 4").exit_code == 1);                   // missing --n/--m
    CHECK(run_cli("nonsense-subcommand").exit_code == 1);
    CHECK(run_cli("dim --k 4 --n 2 --m 2 --bogus-flag 7").exit_code == 1);
    CHECK(run_cli("basis --dims 2,2,2,2 --k 8 --seed 1").exit_code == 2);
    CHECK(run_cli("char --k 14 --lambda 7,7").exit_code == 2);
}

TEST_CASE("random-state is seeded and byte-stable") {
    RunResult a = run_cli("random-state --dims 2,2,2 --seed 7");
    RunResult b = run_cli("random-state --dims 2,2,2 --seed 7");
    RunResult c = run_cli("random-state --dims 2,2,2 --seed 8");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    QuditState psi = state_from_json(Json::parse(a.out));
    CHECK(psi.dims == std::vector<int>{2, 2, 2});
    CHECK(run_cli("random-state --dims 2,2,2").exit_code == 1);   // seed required
}

TEST_CASE("basis then eval round-trip through files") {
    std::string basis_path = temp_path("basis.json");
    std::string state_path = temp_path("state.json");
    RunResult b = run_cli("basis --dims 2,2,2 --k 4 --seed 1 --out " + basis_path);
    CHECK(b.exit_code == 0);
    Json manifest = Json::parse(b.out);
    CHECK(manifest.at("count") == 1);

    RunResult s = run_cli("random-state --dims 2,2,2 --seed 5 --out " + state_path);
    CHECK(s.exit_code == 0);

    RunResult e = run_cli("eval --basis " + basis_path + " --state " + state_path);
    CHECK(e.exit_code == 0);
    Json values = Json::parse(e.out).at("values");
    REQUIRE(values.size() == 1);
    // evaluating through the manifest equals evaluating in-process
    QuditState psi = load_state(state_path);
    auto basis = load_basis(basis_path);
    Cx direct = eval_slip(basis[0], psi);
    Cx through = complex_from_json(values[0]);
    CHECK(std::abs(direct - through) <= 1e-12);
}

TEST_CASE("product-form basis survives the file round-trip") {
    std::string basis_path = temp_path("basis33.json");
    std::string state_path = temp_path("state33.json");
    RunResult b = run_cli("basis --dims 3,3 --k 3 --seed 2 --out " + basis_path);
    CHECK(b.exit_code == 0);
    Json manifest = Json::parse(b.out);
    CHECK(manifest.at("count") == 1);
    CHECK(manifest.at("tensors")[0].at("terms")[0].at("form") == "product");

    RunResult s = run_cli("random-state --dims 3,3 --seed 11 --out " + state_path);
    CHECK(s.exit_code == 0);
    RunResult e = run_cli("eval --basis " + basis_path + " --state " + state_path);
    CHECK(e.exit_code == 0);
    Json values = Json::parse(e.out).at("values");
    REQUIRE(values.size() == 1);
    Cx through = complex_from_json(values[0]);
    Cx direct = eval_slip(load_basis(basis_path)[0], load_state(state_path));
    CHECK(std::abs(direct - through) <= 1e-12);
    CHECK(std::abs(through) > 1e-9);
}

TEST_CASE("qubit-slip evaluates a cut invariant") {
    std::string state_path = temp_path("bell.json");
    save_state(bell_state(), state_path);
    RunResult r = run_cli("qubit-slip --state " + state_path + " --cut 1 --ell 1");
    CHECK(r.exit_code == 0);
    Cx v = complex_from_json(Json::parse(r.out).at("value"));
    CHECK(std::abs(v - Cx{-1.0, 0.0}) <= 1e-12);
}

TEST_CASE("d6q5 evaluates and dumps the polynomial") {
    std::string state_path = temp_path("fiveq.json");
    save_state(random_state({2, 2, 2, 2, 2}, 99), state_path);
    RunResult r = run_cli("d6q5 --state " + state_path);
    CHECK(r.exit_code == 0);
    CHECK(Json::parse(r.out).contains("value"));

    std::string poly_path = temp_path("i6.json");
    RunResult d = run_cli("d6q5 --dump-poly " + poly_path);
    CHECK(d.exit_code == 0);
    std::ifstream in(poly_path);
    REQUIRE(in.good());
    Json poly;
    in >> poly;
    CHECK(poly.at("terms").size() == Json::parse(d.out).at("term_count").get<size_t>());
    // canonical dump: exponent vectors strictly increasing
    const auto& terms = poly.at("terms");
    for (size_t i = 1; i < terms.size(); ++i)
        CHECK(terms[i - 1].at("exponents") < terms[i].at("exponents"));
}

TEST_CASE("classify distinguishes GHZ from W and flags the null cone") {
    std::string ghz_path = temp_path("ghz3.json");
    std::string w_path = temp_path("w3.json");
    std::string zeros_path = temp_path("zeros3.json");
    save_state(ghz_state(3), ghz_path);
    save_state(w_state(3), w_path);
    save_state(zeros_state({2, 2, 2}), zeros_path);

    RunResult r = run_cli("classify --a " + ghz_path + " --b " + w_path +
                          " --degrees 4 --tol 1e-6 --seed 1");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("verdict") == "INEQUIVALENT");
    CHECK(j.at("witness").at("degree") == 4);

    r = run_cli("classify --a " + zeros_path + " --b " + w_path +
                " --degrees 4 --tol 1e-6 --seed 1");
    CHECK(r.exit_code == 0);
    j = Json::parse(r.out);
    CHECK(j.at("verdict") == "NULL_CONE_INDISTINGUISHABLE");
    CHECK(j.at("caveat").get<std::string>().size() > 0);
}

TEST_CASE("identical invocations produce identical bytes") {
    RunResult a = run_cli("basis --dims 2,2,2,2 --k 4 --seed 3");
    RunResult b = run_cli("basis --dims 2,2,2,2 --k 4 --seed 3");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    RunResult c = run_cli("dim --k 8 --m 2 --symbolic");
    RunResult d = run_cli("dim --k 8 --m 2 --symbolic");
    CHECK(c.out == d.out);
}
