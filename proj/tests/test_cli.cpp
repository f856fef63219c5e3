// Golden tests for the command-line front end: exit-code contract, report
// shape, determinism. Shells out to the built binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string command =
        std::string(STATDISC_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    CliResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string data_file(const std::string& name) {
    return std::string(STATDISC_DATA_DIR) + "/" + name;
}

std::string temp_file(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/statdisc_test_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("check completes on the scalar quadric") {
    const CliResult result =
        run_cli("check --input " + data_file("quadric_n1.json"));
    REQUIRE(result.exit_code == 0);
    const json report = json::parse(result.output);
    CHECK(report["status"] == "ok");
    CHECK(report["results"]["b0"][0] == 1.0);
    CHECK(report["command"] == "check");
    CHECK(report["library_version"] == "0.1.0");
}

TEST_CASE("verify passes on a Theorem disc") {
    const CliResult result = run_cli(
        "verify --input " + data_file("quadric_n1.json") +
        " --a 0.1 --V 1 --b0 1 --samples 256");
    REQUIRE(result.exit_code == 0);
    const json report = json::parse(result.output);
    CHECK(report["status"] == "ok");
    CHECK(report["results"]["attachment"]["max_residual"].get<double>() <= 1e-10);
    CHECK(report["results"]["lift_holomorphic"]["pass"] == true);
}

TEST_CASE("jacobian reports the singular verdict with exit 0") {
    const CliResult result = run_cli(
        "jacobian --input " + data_file("quadric_levi_pair.json") +
        " --a 0,0;0,0 --b0 1,0 --V 1,0;0,0");
    REQUIRE(result.exit_code == 0);
    const json report = json::parse(result.output);
    CHECK(report["results"]["jacobian"]["verdict"] == "singular");
    CHECK(report["results"]["necessity"]["verdict"] == "CONSISTENT");
}

TEST_CASE("tolerance overrides can force a mathematical failure") {
    const CliResult result = run_cli(
        "verify --input " + data_file("quadric_n1.json") +
        " --a 0.1 --V 1 --b0 1 --tol attachment=1e-30");
    CHECK(result.exit_code == 1);
    const json report = json::parse(result.output);
    CHECK(report["status"] == "fail");
    CHECK(report["error"]["code"] == "ToleranceFail");
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run_cli("check --input /nonexistent/q.json").exit_code == 2);

    const std::string malformed = temp_file("malformed.json", "{oops");
    CHECK(run_cli("check --input " + malformed).exit_code == 2);

    const std::string non_hermitian = temp_file("nonherm.json", R"({
      "n": 2, "d": 1,
      "matrices": [[[[0.0,0.0],[1.0,0.0]],[[0.0,0.0],[0.0,0.0]]]]
    })");
    const CliResult result = run_cli("check --input " + non_hermitian);
    CHECK(result.exit_code == 2);
    const json report = json::parse(result.output);
    CHECK(report["error"]["code"] == "NonHermitianInput");

    CHECK(run_cli("frobnicate --input x.json").exit_code == 2);

    // missing V where required
    CHECK(run_cli("defect --input " + data_file("quadric_n1.json") + " --b0 1")
              .exit_code == 2);
}

TEST_CASE("mathematical failures exit with code 1") {
    const CliResult result =
        run_cli("check --input " + data_file("quadric_rank_deficient.json"));
    CHECK(result.exit_code == 1);
    const json report = json::parse(result.output);
    CHECK(report["error"]["code"] == "NoDirectionFound");

    const CliResult diverged = run_cli(
        "solve-x --input " + data_file("quadric_n1.json") + " --a 0.45 --b0 1");
    CHECK(diverged.exit_code == 1);
}

TEST_CASE("scan traverses grids deterministically") {
    const std::string args =
        "scan --input " + data_file("quadric_levi_pair.json") +
        " --b0 1,0 --V 1,0;1,0 --grid V:1:re:-1:1:5 --grid V:2:re:-1:1:5";
    const CliResult result = run_cli(args);
    REQUIRE(result.exit_code == 0);
    const json report = json::parse(result.output);
    const json& summary = report["results"]["summary"];
    CHECK(summary["points"] == 25);
    CHECK(summary["solved"] == 25);
    // minimal iff both real components are nonzero: 4 x 4 of 25
    CHECK(summary["nondefective"] == 16);
    CHECK(summary["jet_diffeomorphism_points"] == 16);
    CHECK(summary["necessity_violations"] == 0);

    const CliResult again = run_cli(args);
    CHECK(again.exit_code == 0);
    CHECK(again.output == result.output);
}

TEST_CASE("scan with no axes is empty") {
    const CliResult result = run_cli(
        "scan --input " + data_file("quadric_n1.json") + " --b0 1 --V 1");
    REQUIRE(result.exit_code == 0);
    const json report = json::parse(result.output);
    CHECK(report["results"]["summary"]["points"] == 0);
}

TEST_CASE("--output writes the same bytes as stdout") {
    const std::string out_path = "/tmp/statdisc_test_report.json";
    std::remove(out_path.c_str());
    const std::string base =
        "jet --input " + data_file("quadric_n1.json") + " --a 0.1 --V 1 --b0 1";
    const CliResult direct = run_cli(base);
    REQUIRE(direct.exit_code == 0);
    const CliResult redirected = run_cli(base + " --output " + out_path);
    REQUIRE(redirected.exit_code == 0);
    CHECK(redirected.output.empty());
    std::ifstream in(out_path);
    const std::string written((std::istreambuf_iterator<char>(in)),
                              std::istreambuf_iterator<char>());
    CHECK(written == direct.output);
}

TEST_CASE("reports are byte-identical across repeated runs") {
    const std::vector<std::string> invocations = {
        "check --input " + data_file("quadric_n1.json"),
        "check --input " + data_file("quadric_pauli.json") + " --seed 7",
        "minimal --input " + data_file("quadric_levi_pair.json") +
            " --a 0.1,0;0,0 --b0 1,0 --V 1,0;1,0",
        "defect --input " + data_file("quadric_levi_pair.json") +
            " --a 0.1,0;0,0 --b0 1,0 --V 1,0;0,0",
        "disc --input " + data_file("quadric_n1.json") +
            " --a 0.1 --V 1 --b0 1 --samples 32 --fourier",
    };
    for (const std::string& args : invocations) {
        const CliResult first = run_cli(args);
        const CliResult second = run_cli(args);
        REQUIRE(first.exit_code == 0);
        CHECK(second.exit_code == first.exit_code);
        CHECK(second.output == first.output);
    }
}
