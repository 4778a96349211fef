// End-to-end tests that drive the installed CLI binary through a shell,
// parse its machine output, and check the documented exit codes.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(THETA_AGM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    CliResult r;
    r.output = out;
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("constants emits a stable JSON object and exits 0") {
    const CliResult r = run_cli("--format json constants");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    REQUIRE(doc.contains("gauss_constant"));
    CHECK(std::abs(doc["gauss_constant"].get<double>() - 0.834627) < 5e-6);
    CHECK(std::abs(doc["landau_plus"].get<double>() - 0.543259) < 5e-6);
    CHECK(std::abs(doc["lemniscate_two_varpi"].get<double>() - 5.24412) < 5e-6);
    CHECK(std::abs(doc["strohmer_c3"].get<double>() - 0.387438) < 5e-6);
    CHECK(std::abs(doc["strohmer_c4"].get<double>() - 0.456947) < 5e-6);
    CHECK(doc["all_ok"].get<bool>());
    CHECK(doc["gauss_constant_residual"].get<double>() < 1e-9);
}

TEST_CASE("constants plain format prints one constant per line") {
    const CliResult r = run_cli("constants");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    CHECK(lines.size() >= 8); // header + seven constants
    CHECK(r.output.find("gauss_constant") != std::string::npos);
    CHECK(r.output.find("kappa_hexagonal_density2") != std::string::npos);
}

TEST_CASE("agm subcommand") {
    const CliResult r = run_cli("--format json agm 2 1.4142135623730951 1");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(std::abs(doc["limit"].get<double>() - 1.1981402347355922) < 1e-9);

    const CliResult fixed = run_cli("--format json agm 3 2.5 2.5");
    REQUIRE(fixed.exit_code == 0);
    const auto fdoc = nlohmann::json::parse(fixed.output);
    CHECK(fdoc["iterations"].get<int>() == 0);
    CHECK(fdoc["limit"].get<double>() == 2.5);

    const CliResult cubic = run_cli("--format json agm 3 1.2599210498948732 1");
    const auto cdoc = nlohmann::json::parse(cubic.output);
    CHECK(std::abs(cdoc["limit"].get<double>() - 1.0865179306859534) < 1e-9);
}

TEST_CASE("agm trace in CSV has the documented header") {
    const CliResult r = run_cli("--format csv agm 2 2 1 --trace");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(!lines.empty());
    CHECK(lines[0] == "n,a,b,c,gap");
    CHECK(lines.size() >= 4); // a few iterations from (2, 1)
}

TEST_CASE("bounds closed form") {
    const CliResult r = run_cli("--format json bounds square 2");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(std::abs(doc["lower_A"].get<double>() - 0.834627) < 5e-6);
    CHECK(std::abs(doc["upper_B"].get<double>() - 1.180340) < 5e-6);

    const CliResult hex = run_cli("--format json bounds hex 2");
    const auto hdoc = nlohmann::json::parse(hex.output);
    CHECK(std::abs(hdoc["lower_A"].get<double>() - 0.920371) < 5e-6);
}

TEST_CASE("odd density is a usage error with exit code 2") {
    CHECK(run_cli("bounds square 3").exit_code == 2);
    CHECK(run_cli("bounds square 3 --method numeric").exit_code == 2);
}

TEST_CASE("bounds numeric reports the extremizer") {
    const CliResult r = run_cli("--format json bounds square 2 --method numeric");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["method"].get<std::string>() == "numeric");
    CHECK(std::abs(doc["lower_A"].get<double>() - 0.8346268416740732) < 1e-6);
    REQUIRE(doc.contains("minimizer_x"));
    const double mx = doc["minimizer_x"].get<double>();
    const double my = doc["minimizer_y"].get<double>();
    const double hole = 0.5 / std::sqrt(2.0);
    CHECK(std::abs(mx - hole) < 1e-5);
    CHECK(std::abs(my - hole) < 1e-5);
}

TEST_CASE("kappa-seq CSV output") {
    const CliResult r = run_cli("--format csv kappa-seq square 3");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "density,kappa,kappa_minus_one");
    // second rung: kappa(4) = (2^{-1/4} + 2^{1/4})/2
    std::istringstream row(lines[2]);
    std::string field;
    std::getline(row, field, ',');
    CHECK(field == "4");
    std::getline(row, field, ',');
    CHECK(std::abs(std::stod(field) - 1.015052) < 5e-6);
}

TEST_CASE("verify suites pass on a healthy build") {
    CHECK(run_cli("verify --suite agm").exit_code == 0);
    CHECK(run_cli("verify --suite theta").exit_code == 0);
    const CliResult all = run_cli("--format json verify --suite all");
    REQUIRE(all.exit_code == 0);
    const auto doc = nlohmann::json::parse(all.output);
    CHECK(doc.is_array());
    CHECK(doc.size() >= 25);
    for (const auto& row : doc) CHECK(row["status"].get<std::string>() == "pass");
    CHECK(run_cli("verify --suite nonsense").exit_code == 2);
}

TEST_CASE("roots subcommand on named systems") {
    const CliResult r = run_cli("--format json roots A2");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["count"].get<int>() == 6);
    CHECK(doc["axiom_i_spans"].get<bool>());
    CHECK(doc["axiom_ii_negation_scaling"].get<bool>());
    CHECK(doc["axiom_iii_reflections"].get<bool>());
    CHECK(doc["axiom_iv_integrality"].get<bool>());
    CHECK(doc["contained_in_host_lattice"].get<bool>());

    const CliResult g2 = run_cli("--format json roots G2");
    const auto gdoc = nlohmann::json::parse(g2.output);
    CHECK(gdoc["count"].get<int>() == 12);
    CHECK(gdoc["all_pass"].get<bool>());

    CHECK(run_cli("roots XYZ").exit_code == 2);
}

TEST_CASE("roots --check flags the violated axiom") {
    const std::string path = "/tmp/theta_agm_cli_roots_test.json";
    {
        std::ofstream out(path);
        out << "[[1.0, 0.0]]";
    }
    const CliResult r = run_cli("--format json roots --check " + path);
    CHECK(r.exit_code == 1);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK_FALSE(doc["axiom_ii_negation_scaling"].get<bool>());
    CHECK_FALSE(doc["all_pass"].get<bool>());
    std::remove(path.c_str());

    CHECK(run_cli("roots --check /tmp/does_not_exist_theta_agm.json").exit_code == 2);
}

TEST_CASE("precision flag shapes plain output") {
    const CliResult r = run_cli("--precision 4 theta 0.1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("1.136") != std::string::npos);

    const CliResult rj = run_cli("--format json theta 0.1");
    const auto doc = nlohmann::json::parse(rj.output);
    CHECK(std::abs(doc["theta2"].get<double>() - 1.1359306015682802) < 1e-12);
    CHECK(run_cli("--precision 99 theta 0.1").exit_code == 2);
}

TEST_CASE("nome domain errors exit with code 2") {
    CHECK(run_cli("theta 1.5").exit_code == 2);
    CHECK(run_cli("cubic 0").exit_code == 2);
    CHECK(run_cli("definitely-not-a-command").exit_code == 2);
}

TEST_CASE("THETA_AGM_TOL environment variable tightens the verify suite") {
    // an absurdly small tolerance must turn residuals into failures
    const std::string cmd = std::string("THETA_AGM_TOL=1e-30 ") + THETA_AGM_CLI_PATH +
                            " verify --suite theta >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 1);
    // and an explicit --tol flag wins over the environment
    const std::string cmd2 = std::string("THETA_AGM_TOL=1e-30 ") + THETA_AGM_CLI_PATH +
                             " verify --suite theta --tol 1e-9 >/dev/null 2>&1";
    const int status2 = std::system(cmd2.c_str());
    REQUIRE(WIFEXITED(status2));
    CHECK(WEXITSTATUS(status2) == 0);
}

} // TEST_SUITE
