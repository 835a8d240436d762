#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "sma/fixtures.hpp"
#include "sma/grid_io.hpp"

// End-to-end checks of the command-line binary: exit codes (0 success,
// 1 usage/parse, 2 nonexistent, 3 verification failure) and output formats
// are a stable contract.

namespace {

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    const std::string out_file = "cli_test_stdout.txt";
    const std::string command =
        std::string(SMA_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    const int status = std::system(command.c_str());
    std::ifstream in(out_file);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::remove(out_file.c_str());
    const int exit_code = status == -1 ? -1 : WEXITSTATUS(status);
    return {exit_code, buffer.str()};
}

std::string fixture(const std::string& name) {
    return sma::fixtures_dir() + "/" + name + ".csv";
}

}  // namespace

TEST_CASE("generate emits the recorded grid and honours exit codes") {
    const auto ok = run_cli("generate --rows 3 --cols 12");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == sma::to_csv(sma::fixtures::appendix1_sma_3_12()));

    const auto nonexistent = run_cli("generate --rows 5 --cols 2");
    CHECK(nonexistent.exit_code == 2);
    CHECK(nonexistent.output.find("NONEXISTENT") != std::string::npos);

    CHECK(run_cli("generate --rows 3 --cols 3").exit_code == 1);   // odd width
    CHECK(run_cli("generate --rows 3").exit_code == 1);            // missing flag
}

TEST_CASE("generate writes files and supports JSON") {
    const std::string out = "cli_generated.json";
    const auto result = run_cli("generate --rows 4 --cols 4 --format json --out " + out);
    CHECK(result.exit_code == 0);
    CHECK(sma::load_grid_file(out) == sma::fixtures::fig2_ssma_4_4());
    std::remove(out.c_str());
}

TEST_CASE("verify distinguishes pass, failure and parse errors") {
    CHECK(run_cli("verify --in " + fixture("fig4-ssma-6-10") + " --check all").exit_code == 0);
    CHECK(run_cli("verify --in " + fixture("fig1-sma-3-2") + " --check shiftable").exit_code == 3);
    CHECK(run_cli("verify --in " + fixture("fig5-heffter-5-3") + " --check heffter").exit_code == 0);
    CHECK(run_cli("verify --in no-such-file.csv").exit_code == 1);

    const auto report = run_cli("verify --in " + fixture("fig1-sma-3-2") + " --check shiftable");
    CHECK(report.output.find("balance") != std::string::npos);
}

TEST_CASE("shift applies the magnitude increase") {
    const auto result = run_cli("shift --in " + fixture("fig2-ssma-6-4") + " --by 18");
    CHECK(result.exit_code == 0);
    const sma::SignedArray shifted = sma::parse_csv(result.output);
    CHECK(shifted(0, 0) == 20);
    CHECK(run_cli("shift --in " + fixture("fig2-ssma-6-4") + " --by -1").exit_code == 1);

    const std::string zeros = "cli_zero_grid.csv";
    sma::write_file(zeros, "1,0\n-1,0\n");
    CHECK(run_cli("shift --in " + zeros + " --by 2").exit_code == 1);  // zero entries
    std::remove(zeros.c_str());
}

TEST_CASE("mirror reproduces the recorded wide grid from its half") {
    const auto result = run_cli("mirror --in " + fixture("fig6-left-5-4"));
    CHECK(result.exit_code == 0);
    CHECK(result.output == sma::to_csv(sma::fixtures::fig6_sma_5_8()));

    const std::string bad = "cli_bad_mirror.csv";
    sma::write_file(bad, "1,-3\n2,-4\n");  // column sums 3 and -7
    CHECK(run_cli("mirror --in " + bad).exit_code == 3);
    std::remove(bad.c_str());
}

TEST_CASE("plan prints the route and shift amount") {
    const auto stacked = run_cli("plan --rows 11 --cols 8");
    CHECK(stacked.exit_code == 0);
    CHECK(stacked.output == "STACK_3_PLUS_EVEN shift=12\n");
    const auto missing = run_cli("plan --rows 6 --cols 2");
    CHECK(missing.exit_code == 0);
    CHECK(missing.output.find("NONEXISTENT") == 0);
}

TEST_CASE("oracle reports found and not-found searches") {
    const auto found = run_cli("oracle --rows 7");
    CHECK(found.exit_code == 0);
    CHECK(found.output.find("found") == 0);

    const auto missing = run_cli("oracle --rows 6");
    CHECK(missing.exit_code == 2);
    CHECK(missing.output.find("not found") == 0);

    const auto tiny = run_cli("oracle --rows 2 --cols 4 --same-row");
    CHECK(tiny.exit_code == 2);
    const auto tiny_free = run_cli("oracle --rows 2 --cols 4");
    CHECK(tiny_free.exit_code == 0);
    CHECK(run_cli("oracle --rows 4 --cols 4").exit_code == 1);  // cell budget
}
