// Command-line front end: generate, verify, shift, mirror, plan and oracle
// subcommands over CSV/JSON grid files.
//
// Exit codes: 0 success, 1 usage or parse error, 2 requested object does not
// exist (infeasible size / no witness), 3 verification failure.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sma/checker.hpp"
#include "sma/composer.hpp"
#include "sma/grid_io.hpp"
#include "sma/heffter.hpp"
#include "sma/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNonexistent = 2;
constexpr int kExitVerification = 3;

void emit(const sma::SignedArray& a, const std::string& format, const std::string& out_path) {
    const std::string text = format == "json" ? sma::to_json(a) + "\n" : sma::to_csv(a);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        sma::write_file(out_path, text);
    }
}

void print_report(const sma::VerificationReport& report) {
    auto index = [](std::size_t i) { return i == 0 ? std::string("-") : std::to_string(i); };
    for (const auto& v : report.violations) {
        std::cout << v.kind << " row=" << index(v.row) << " col=" << index(v.col) << " "
                  << v.detail << "\n";
    }
}

int run_verify(const std::string& in_path, const std::string& check) {
    const sma::SignedArray a = sma::load_grid_file(in_path, /*allow_zero=*/true);
    sma::VerificationReport report;
    if (check == "sma" || check == "all") report.merge(sma::verify_sma(a));
    if (check == "same-row" || check == "all") report.merge(sma::verify_same_row_pairs(a));
    if (check == "shiftable" || check == "all") {
        if (a.zero_free()) {
            report.merge(sma::verify_shiftable(a));
        } else {
            report.is_shiftable = false;
            report.violations.push_back(
                {"zero-entry", 0, 0, "array has zero entries; sign balance is undefined"});
        }
    }
    if (check == "heffter") report.merge(sma::verify_heffter(a));
    if (report.passed()) {
        std::cout << "PASS\n";
        return kExitOk;
    }
    print_report(report);
    return kExitVerification;
}

int run_oracle(long long rows, long long cols, bool same_row, bool cols_given) {
    const sma::SearchOutcome outcome =
        cols_given ? sma::search_tiny(rows, cols, same_row) : sma::search_n2(rows);
    std::cout << (outcome.found ? "found" : "not found") << "\n";
    std::cout << "nodes=" << outcome.nodes_explored << "\n";
    if (outcome.witness) std::cout << sma::to_csv(*outcome.witness);
    return outcome.found ? kExitOk : kExitNonexistent;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed magic array construction and verification toolkit"};
    app.require_subcommand(1);

    long long rows = 0, cols = 0, shift_by = 0;
    std::string format = "csv", out_path, in_path, check = "all";
    bool same_row = false;

    auto* generate = app.add_subcommand("generate", "build an array for the requested size");
    generate->add_option("--rows", rows, "row count m")->required();
    generate->add_option("--cols", cols, "column count n (even)")->required();
    generate->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    generate->add_option("--out", out_path, "output file (default: stdout)");

    auto* verify = app.add_subcommand("verify", "check a grid file against the predicates");
    verify->add_option("--in", in_path, "grid file (CSV or JSON)")->required();
    verify->add_option("--check", check, "which predicate set to check")
        ->check(CLI::IsMember({"sma", "same-row", "shiftable", "heffter", "all"}));

    auto* shift_cmd = app.add_subcommand("shift", "increase every entry magnitude by k");
    shift_cmd->add_option("--in", in_path, "grid file")->required();
    shift_cmd->add_option("--by", shift_by, "non-negative shift amount")->required();
    shift_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    shift_cmd->add_option("--out", out_path, "output file (default: stdout)");

    auto* mirror = app.add_subcommand("mirror", "concatenate a grid with its negation");
    mirror->add_option("--in", in_path, "grid file")->required();
    mirror->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    mirror->add_option("--out", out_path, "output file (default: stdout)");

    auto* plan = app.add_subcommand("plan", "show the construction route for a size");
    plan->add_option("--rows", rows, "row count m")->required();
    plan->add_option("--cols", cols, "column count n (even)")->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force search at desk scale");
    oracle->add_option("--rows", rows, "row count m")->required();
    auto* cols_opt = oracle->add_option("--cols", cols, "column count n (12-cell budget)");
    oracle->add_flag("--same-row", same_row, "require ±x in the same row");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (generate->parsed()) {
            emit(sma::generate(rows, cols), format, out_path);
            return kExitOk;
        }
        if (verify->parsed()) return run_verify(in_path, check);
        if (shift_cmd->parsed()) {
            emit(sma::shift(sma::load_grid_file(in_path, /*allow_zero=*/false), shift_by),
                 format, out_path);
            return kExitOk;
        }
        if (mirror->parsed()) {
            const sma::SignedArray h = sma::load_grid_file(in_path, /*allow_zero=*/false);
            const sma::VerificationReport ready = sma::verify_mirror_ready(h);
            if (!ready.passed()) {
                print_report(ready);
                return kExitVerification;
            }
            emit(sma::mirror_concat(h), format, out_path);
            return kExitOk;
        }
        if (plan->parsed()) {
            const sma::ConstructionPlan p = sma::plan(rows, cols);
            if (p.route == sma::Route::NONEXISTENT) {
                std::cout << "NONEXISTENT: " << p.reason << "\n";
            } else {
                std::cout << sma::route_name(p.route);
                if (p.shift_amount > 0) std::cout << " shift=" << p.shift_amount;
                std::cout << "\n";
            }
            return kExitOk;
        }
        if (oracle->parsed()) return run_oracle(rows, cols, same_row, cols_opt->count() > 0);
    } catch (const sma::NonexistentError& e) {
        std::cerr << e.what() << "\n";
        return kExitNonexistent;
    } catch (const sma::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
