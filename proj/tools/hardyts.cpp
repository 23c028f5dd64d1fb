#include <CLI11.hpp>
#include <iostream>

#include "hardy/casefile.hpp"
#include "hardy/cli.hpp"
#include "hardy/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Numerical checks of Hardy-type inequalities on time scales"};
    app.require_subcommand(1);

    std::string case_file;
    bool json = false;
    auto* verify = app.add_subcommand("verify", "evaluate the cases of a case file");
    verify->add_option("case-file", case_file, "case file")->required();
    verify->add_flag("--json", json, "emit JSON reports");

    std::string suite_name, out_path;
    std::uint64_t seed = 1;
    auto* suite = app.add_subcommand("suite", "run a generated suite and write CSV");
    suite->add_option("name", suite_name, "calculus, theorems, reductions, oracle or sharpness")->required();
    suite->add_option("--seed", seed, "random seed");
    suite->add_option("--out", out_path, "CSV output path (default stdout)");

    std::string family_file, trace_path;
    auto* sharp = app.add_subcommand("sharpness", "maximize lhs/rhs over a one-parameter family");
    sharp->add_option("family-file", family_file, "family file")->required();
    sharp->add_option("--out", trace_path, "trace CSV output path (default stdout)");

    auto* selftest = app.add_subcommand("selftest", "run the calculus identity checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    double factor = 1.0;
    try {
        factor = hardy::horizon_scale_from_env();
    } catch (const hardy::Error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
    try {
        if (*verify) return hardy::run_case(case_file, std::cout, std::cerr, json, factor);
        if (*suite) return hardy::run_suite_command(suite_name, seed, out_path, std::cout, std::cerr, factor);
        if (*sharp) return hardy::run_sharpness(family_file, trace_path, std::cout, std::cerr, factor);
        if (*selftest) return hardy::run_selftest(std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
