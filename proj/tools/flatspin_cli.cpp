#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "flatspin/analysis.hpp"
#include "flatspin/constructions.hpp"
#include "flatspin/defining_matrix.hpp"

namespace {

// exit codes: 0 success / verification pass, 1 verification failure,
// 2 usage or parse error
constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

int run_analyze(const std::string& path, bool json, bool covers) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << path << ": cannot open file\n";
        return kExitUsage;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    flatspin::DefiningMatrix A(0, 0);
    try {
        A = flatspin::parse_matrix(buf.str());
    } catch (const flatspin::MatrixParseError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kExitUsage;
    }

    flatspin::AnalysisOptions options;
    options.with_covers = covers;
    const auto report = flatspin::analyze(A, options);
    if (json)
        std::cout << flatspin::report_json(report) << "\n";
    else
        std::cout << flatspin::report_text(report);
    return kExitOk;
}

int run_construct(std::size_t d, const std::string& stage_name) {
    const auto stage = flatspin::stage_from_name(stage_name);
    if (!stage) {
        std::cerr << "unknown stage '" << stage_name << "'\n";
        return kExitUsage;
    }
    std::cout << flatspin::format_matrix(flatspin::build_stage(*stage, d));
    return kExitOk;
}

int run_verify(std::size_t d_lo, std::size_t d_hi, bool json) {
    std::vector<flatspin::VerifyResult> results;
    bool all = true;
    for (std::size_t d = d_lo; d <= d_hi; ++d) {
        results.push_back(flatspin::verify_family_member(d));
        all = all && results.back().pass;
        if (!json) std::cout << flatspin::verify_result_text(results.back()) << "\n";
    }
    if (json) {
        std::cout << flatspin::verify_results_json(results) << "\n";
    } else if (all) {
        std::cout << "verified " << results.size() << " rank" << (results.size() == 1 ? "" : "s")
                  << "\n";
    }
    return all ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flat manifolds of diagonal type: freeness, orientability, spin and "
                 "Stiefel-Whitney classes over F2"};
    app.require_subcommand(1);

    std::string path;
    bool json = false, covers = false;
    auto* analyze = app.add_subcommand("analyze", "analyze a defining-matrix file");
    analyze->add_option("path", path, "matrix file")->required();
    analyze->add_flag("--json", json, "JSON report");
    analyze->add_flag("--covers", covers, "include the proper-subgroup cover sweep");

    std::size_t cd = 0;
    std::string stage = "F";
    auto* construct = app.add_subcommand("construct", "emit a family matrix on standard output");
    construct->add_option("-d", cd, "holonomy rank (>= 2)")->required()->check(CLI::Range(std::size_t{2}, std::size_t{24}));
    construct->add_option("--stage", stage, "one of A0, A1, A, B, C, E, F (default F)")
        ->check(CLI::IsMember({"A0", "A1", "A", "B", "C", "E", "F"}));

    std::size_t vd = 0, max_d = 0;
    auto* verify = app.add_subcommand("verify", "verify the minimal non-spin family");
    auto* vd_opt = verify->add_option("-d", vd, "single rank")->check(CLI::Range(std::size_t{2}, std::size_t{16}));
    auto* max_opt =
        verify->add_option("--max-d", max_d, "all ranks 2..D")->check(CLI::Range(std::size_t{2}, std::size_t{16}));
    verify->add_flag("--json", json, "JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze->parsed()) return run_analyze(path, json, covers);
        if (construct->parsed()) return run_construct(cd, stage);
        if (verify->parsed()) {
            const bool has_d = vd_opt->count() > 0;
            const bool has_max = max_opt->count() > 0;
            if (has_d == has_max) {
                std::cerr << "verify requires exactly one of -d or --max-d\n";
                return kExitUsage;
            }
            return has_d ? run_verify(vd, vd, json) : run_verify(2, max_d, json);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
