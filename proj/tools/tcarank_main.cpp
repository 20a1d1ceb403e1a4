#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "tcarank/cli.hpp"
#include "tcarank/errors.hpp"

namespace {

using namespace tcarank;

int run(int argc, char** argv) {
    CLI::App app{"Taxicab correspondence analysis of nega-coded rank data"};
    app.require_subcommand(1);

    InputSpec input;
    std::string format = "orderings";
    std::string method = "auto";
    int exact_limit = 22;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-i,--input", input.path, "rank data file")->required();
        cmd->add_option("--format", format, "input format")
            ->check(CLI::IsMember({"orderings", "ranks"}));
        cmd->add_option("--top-k", input.top_k, "collapse to the first k choices")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--method", method, "factor search")
            ->check(CLI::IsMember({"auto", "exact", "crisscross"}));
        cmd->add_option("--exact-limit", exact_limit, "max dimension for enumeration")
            ->check(CLI::Range(1, 62));
    };

    AnalyzeOptions analyze;
    auto* cmd_analyze_app = app.add_subcommand("analyze", "peel into homogeneous groups");
    add_common(cmd_analyze_app);
    cmd_analyze_app->add_option("--outlier-threshold", analyze.peel.outlier_threshold,
                                "removed sets below this fraction are outliers")
        ->check(CLI::Range(0.0, 0.999999));
    cmd_analyze_app->add_option("--max-depth", analyze.peel.max_depth, "peeling depth limit")
        ->check(CLI::PositiveNumber);
    cmd_analyze_app->add_option("--axes", analyze.peel.axes_per_group, "axes per group")
        ->check(CLI::PositiveNumber);
    cmd_analyze_app->add_option("--out-dir", analyze.out_dir, "output directory");
    cmd_analyze_app->add_option("--seed", analyze.seed, "seed echoed into the report");

    auto* cmd_ghc_app = app.add_subcommand("ghc", "global homogeneity coefficient");
    add_common(cmd_ghc_app);

    int k = 3;
    std::string decompose_out_dir = ".";
    auto* cmd_decompose_app = app.add_subcommand("decompose", "dispersions and factor scores");
    add_common(cmd_decompose_app);
    cmd_decompose_app->add_option("-k,--axes", k, "number of factors")->check(CLI::PositiveNumber);
    cmd_decompose_app->add_option("--out-dir", decompose_out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    input.format = format == "ranks" ? InputSpec::Format::Ranks : InputSpec::Format::Orderings;
    TsvdOptions tsvd;
    tsvd.exact_limit = exact_limit;
    if (method == "exact")
        tsvd.method = SolveMethod::Exact;
    else if (method == "crisscross")
        tsvd.method = SolveMethod::CrissCross;

    try {
        if (cmd_analyze_app->parsed()) {
            analyze.input = input;
            analyze.peel.tsvd = tsvd;
            return cmd_analyze(analyze, std::cout, std::cerr);
        }
        if (cmd_ghc_app->parsed())
            return cmd_ghc(input, tsvd, std::cout, std::cerr);
        return cmd_decompose(input, k, tsvd, decompose_out_dir, std::cout, std::cerr);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_code::parse_error;
    } catch (const NotHomogeneousError& e) {
        std::cerr << e.what() << "\n";
        return exit_code::not_homogeneous;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code::io_error;
    }
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
