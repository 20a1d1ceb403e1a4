#include "tcarank/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <map>

#include "tcarank/errors.hpp"
#include "tcarank/io.hpp"
#include "tcarank/svg.hpp"

namespace tcarank {

namespace {

namespace fs = std::filesystem;

std::string format_num(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

std::string format_g(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", value);
    return buf;
}

std::string method_name(SolveMethod method) {
    switch (method) {
    case SolveMethod::Exact: return "exact";
    case SolveMethod::CrissCross: return "crisscross";
    default: return "auto";
    }
}

std::string partition_string(const NegaAnalysis& analysis, const ItemPartition& partition) {
    const auto& items = analysis.source.base.items();
    const auto block = [&](const std::vector<int>& indices) {
        std::string out = "{";
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (i) out += ',';
            out += items.label(indices[i]);
        }
        return out + "}";
    };
    std::string out = block(partition.plus);
    if (!partition.zero.empty()) out += " > " + block(partition.zero);
    out += " > " + block(partition.minus);
    return out;
}

// name,kind,axis,score rows for one analysis.
std::string scores_csv(const RankDataset& data, const std::vector<FactorScores>& axes) {
    std::string csv = "name,kind,axis,score\n";
    const int n = data.pattern_count();
    for (int i = 0; i < n; ++i)
        for (const auto& axis : axes)
            csv += data.pattern(i).label + ",row," + std::to_string(axis.axis) + "," +
                   format_g(axis.f(i)) + "\n";
    for (int j = 0; j < data.item_count(); ++j)
        for (const auto& axis : axes)
            csv += data.items().label(j) + ",item," + std::to_string(axis.axis) + "," +
                   format_g(axis.g(j)) + "\n";
    for (const auto& axis : axes)
        csv += "NEGA,nega," + std::to_string(axis.axis) + "," + format_g(axis.f(n)) + "\n";
    return csv;
}

void write_biplots(const NegaAnalysis& analysis, const std::string& stem,
                   const std::string& out_dir) {
    std::vector<std::pair<int, int>> pairs;
    if (analysis.axis_count() >= 2) pairs.emplace_back(1, 2);
    if (analysis.axis_count() >= 3) pairs.emplace_back(2, 3);
    for (const auto& [x, y] : pairs) {
        const auto points = biplot_coordinates(analysis, x, y);
        const auto caption = [&](int axis) {
            return "axis " + std::to_string(axis) +
                   " (lambda=" + format_num(analysis.axes[axis - 1].lambda, 4) + ")";
        };
        const std::string name = stem + "_" + std::to_string(x) + "x" + std::to_string(y) + ".svg";
        write_file_atomic((fs::path(out_dir) / name).string(),
                          emit_svg(points, caption(x), caption(y)));
    }
}

} // namespace

RankDataset load_dataset(const InputSpec& input) {
    const std::string text = read_file(input.path);
    RankDataset ds = input.format == InputSpec::Format::Ranks ? parse_ranks(text)
                                                              : parse_orderings(text);
    if (input.top_k > 0) ds = collapse_to_partial(ds, input.top_k);
    return ds;
}

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err) {
    RankDataset ds = load_dataset(options.input);
    const MixtureTree tree = peel(ds, options.peel);

    ReportConfig config;
    config.input_path = options.input.path;
    config.format = options.input.format == InputSpec::Format::Ranks ? "ranks" : "orderings";
    config.top_k = options.input.top_k;
    config.outlier_threshold = options.peel.outlier_threshold;
    config.max_depth = options.peel.max_depth;
    config.axes = options.peel.axes_per_group;
    config.method = method_name(options.peel.tsvd.method);
    config.exact_limit = options.peel.tsvd.exact_limit;
    config.seed = options.seed;

    const ReportDocument doc = build_report(tree, config);
    fs::create_directories(options.out_dir);
    write_file_atomic((fs::path(options.out_dir) / "report.json").string(),
                      to_json(doc).dump(2) + "\n");

    // assignments.csv: every original pattern with its 1-based leaf id.
    {
        std::string csv = "pattern,group,weight\n";
        const auto assignment = flatten(tree);
        for (int i = 0; i < ds.pattern_count(); ++i)
            csv += assignment[i].first + "," + std::to_string(assignment[i].second + 1) + "," +
                   format_g(ds.pattern(i).weight) + "\n";
        write_file_atomic((fs::path(options.out_dir) / "assignments.csv").string(), csv);
    }

    for (std::size_t ordinal = 0; ordinal < tree.leaves().size(); ++ordinal) {
        const int node_id = tree.leaves()[ordinal];
        const std::string group_name = "group" + std::to_string(ordinal + 1);
        out << "[" << group_name << "] " << group_report(tree, node_id);
        if (const auto* group = std::get_if<GroupNode>(&tree.node(node_id))) {
            write_file_atomic((fs::path(options.out_dir) / ("scores_" + group_name + ".csv")).string(),
                              scores_csv(group->data, group->axes));
            NegaAnalysis analysis =
                analyze_nega(group->data, options.peel.axes_per_group, options.peel.tsvd);
            write_biplots(analysis, "biplot_" + group_name, options.out_dir);
        }
    }
    err.flush();
    return exit_code::ok;
}

int cmd_ghc(const InputSpec& input, const TsvdOptions& tsvd, std::ostream& out,
            std::ostream& err) {
    RankDataset ds = merge_identical_patterns(load_dataset(input));
    NegaAnalysis analysis = analyze_nega(ds, 1, tsvd);
    const ScenarioResult scenario = classify_scenario(analysis);
    if (scenario.kind == Scenario::Scen2) {
        out << "not globally homogeneous: " << scenario.v1_indices.size()
            << " patterns share the nega sign ("
            << format_num(100.0 * scenario.v1_weight_fraction, 2) << "% of weight)\n";
        for (int i : scenario.v1_indices) out << "  " << ds.pattern(i).label << "\n";
        if (!scenario.boundary_indices.empty()) {
            out << "zero first-axis score (boundary) patterns:\n";
            for (int i : scenario.boundary_indices) out << "  " << ds.pattern(i).label << "\n";
        }
        err.flush();
        return exit_code::not_homogeneous;
    }
    const HomogeneityReport report = homogeneity_report(analysis);
    out << "lambda1 " << format_num(report.lambda1, 6) << "\n";
    out << "U(" << ds.item_count() << ") " << format_num(report.u_d, 6) << "\n";
    out << "GHC " << format_num(report.ghc_percent, 2) << "\n";
    out << "partition " << partition_string(analysis, report.partition)
        << (report.faithful_partition ? " (faithful)" : " (not faithful)") << "\n";
    out << "faithful_voters " << report.faithful_voters.size() << " of " << ds.pattern_count()
        << "\n";
    std::map<int, double> histogram;
    for (int i = 0; i < ds.pattern_count(); ++i)
        histogram[report.crossings[i]] += ds.pattern(i).weight;
    out << "crossings";
    for (const auto& [crossings, weight] : histogram)
        out << " " << crossings << ":" << format_g(weight);
    out << "\n";
    return exit_code::ok;
}

int cmd_decompose(const InputSpec& input, int k, const TsvdOptions& tsvd,
                  const std::string& out_dir, std::ostream& out, std::ostream& err) {
    if (k < 1)
        throw std::invalid_argument("k must be at least 1");
    RankDataset ds = load_dataset(input);
    NegaAnalysis analysis = analyze_nega(ds, k, tsvd);
    out << "lambdas";
    for (const auto& axis : analysis.axes) out << " " << format_num(axis.lambda, 4);
    out << "\n";
    fs::create_directories(out_dir);
    write_file_atomic((fs::path(out_dir) / "scores.csv").string(),
                      scores_csv(ds, analysis.axes));
    err.flush();
    return exit_code::ok;
}

} // namespace tcarank
