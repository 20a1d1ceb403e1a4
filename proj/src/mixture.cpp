#include "tcarank/mixture.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tcarank {

namespace {

double weight_of(const RankDataset& ds, const std::vector<int>& indices) {
    double w = 0.0;
    for (int i : indices) w += ds.pattern(i).weight;
    return w;
}

struct Peeler {
    const RankDataset& original;
    const PeelConfig& config;
    double total_weight;
    std::vector<MixtureNode> nodes;

    int emit(MixtureNode node) {
        nodes.push_back(std::move(node));
        return static_cast<int>(nodes.size()) - 1;
    }

    int emit_outlier(std::vector<int> indices, bool degenerate) {
        std::sort(indices.begin(), indices.end());
        const double fraction = weight_of(original, indices) / total_weight;
        RankDataset data = merge_identical_patterns(original.subset(indices));
        return emit(OutlierNode{std::move(indices), fraction, std::move(data), degenerate});
    }

    int run(std::vector<int> indices, int depth) {
        std::vector<std::vector<int>> row_members;
        RankDataset merged =
            merge_identical_patterns(original.subset(indices), &row_members);
        if (depth > config.max_depth ||
            merged.pattern_count() < config.min_group_patterns)
            return emit_outlier(std::move(indices), true);

        NegaAnalysis analysis =
            analyze_nega(merged, config.axes_per_group, config.tsvd);
        const ScenarioResult scenario = classify_scenario(analysis);
        const double fraction = weight_of(original, indices) / total_weight;

        if (scenario.kind == Scenario::Scen1) {
            if (merged.pattern_count() == 1 && fraction < config.outlier_threshold)
                return emit_outlier(std::move(indices), false);
            GroupNode node{std::move(indices), fraction, merged,
                           homogeneity_report(analysis), {}, analysis.axes};
            std::sort(node.pattern_indices.begin(), node.pattern_indices.end());
            for (const auto& factor : analysis.decomposition.factors)
                node.lambdas.push_back(factor.lambda);
            return emit(std::move(node));
        }

        // Scenario 2. The strictly negative voters are removed; boundary
        // (zero-score) voters follow them only when the removed set is
        // group-scale, i.e. not below the outlier threshold.
        const double strict_weight = [&] {
            double w = 0.0;
            for (int row : scenario.v1_indices) w += merged.pattern(row).weight;
            return w;
        }();
        const bool outlier_scale = strict_weight / total_weight < config.outlier_threshold;
        std::vector<char> removed_row(merged.pattern_count(), 0);
        for (int row : scenario.v1_indices) removed_row[row] = 1;
        if (!outlier_scale)
            for (int row : scenario.boundary_indices) removed_row[row] = 1;

        std::vector<int> removed, retained;
        for (int row = 0; row < merged.pattern_count(); ++row) {
            auto& target = removed_row[row] ? removed : retained;
            for (int member : row_members[row]) target.push_back(indices[member]);
        }
        if (retained.empty())
            return emit_outlier(std::move(indices), true);

        const int retained_id = run(std::move(retained), depth + 1);
        const int removed_id = outlier_scale ? emit_outlier(std::move(removed), false)
                                             : run(std::move(removed), depth + 1);
        return emit(SplitNode{retained_id, removed_id});
    }
};

} // namespace

MixtureTree::MixtureTree(RankDataset original, std::vector<MixtureNode> nodes, int root)
    : original_(std::move(original)), nodes_(std::move(nodes)), root_(root) {
    for (int id = 0; id < static_cast<int>(nodes_.size()); ++id)
        if (is_leaf(id)) leaves_.push_back(id);
    std::sort(leaves_.begin(), leaves_.end(), [this](int a, int b) {
        const double wa = leaf_weight_fraction(a);
        const double wb = leaf_weight_fraction(b);
        if (wa != wb) return wa > wb;
        return leaf_pattern_indices(a) < leaf_pattern_indices(b);
    });
}

double MixtureTree::leaf_weight_fraction(int id) const {
    return std::visit(
        [](const auto& node) -> double {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, SplitNode>)
                throw std::invalid_argument("not a leaf");
            else
                return node.weight_fraction;
        },
        nodes_.at(id));
}

const std::vector<int>& MixtureTree::leaf_pattern_indices(int id) const {
    return std::visit(
        [](const auto& node) -> const std::vector<int>& {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, SplitNode>)
                throw std::invalid_argument("not a leaf");
            else
                return node.pattern_indices;
        },
        nodes_.at(id));
}

MixtureTree peel(const RankDataset& ds, const PeelConfig& config) {
    if (ds.pattern_count() == 0)
        throw std::invalid_argument("peel: empty dataset");
    if (!(config.outlier_threshold >= 0.0 && config.outlier_threshold < 1.0))
        throw std::invalid_argument("peel: outlier_threshold must be in [0, 1)");
    if (config.max_depth < 1 || config.axes_per_group < 1 || config.min_group_patterns < 1)
        throw std::invalid_argument("peel: invalid configuration");
    Peeler peeler{ds, config, ds.total_weight(), {}};
    std::vector<int> all(ds.pattern_count());
    std::iota(all.begin(), all.end(), 0);
    const int root = peeler.run(std::move(all), 1);
    return MixtureTree(ds, std::move(peeler.nodes), root);
}

namespace {

std::string format_num(double value, int decimals = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

// Items of one block joined as "{A,C}", ordered by descending mean score.
std::string block_string(const RankDataset& ds, const Eigen::VectorXd& beta,
                         std::vector<int> block) {
    std::stable_sort(block.begin(), block.end(),
                     [&](int a, int b) { return beta(a) > beta(b); });
    std::string out = "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) out += ',';
        out += ds.items().label(block[i]);
    }
    return out + "}";
}

std::string consensus_string(const RankDataset& ds, const HomogeneityReport& report) {
    std::vector<std::string> blocks;
    for (const auto* block : {&report.partition.plus, &report.partition.zero,
                              &report.partition.minus})
        if (!block->empty()) blocks.push_back(block_string(ds, report.beta, *block));
    if (blocks.size() < 2) return "(no first-axis separation)";
    std::string out = blocks.front();
    for (std::size_t i = 1; i < blocks.size(); ++i) out += " > " + blocks[i];
    return out;
}

std::string scores_string(const Eigen::VectorXd& scores) {
    std::string out = "(";
    for (Eigen::Index j = 0; j < scores.size(); ++j) {
        if (j) out += ',';
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", scores(j));
        out += buf;
    }
    return out + ")";
}

} // namespace

namespace {

std::string pattern_count_string(int count) {
    return std::to_string(count) + (count == 1 ? " pattern" : " patterns");
}

} // namespace

std::string group_report(const MixtureTree& tree, int node_id) {
    if (node_id < 0 || node_id >= static_cast<int>(tree.nodes().size()))
        throw std::invalid_argument("group_report: unknown node");
    const MixtureNode& node = tree.node(node_id);
    std::string out;
    if (const auto* group = std::get_if<GroupNode>(&node)) {
        const RankDataset& data = group->data;
        out += "group: " + format_num(100.0 * group->weight_fraction, 2) + "% of weight, " +
               pattern_count_string(data.pattern_count()) + "\n";
        out += "  consensus: " + consensus_string(data, group->report) + "\n";
        out += "  beta:";
        for (int j = 0; j < data.item_count(); ++j)
            out += " " + data.items().label(j) + "=" + format_num(group->report.beta(j));
        out += "\n  GHC: " + format_num(group->report.ghc_percent, 2) +
               "%  lambda1=" + format_num(group->report.lambda1) +
               "  U(" + std::to_string(data.item_count()) + ")=" + format_num(group->report.u_d) +
               "  faithful partition: " + (group->report.faithful_partition ? "yes" : "no") + "\n";
        out += "  lambdas:";
        for (double lambda : group->lambdas) out += " " + format_num(lambda);
        out += "\n  faithful voters (" + std::to_string(group->report.faithful_voters.size()) +
               "/" + std::to_string(data.pattern_count()) + "):";
        for (int i : group->report.faithful_voters) out += " " + data.pattern(i).label;
        out += "\n  crossings:";
        std::map<int, double> histogram;
        for (int i = 0; i < data.pattern_count(); ++i)
            histogram[group->report.crossings[i]] += data.pattern(i).weight;
        for (const auto& [crossings, weight] : histogram) {
            char buf[64];
            std::snprintf(buf, sizeof buf, " %d:%g", crossings, weight);
            out += buf;
        }
        out += "\n";
    } else if (const auto* outlier = std::get_if<OutlierNode>(&node)) {
        out += std::string(outlier->degenerate ? "degenerate branch: " : "outliers: ") +
               format_num(100.0 * outlier->weight_fraction, 2) + "% of weight, " +
               pattern_count_string(outlier->data.pattern_count()) + "\n";
        for (const auto& pattern : outlier->data.patterns())
            out += "  " + pattern.label + ": scores " + scores_string(pattern.scores) + "\n";
    } else {
        const auto& split = std::get<SplitNode>(node);
        out += "split: retained node " + std::to_string(split.retained) + ", removed node " +
               std::to_string(split.removed) + "\n";
    }
    return out;
}

std::vector<std::pair<std::string, int>> flatten(const MixtureTree& tree) {
    std::vector<int> leaf_of(tree.original().pattern_count(), -1);
    for (std::size_t ordinal = 0; ordinal < tree.leaves().size(); ++ordinal)
        for (int index : tree.leaf_pattern_indices(tree.leaves()[ordinal]))
            leaf_of[index] = static_cast<int>(ordinal);
    std::vector<std::pair<std::string, int>> assignment;
    assignment.reserve(leaf_of.size());
    for (int i = 0; i < tree.original().pattern_count(); ++i)
        assignment.emplace_back(tree.original().pattern(i).label, leaf_of[i]);
    return assignment;
}

} // namespace tcarank
