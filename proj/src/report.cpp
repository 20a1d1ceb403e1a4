#include "tcarank/report.hpp"

#include <variant>

namespace tcarank {

namespace {

using nlohmann::json;

std::vector<double> to_std(const Eigen::VectorXd& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
}

ReportGroup leaf_to_group(const MixtureTree& tree, int node_id, int ordinal) {
    const MixtureNode& node = tree.node(node_id);
    ReportGroup out;
    out.id = ordinal + 1;
    const auto fill_patterns = [&](const std::vector<int>& indices) {
        for (int i : indices) {
            const auto& p = tree.original().pattern(i);
            out.patterns.push_back({p.label, p.weight, to_std(p.scores)});
        }
    };
    if (const auto* group = std::get_if<GroupNode>(&node)) {
        out.kind = "group";
        out.weight_fraction = group->weight_fraction;
        fill_patterns(group->pattern_indices);
        const RankDataset& data = group->data;
        for (const auto& p : data.patterns()) out.merged_labels.push_back(p.label);
        out.beta = to_std(group->report.beta);
        out.lambdas = group->lambdas;
        out.lambda1 = group->report.lambda1;
        out.u_d = group->report.u_d;
        out.ghc_percent = group->report.ghc_percent;
        out.faithful = group->report.faithful_partition;
        for (int j : group->report.partition.plus)
            out.partition_plus.push_back(data.items().label(j));
        for (int j : group->report.partition.zero)
            out.partition_zero.push_back(data.items().label(j));
        for (int j : group->report.partition.minus)
            out.partition_minus.push_back(data.items().label(j));
        for (int i : group->report.faithful_voters)
            out.faithful_voters.push_back(data.pattern(i).label);
        out.crossings = group->report.crossings;
        const int n = data.pattern_count();
        for (int i = 0; i < n; ++i) {
            std::vector<double> row;
            for (const auto& axis : group->axes) row.push_back(axis.f(i));
            out.row_scores.push_back(std::move(row));
        }
        for (int j = 0; j < data.item_count(); ++j) {
            std::vector<double> row;
            for (const auto& axis : group->axes) row.push_back(axis.g(j));
            out.item_scores.push_back(std::move(row));
        }
        for (const auto& axis : group->axes) out.nega_scores.push_back(axis.f(n));
    } else {
        const auto& outlier = std::get<OutlierNode>(node);
        out.kind = "outlier";
        out.degenerate = outlier.degenerate;
        out.weight_fraction = outlier.weight_fraction;
        fill_patterns(outlier.pattern_indices);
        for (const auto& p : outlier.data.patterns()) out.merged_labels.push_back(p.label);
    }
    return out;
}

ReportTreeNode tree_node(const MixtureTree& tree, int node_id,
                         const std::vector<int>& ordinal_of_node) {
    ReportTreeNode out;
    if (const auto* split = std::get_if<SplitNode>(&tree.node(node_id))) {
        out.kind = "split";
        out.children.push_back(tree_node(tree, split->retained, ordinal_of_node));
        out.children.push_back(tree_node(tree, split->removed, ordinal_of_node));
    } else {
        out.kind = std::holds_alternative<GroupNode>(tree.node(node_id)) ? "group" : "outlier";
        out.leaf = ordinal_of_node[node_id] + 1;
    }
    return out;
}

json tree_to_json(const ReportTreeNode& node) {
    json j;
    j["kind"] = node.kind;
    if (node.kind == "split") {
        j["retained"] = tree_to_json(node.children.at(0));
        j["removed"] = tree_to_json(node.children.at(1));
    } else {
        j["leaf"] = node.leaf;
    }
    return j;
}

ReportTreeNode tree_from_json(const json& j) {
    ReportTreeNode node;
    node.kind = j.at("kind").get<std::string>();
    if (node.kind == "split") {
        node.children.push_back(tree_from_json(j.at("retained")));
        node.children.push_back(tree_from_json(j.at("removed")));
    } else {
        node.leaf = j.at("leaf").get<int>();
    }
    return node;
}

json config_to_json(const ReportConfig& c) {
    return json{{"input_path", c.input_path}, {"format", c.format},
                {"top_k", c.top_k},           {"outlier_threshold", c.outlier_threshold},
                {"max_depth", c.max_depth},   {"axes", c.axes},
                {"method", c.method},         {"exact_limit", c.exact_limit},
                {"seed", c.seed}};
}

ReportConfig config_from_json(const json& j) {
    ReportConfig c;
    c.input_path = j.at("input_path").get<std::string>();
    c.format = j.at("format").get<std::string>();
    c.top_k = j.at("top_k").get<int>();
    c.outlier_threshold = j.at("outlier_threshold").get<double>();
    c.max_depth = j.at("max_depth").get<int>();
    c.axes = j.at("axes").get<int>();
    c.method = j.at("method").get<std::string>();
    c.exact_limit = j.at("exact_limit").get<int>();
    c.seed = j.at("seed").get<std::uint64_t>();
    return c;
}

json group_to_json(const ReportGroup& g) {
    json j;
    j["id"] = g.id;
    j["kind"] = g.kind;
    j["degenerate"] = g.degenerate;
    j["weight_fraction"] = g.weight_fraction;
    json patterns = json::array();
    for (const auto& p : g.patterns)
        patterns.push_back(json{{"label", p.label}, {"weight", p.weight}, {"scores", p.scores}});
    j["patterns"] = std::move(patterns);
    j["merged_labels"] = g.merged_labels;
    if (g.kind == "group") {
        j["beta"] = g.beta;
        j["lambdas"] = g.lambdas;
        j["lambda1"] = g.lambda1;
        j["u_d"] = g.u_d;
        j["ghc_percent"] = g.ghc_percent;
        j["faithful_partition"] = g.faithful;
        j["partition"] = json{{"plus", g.partition_plus},
                              {"zero", g.partition_zero},
                              {"minus", g.partition_minus}};
        j["faithful_voters"] = g.faithful_voters;
        j["crossings"] = g.crossings;
        j["row_scores"] = g.row_scores;
        j["item_scores"] = g.item_scores;
        j["nega_scores"] = g.nega_scores;
    }
    return j;
}

ReportGroup group_from_json(const json& j) {
    ReportGroup g;
    g.id = j.at("id").get<int>();
    g.kind = j.at("kind").get<std::string>();
    g.degenerate = j.at("degenerate").get<bool>();
    g.weight_fraction = j.at("weight_fraction").get<double>();
    for (const auto& p : j.at("patterns")) {
        g.patterns.push_back({p.at("label").get<std::string>(), p.at("weight").get<double>(),
                              p.at("scores").get<std::vector<double>>()});
    }
    g.merged_labels = j.at("merged_labels").get<std::vector<std::string>>();
    if (g.kind == "group") {
        g.beta = j.at("beta").get<std::vector<double>>();
        g.lambdas = j.at("lambdas").get<std::vector<double>>();
        g.lambda1 = j.at("lambda1").get<double>();
        g.u_d = j.at("u_d").get<double>();
        g.ghc_percent = j.at("ghc_percent").get<double>();
        g.faithful = j.at("faithful_partition").get<bool>();
        g.partition_plus = j.at("partition").at("plus").get<std::vector<std::string>>();
        g.partition_zero = j.at("partition").at("zero").get<std::vector<std::string>>();
        g.partition_minus = j.at("partition").at("minus").get<std::vector<std::string>>();
        g.faithful_voters = j.at("faithful_voters").get<std::vector<std::string>>();
        g.crossings = j.at("crossings").get<std::vector<int>>();
        g.row_scores = j.at("row_scores").get<std::vector<std::vector<double>>>();
        g.item_scores = j.at("item_scores").get<std::vector<std::vector<double>>>();
        g.nega_scores = j.at("nega_scores").get<std::vector<double>>();
    }
    return g;
}

} // namespace

ReportDocument build_report(const MixtureTree& tree, const ReportConfig& config) {
    ReportDocument doc;
    doc.config = config;
    doc.items = tree.original().items().labels();
    std::vector<int> ordinal_of_node(tree.nodes().size(), -1);
    for (std::size_t ordinal = 0; ordinal < tree.leaves().size(); ++ordinal)
        ordinal_of_node[tree.leaves()[ordinal]] = static_cast<int>(ordinal);
    doc.tree = tree_node(tree, tree.root(), ordinal_of_node);
    for (std::size_t ordinal = 0; ordinal < tree.leaves().size(); ++ordinal)
        doc.groups.push_back(
            leaf_to_group(tree, tree.leaves()[ordinal], static_cast<int>(ordinal)));
    return doc;
}

nlohmann::json to_json(const ReportDocument& doc) {
    json j;
    j["schema"] = doc.schema;
    j["tool"] = json{{"name", doc.tool_name}, {"version", doc.tool_version}};
    j["config"] = config_to_json(doc.config);
    j["items"] = doc.items;
    j["tree"] = tree_to_json(doc.tree);
    json groups = json::array();
    for (const auto& g : doc.groups) groups.push_back(group_to_json(g));
    j["groups"] = std::move(groups);
    return j;
}

ReportDocument report_from_json(const nlohmann::json& j) {
    ReportDocument doc;
    doc.schema = j.at("schema").get<int>();
    doc.tool_name = j.at("tool").at("name").get<std::string>();
    doc.tool_version = j.at("tool").at("version").get<std::string>();
    doc.config = config_from_json(j.at("config"));
    doc.items = j.at("items").get<std::vector<std::string>>();
    doc.tree = tree_from_json(j.at("tree"));
    for (const auto& g : j.at("groups")) doc.groups.push_back(group_from_json(g));
    return doc;
}

} // namespace tcarank
