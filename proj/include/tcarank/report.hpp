#ifndef TCARANK_REPORT_HPP
#define TCARANK_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "tcarank/mixture.hpp"

namespace tcarank {

inline constexpr const char* kToolName = "tcarank";
inline constexpr const char* kToolVersion = "0.1.0";

// Echo of the effective run configuration.
struct ReportConfig {
    std::string input_path;
    std::string format = "orderings";
    int top_k = 0; // 0 = complete rankings
    double outlier_threshold = 0.02;
    int max_depth = 10;
    int axes = 3;
    std::string method = "auto";
    int exact_limit = 22;
    std::uint64_t seed = 0;
};

struct ReportPattern {
    std::string label;
    double weight = 0.0;
    std::vector<double> scores;
};

// One leaf of the mixture tree with its analysis products.
struct ReportGroup {
    int id = 0;                  // 1-based, descending weight
    std::string kind;            // "group" | "outlier"
    bool degenerate = false;
    double weight_fraction = 0.0;
    std::vector<ReportPattern> patterns;       // original patterns assigned here
    std::vector<std::string> merged_labels;    // rows the analysis ran on
    // group-only analysis payload
    std::vector<double> beta;
    std::vector<double> lambdas;
    double lambda1 = 0.0;
    double u_d = 0.0;
    double ghc_percent = 0.0;
    bool faithful = false;
    std::vector<std::string> partition_plus, partition_zero, partition_minus;
    std::vector<std::string> faithful_voters;
    std::vector<int> crossings;                   // aligned with merged_labels
    std::vector<std::vector<double>> row_scores;  // merged row x axis
    std::vector<std::vector<double>> item_scores; // item x axis
    std::vector<double> nega_scores;              // per axis
};

// Nested encoding of the peeling structure. A split's children are
// [retained, removed]; a leaf carries its 1-based group id.
struct ReportTreeNode {
    std::string kind; // "split" | "group" | "outlier"
    int leaf = 0;
    std::vector<ReportTreeNode> children;
};

struct ReportDocument {
    int schema = 1;
    std::string tool_name = kToolName;
    std::string tool_version = kToolVersion;
    ReportConfig config;
    std::vector<std::string> items;
    ReportTreeNode tree;
    std::vector<ReportGroup> groups;
};

ReportDocument build_report(const MixtureTree& tree, const ReportConfig& config);

nlohmann::json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const nlohmann::json& j);

} // namespace tcarank

#endif
