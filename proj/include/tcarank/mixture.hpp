#ifndef TCARANK_MIXTURE_HPP
#define TCARANK_MIXTURE_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tcarank/homogeneity.hpp"

namespace tcarank {

struct PeelConfig {
    // A removed set below this fraction of the ORIGINAL total weight is an
    // outlier set rather than a candidate group.
    double outlier_threshold = 0.02;
    int max_depth = 10;
    int axes_per_group = 3;
    int min_group_patterns = 1;
    TsvdOptions tsvd;
};

// A globally homogeneous leaf. `data` is the merged subset the analysis
// ran on; `pattern_indices` point into the original dataset.
struct GroupNode {
    std::vector<int> pattern_indices;
    double weight_fraction = 0.0; // of the original dataset
    RankDataset data;
    HomogeneityReport report;
    std::vector<double> lambdas;
    std::vector<FactorScores> axes;
};

struct OutlierNode {
    std::vector<int> pattern_indices;
    double weight_fraction = 0.0;
    RankDataset data;
    // Set when the branch was cut off (max depth / too few patterns /
    // empty retained set) rather than removed as a small V1.
    bool degenerate = false;
};

// A Scen2 split: the retained branch is explored first.
struct SplitNode {
    int retained = -1; // child node id
    int removed = -1;  // child node id
};

using MixtureNode = std::variant<GroupNode, OutlierNode, SplitNode>;

class MixtureTree {
public:
    MixtureTree(RankDataset original, std::vector<MixtureNode> nodes, int root);

    const RankDataset& original() const { return original_; }
    const std::vector<MixtureNode>& nodes() const { return nodes_; }
    const MixtureNode& node(int id) const { return nodes_.at(id); }
    int root() const { return root_; }

    // Group and outlier leaves ordered by descending weight.
    const std::vector<int>& leaves() const { return leaves_; }

    bool is_leaf(int id) const { return !std::holds_alternative<SplitNode>(nodes_.at(id)); }
    double leaf_weight_fraction(int id) const;
    const std::vector<int>& leaf_pattern_indices(int id) const;

private:
    RankDataset original_;
    std::vector<MixtureNode> nodes_;
    int root_;
    std::vector<int> leaves_;
};

// Recursive law-of-contradiction peeling. Each step merges identical
// patterns, runs the nega analysis and either emits a homogeneous group
// or splits off the voters sharing the nega sign and recurses.
MixtureTree peel(const RankDataset& ds, const PeelConfig& config = {});

// Human-readable block describing one node.
std::string group_report(const MixtureTree& tree, int node_id);

// Assignment of every original pattern to its leaf: (pattern label,
// 0-based leaf ordinal in descending-weight order).
std::vector<std::pair<std::string, int>> flatten(const MixtureTree& tree);

} // namespace tcarank

#endif
