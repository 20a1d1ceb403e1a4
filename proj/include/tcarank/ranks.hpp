#ifndef TCARANK_RANKS_HPP
#define TCARANK_RANKS_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace tcarank {

// The fixed, ordered set of items being ranked.
class ItemSet {
public:
    explicit ItemSet(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int j) const { return labels_.at(j); }
    const std::vector<std::string>& labels() const { return labels_; }

    // Index of a label, -1 if unknown.
    int index_of(const std::string& label) const;

    bool operator==(const ItemSet&) const = default;

private:
    std::vector<std::string> labels_;
};

// A (possibly tied) preference ordering: tiers of item indices, most
// preferred tier first. A complete linear order has d singleton tiers.
struct Ordering {
    std::vector<std::vector<int>> tiers;
    double weight = 1.0;
};

// Borda scores of an ordering over `item_count` items: the j-th most
// preferred item receives item_count - j; a tie tier receives the mean of
// the scores of the positions it occupies.
Eigen::VectorXd borda_scores(const Ordering& ordering, int item_count);

// (d-1) - scores, the scores of the reversed preference.
Eigen::VectorXd reverse_borda(const Eigen::VectorXd& scores, int item_count);

// One weighted response pattern (a distinct observed ordering).
struct RankPattern {
    Eigen::VectorXd scores;
    double weight = 1.0;
    std::string label;
};

// Weighted response patterns over a common item set. Every score row sums
// to d(d-1)/2; weights are positive.
class RankDataset {
public:
    RankDataset(ItemSet items, std::vector<RankPattern> patterns);

    static RankDataset from_orderings(ItemSet items, const std::vector<Ordering>& orderings);

    const ItemSet& items() const { return items_; }
    int item_count() const { return items_.size(); }
    const std::vector<RankPattern>& patterns() const { return patterns_; }
    const RankPattern& pattern(int i) const { return patterns_.at(i); }
    int pattern_count() const { return static_cast<int>(patterns_.size()); }
    double total_weight() const;

    // True when every row is a permutation of {0,...,d-1}.
    bool all_complete() const;

    // Dataset restricted to the given pattern indices, in the given order.
    RankDataset subset(const std::vector<int>& indices) const;

private:
    ItemSet items_;
    std::vector<RankPattern> patterns_;
};

// Weighted mean Borda score per item.
Eigen::VectorXd mean_borda(const RankDataset& ds);

// The dataset together with the nega row: per-item totals of the weighted
// reverse scores, nega(j) = sum_i w_i ((d-1) - r_ij).
struct NegaTable {
    RankDataset base;
    Eigen::VectorXd nega_row;
};

NegaTable nega_code(const RankDataset& ds);

// Merges patterns with identical score rows, summing weights. Analysis
// results are invariant under this operation.
RankDataset merge_identical_patterns(const RankDataset& ds);

// Same merge, also reporting which input rows built each output row.
RankDataset merge_identical_patterns(const RankDataset& ds,
                                     std::vector<std::vector<int>>* groups);

// Keeps the first `top_k` choices of each complete ranking and ties the
// rest, rescoring and merging patterns that become identical.
RankDataset collapse_to_partial(const RankDataset& ds, int top_k);

// Display label for a score row: item names in preference order plus the
// weight, e.g. "ABCD137"; a trailing tie tier is dropped ("AB166"), an
// inner tie tier is bracketed ("A[BC]D5").
std::string pattern_label(const ItemSet& items, const Eigen::VectorXd& scores, double weight);

// Tier structure recovered from a score row (descending score, equal
// scores tied). Weight is copied through.
Ordering ordering_from_scores(const Eigen::VectorXd& scores, double weight);

} // namespace tcarank

#endif
