#include "tcarank/ranks.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tcarank {

namespace {

constexpr double kRowSumTol = 1e-9;

double expected_row_sum(int d) { return 0.5 * d * (d - 1); }

std::string format_weight(double w) {
    const double rounded = std::round(w);
    char buf[32];
    if (std::abs(w - rounded) < 1e-9 && std::abs(w) < 1e15) {
        auto res = std::to_chars(buf, buf + sizeof buf, static_cast<long long>(rounded));
        return std::string(buf, res.ptr);
    }
    auto res = std::to_chars(buf, buf + sizeof buf, w);
    return std::string(buf, res.ptr);
}

} // namespace

ItemSet::ItemSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() < 2)
        throw std::invalid_argument("an item set needs at least two items");
    std::set<std::string> seen;
    for (const auto& label : labels_) {
        if (label.empty())
            throw std::invalid_argument("empty item label");
        if (!seen.insert(label).second)
            throw std::invalid_argument("duplicate item label: " + label);
    }
}

int ItemSet::index_of(const std::string& label) const {
    for (int j = 0; j < size(); ++j)
        if (labels_[j] == label) return j;
    return -1;
}

Eigen::VectorXd borda_scores(const Ordering& ordering, int item_count) {
    if (item_count < 2)
        throw std::invalid_argument("at least two items required");
    Eigen::VectorXd scores = Eigen::VectorXd::Constant(item_count, -1.0);
    int position = 1; // 1-based over expanded positions
    for (const auto& tier : ordering.tiers) {
        if (tier.empty())
            throw std::invalid_argument("malformed ordering: empty tie group");
        const int t = static_cast<int>(tier.size());
        const double score = item_count - position - 0.5 * (t - 1);
        for (int item : tier) {
            if (item < 0 || item >= item_count)
                throw std::invalid_argument("malformed ordering: item index out of range");
            if (scores(item) >= 0.0)
                throw std::invalid_argument("malformed ordering: item appears in two tiers");
            scores(item) = score;
        }
        position += t;
    }
    if (position != item_count + 1 || (scores.array() < 0.0).any())
        throw std::invalid_argument("malformed ordering: does not cover every item");
    return scores;
}

Eigen::VectorXd reverse_borda(const Eigen::VectorXd& scores, int item_count) {
    if (scores.size() != item_count)
        throw std::invalid_argument("score vector length mismatch");
    return Eigen::VectorXd::Constant(item_count, item_count - 1.0) - scores;
}

Ordering ordering_from_scores(const Eigen::VectorXd& scores, double weight) {
    const int d = static_cast<int>(scores.size());
    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return scores(a) > scores(b); });
    Ordering ordering;
    ordering.weight = weight;
    for (int j : order) {
        if (!ordering.tiers.empty() &&
            std::abs(scores(ordering.tiers.back().front()) - scores(j)) <= 1e-9) {
            ordering.tiers.back().push_back(j);
        } else {
            ordering.tiers.push_back({j});
        }
    }
    return ordering;
}

std::string pattern_label(const ItemSet& items, const Eigen::VectorXd& scores, double weight) {
    const Ordering ordering = ordering_from_scores(scores, weight);
    std::string label;
    const std::size_t tiers = ordering.tiers.size();
    for (std::size_t t = 0; t < tiers; ++t) {
        const auto& tier = ordering.tiers[t];
        if (t + 1 == tiers && tier.size() > 1 && tiers > 1)
            break; // trailing tie tier is implied, e.g. AB166
        if (tier.size() == 1) {
            label += items.label(tier.front());
        } else {
            label += '[';
            for (std::size_t i = 0; i < tier.size(); ++i) {
                if (i) label += '+';
                label += items.label(tier[i]);
            }
            label += ']';
        }
    }
    return label + format_weight(weight);
}

RankDataset::RankDataset(ItemSet items, std::vector<RankPattern> patterns)
    : items_(std::move(items)), patterns_(std::move(patterns)) {
    const int d = items_.size();
    const double expected = expected_row_sum(d);
    for (auto& p : patterns_) {
        if (p.scores.size() != d)
            throw std::invalid_argument("score row length does not match the item set");
        if ((p.scores.array() < -kRowSumTol).any())
            throw std::invalid_argument("negative Borda score");
        if (std::abs(p.scores.sum() - expected) > 1e-6)
            throw std::invalid_argument("score row does not sum to d(d-1)/2");
        if (!(p.weight > 0.0))
            throw std::invalid_argument("pattern weight must be positive");
        if (p.label.empty())
            p.label = pattern_label(items_, p.scores, p.weight);
    }
}

RankDataset RankDataset::from_orderings(ItemSet items, const std::vector<Ordering>& orderings) {
    const int d = items.size();
    std::vector<RankPattern> patterns;
    patterns.reserve(orderings.size());
    for (const auto& ordering : orderings) {
        RankPattern p;
        p.scores = borda_scores(ordering, d);
        p.weight = ordering.weight;
        patterns.push_back(std::move(p));
    }
    return RankDataset(std::move(items), std::move(patterns));
}

double RankDataset::total_weight() const {
    double w = 0.0;
    for (const auto& p : patterns_) w += p.weight;
    return w;
}

bool RankDataset::all_complete() const {
    const int d = items_.size();
    for (const auto& p : patterns_) {
        std::vector<double> sorted(p.scores.data(), p.scores.data() + d);
        std::sort(sorted.begin(), sorted.end());
        for (int j = 0; j < d; ++j)
            if (std::abs(sorted[j] - j) > 1e-9) return false;
    }
    return true;
}

RankDataset RankDataset::subset(const std::vector<int>& indices) const {
    std::vector<RankPattern> selected;
    selected.reserve(indices.size());
    for (int i : indices) selected.push_back(patterns_.at(i));
    return RankDataset(items_, std::move(selected));
}

Eigen::VectorXd mean_borda(const RankDataset& ds) {
    if (ds.pattern_count() == 0)
        throw std::invalid_argument("mean_borda: empty dataset");
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(ds.item_count());
    double weight = 0.0;
    for (const auto& p : ds.patterns()) {
        sum += p.weight * p.scores;
        weight += p.weight;
    }
    return sum / weight;
}

NegaTable nega_code(const RankDataset& ds) {
    if (ds.pattern_count() == 0)
        throw std::invalid_argument("nega_code: empty dataset");
    const int d = ds.item_count();
    Eigen::VectorXd nega = Eigen::VectorXd::Zero(d);
    for (const auto& p : ds.patterns())
        nega += p.weight * reverse_borda(p.scores, d);
    return NegaTable{ds, std::move(nega)};
}

RankDataset merge_identical_patterns(const RankDataset& ds,
                                     std::vector<std::vector<int>>* groups) {
    std::vector<RankPattern> merged;
    std::vector<std::vector<int>> members;
    for (int i = 0; i < ds.pattern_count(); ++i) {
        const auto& p = ds.pattern(i);
        int found = -1;
        for (std::size_t m = 0; m < merged.size(); ++m) {
            if ((merged[m].scores.array() == p.scores.array()).all()) {
                found = static_cast<int>(m);
                break;
            }
        }
        if (found >= 0) {
            merged[found].weight += p.weight;
            members[found].push_back(i);
        } else {
            merged.push_back(p);
            members.push_back({i});
        }
    }
    for (std::size_t m = 0; m < merged.size(); ++m) {
        if (members[m].size() > 1)
            merged[m].label = pattern_label(ds.items(), merged[m].scores, merged[m].weight);
    }
    if (groups) *groups = std::move(members);
    return RankDataset(ds.items(), std::move(merged));
}

RankDataset merge_identical_patterns(const RankDataset& ds) {
    return merge_identical_patterns(ds, nullptr);
}

RankDataset collapse_to_partial(const RankDataset& ds, int top_k) {
    const int d = ds.item_count();
    if (top_k < 1 || top_k >= d)
        throw std::invalid_argument("top_k must be in [1, d-1]");
    if (!ds.all_complete())
        throw std::invalid_argument("collapse_to_partial needs complete rankings");
    std::vector<RankPattern> collapsed;
    collapsed.reserve(ds.pattern_count());
    for (const auto& p : ds.patterns()) {
        Ordering full = ordering_from_scores(p.scores, p.weight);
        Ordering partial;
        partial.weight = p.weight;
        partial.tiers.assign(full.tiers.begin(), full.tiers.begin() + top_k);
        std::vector<int> rest;
        for (std::size_t t = top_k; t < full.tiers.size(); ++t)
            rest.insert(rest.end(), full.tiers[t].begin(), full.tiers[t].end());
        partial.tiers.push_back(std::move(rest));
        RankPattern q;
        q.scores = borda_scores(partial, d);
        q.weight = p.weight;
        collapsed.push_back(std::move(q));
    }
    return merge_identical_patterns(RankDataset(ds.items(), std::move(collapsed)));
}

} // namespace tcarank
