#ifndef TCARANK_TESTS_HELPERS_HPP
#define TCARANK_TESTS_HELPERS_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "tcarank/io.hpp"
#include "tcarank/ranks.hpp"

namespace testutil {

using namespace tcarank;

inline std::string fixture_path(const std::string& name) {
    return std::string(TCARANK_FIXTURE_DIR) + "/" + name;
}

inline RankDataset load_fixture(const std::string& name) {
    return parse_orderings(read_file(fixture_path(name)));
}

inline RankDataset table1() { return load_fixture("table1.csv"); }

inline RankDataset subset_by_labels(const RankDataset& ds,
                                    const std::vector<std::string>& labels) {
    std::vector<int> indices;
    for (const auto& label : labels)
        for (int i = 0; i < ds.pattern_count(); ++i)
            if (ds.pattern(i).label == label) indices.push_back(i);
    return ds.subset(indices);
}

// The peeled Table 1 groups of the worked example.
inline const std::vector<std::string> kMaterialist8 = {
    "CDAB70", "CADB294", "CABD330", "CBAD117", "ACDB255", "ACBD309", "ADCB93", "ABCD137"};
inline const std::vector<std::string> kPostmaterialist10 = {
    "BCAD61", "BCDA55", "BDAC33", "BDCA59", "CBDA69",
    "CDBA34", "DBAC29", "DBCA52", "DCAB35", "DCBA27"};
inline const std::vector<std::string> kMixed5 = {"ABDC29", "ADBC52", "BACD48", "BADC23",
                                                 "DABC21"};
inline const std::vector<std::string> kAprioriMaterialist = {"ACBD309", "ACDB255", "CABD330",
                                                             "CADB294"};
inline const std::vector<std::string> kAprioriPostmaterialist = {"BDAC33", "BDCA59", "DBAC29",
                                                                 "DBCA52"};

inline ItemSet letter_items(int d) {
    std::vector<std::string> labels;
    for (int j = 0; j < d; ++j) {
        if (j < 26)
            labels.push_back(std::string(1, static_cast<char>('A' + j)));
        else
            labels.push_back(std::string(1, static_cast<char>('a' + j - 26)));
    }
    return ItemSet(std::move(labels));
}

inline RankDataset single_complete_pattern(int d, double weight = 1.0) {
    Eigen::VectorXd scores(d);
    for (int j = 0; j < d; ++j) scores(j) = d - 1 - j;
    return RankDataset(letter_items(d), {{scores, weight, ""}});
}

inline RankDataset random_complete(std::mt19937& rng, int d, int n) {
    std::uniform_int_distribution<int> weight_dist(1, 50);
    std::vector<RankPattern> patterns;
    std::vector<double> scores(d);
    std::iota(scores.begin(), scores.end(), 0.0);
    for (int i = 0; i < n; ++i) {
        std::shuffle(scores.begin(), scores.end(), rng);
        Eigen::VectorXd row = Eigen::Map<Eigen::VectorXd>(scores.data(), d);
        patterns.push_back({row, static_cast<double>(weight_dist(rng)), ""});
    }
    return RankDataset(letter_items(d), std::move(patterns));
}

inline double pearson(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    const double mx = x.mean();
    const double my = y.mean();
    const Eigen::VectorXd cx = x.array() - mx;
    const Eigen::VectorXd cy = y.array() - my;
    return cx.dot(cy) / std::sqrt(cx.squaredNorm() * cy.squaredNorm());
}

// A faithful split plus voters whose rankings are intra-block permutations.
struct BlockDesign {
    std::vector<int> high;
    std::vector<int> low;
    int middle = -1; // odd d only
};

inline std::pair<RankDataset, BlockDesign> random_intra_block(std::mt19937& rng, int d, int n) {
    const int m = d / 2;
    std::vector<int> items(d);
    std::iota(items.begin(), items.end(), 0);
    std::shuffle(items.begin(), items.end(), rng);
    BlockDesign design;
    design.high.assign(items.begin(), items.begin() + m);
    design.low.assign(items.end() - m, items.end());
    if (d % 2 == 1) design.middle = items[m];

    std::vector<double> high_scores, low_scores;
    for (int s = d - m; s <= d - 1; ++s) high_scores.push_back(s);
    for (int s = 0; s <= m - 1; ++s) low_scores.push_back(s);

    std::uniform_int_distribution<int> weight_dist(1, 20);
    std::vector<RankPattern> patterns;
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXd row(d);
        std::vector<double> hs = high_scores, ls = low_scores;
        std::shuffle(hs.begin(), hs.end(), rng);
        std::shuffle(ls.begin(), ls.end(), rng);
        for (std::size_t j = 0; j < design.high.size(); ++j) row(design.high[j]) = hs[j];
        for (std::size_t j = 0; j < design.low.size(); ++j) row(design.low[j]) = ls[j];
        if (design.middle >= 0) row(design.middle) = 0.5 * (d - 1);
        patterns.push_back({row, static_cast<double>(weight_dist(rng)), ""});
    }
    return {RankDataset(letter_items(d), std::move(patterns)), design};
}

// Swaps the scores of one random high item and one random low item of one
// random voter, creating an inter-block crossing.
inline RankDataset inject_swap(std::mt19937& rng, const RankDataset& ds,
                               const BlockDesign& design) {
    std::vector<RankPattern> patterns(ds.patterns().begin(), ds.patterns().end());
    std::uniform_int_distribution<int> voter_dist(0, ds.pattern_count() - 1);
    std::uniform_int_distribution<int> high_dist(0, static_cast<int>(design.high.size()) - 1);
    std::uniform_int_distribution<int> low_dist(0, static_cast<int>(design.low.size()) - 1);
    const int voter = voter_dist(rng);
    const int h = design.high[high_dist(rng)];
    const int l = design.low[low_dist(rng)];
    std::swap(patterns[voter].scores(h), patterns[voter].scores(l));
    patterns[voter].label.clear(); // regenerate
    return RankDataset(ds.items(), std::move(patterns));
}

} // namespace testutil

#endif
