#ifndef TCARANK_TCA_HPP
#define TCARANK_TCA_HPP

#include <string>
#include <vector>

#include "tcarank/ranks.hpp"
#include "tcarank/tsvd.hpp"

namespace tcarank {

// Factor scores of one axis: f = a / row_masses, g = b / col_masses.
struct FactorScores {
    Eigen::VectorXd f; // row scores, length I
    Eigen::VectorXd g; // column scores, length J
    double lambda = 0.0;
    int axis = 0; // 1-based
};

std::vector<FactorScores> factor_scores(const TaxicabDecomposition& decomposition);

// TCA of a nega-coded rank dataset. Row i < n is voter pattern i, row n is
// the nega row. Axis 1 is oriented so the nega row scores negative.
struct NegaAnalysis {
    NegaTable source;
    TaxicabDecomposition decomposition;
    std::vector<FactorScores> axes;
    // True when v1 = (1,...,1,-1) exactly. Under this condition g1 is an
    // affine function of the mean scores, lambda1 equals twice the taxicab
    // norm of the centered nega row, and deflating axis 1 zeroes that row.
    bool nega_identities_hold = false;

    int voter_count() const { return source.base.pattern_count(); }
    int axis_count() const { return static_cast<int>(axes.size()); }
    double lambda1() const { return axes.empty() ? 0.0 : axes.front().lambda; }

    // Voter part of the row scores of a 1-based axis.
    Eigen::VectorXd voter_scores(int axis) const;
    // Nega-row score of a 1-based axis.
    double nega_score(int axis) const;
};

// Negates every axis-1 vector when the nega row sits on the positive side,
// so that f1(nega) <= 0 afterwards. Lambda is unchanged.
NegaAnalysis fix_nega_sign(NegaAnalysis analysis);

// Nega-codes, builds the correspondence table, decomposes to at most k
// axes and fixes the nega sign.
NegaAnalysis analyze_nega(const RankDataset& ds, int k = 3, const TsvdOptions& options = {});

struct BiplotPoint {
    enum class Kind { Voter, Item, Nega };
    std::string label;
    double x = 0.0;
    double y = 0.0;
    Kind kind = Kind::Voter;
};

// Labeled 2-D coordinates of voters, items and the nega row on a pair of
// 1-based axes.
std::vector<BiplotPoint> biplot_coordinates(const NegaAnalysis& analysis, int axis_x, int axis_y);

} // namespace tcarank

#endif
