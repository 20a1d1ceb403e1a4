#include "tcarank/tca.hpp"

#include <stdexcept>

namespace tcarank {

std::vector<FactorScores> factor_scores(const TaxicabDecomposition& decomposition) {
    std::vector<FactorScores> axes;
    axes.reserve(decomposition.factors.size());
    int axis = 1;
    for (const auto& factor : decomposition.factors) {
        FactorScores scores;
        scores.f = factor.a.cwiseQuotient(decomposition.table.row_masses);
        scores.g = factor.b.cwiseQuotient(decomposition.table.col_masses);
        scores.lambda = factor.lambda;
        scores.axis = axis++;
        axes.push_back(std::move(scores));
    }
    return axes;
}

Eigen::VectorXd NegaAnalysis::voter_scores(int axis) const {
    return axes.at(axis - 1).f.head(voter_count());
}

double NegaAnalysis::nega_score(int axis) const {
    return axes.at(axis - 1).f(voter_count());
}

NegaAnalysis fix_nega_sign(NegaAnalysis analysis) {
    if (!analysis.axes.empty()) {
        const int nega_row = analysis.voter_count();
        TaxicabFactor& first = analysis.decomposition.factors.front();
        if (first.v(nega_row) > 0.0) {
            first.u = -first.u;
            first.v = -first.v;
            first.a = -first.a;
            first.b = -first.b;
            analysis.axes.front().f = -analysis.axes.front().f;
            analysis.axes.front().g = -analysis.axes.front().g;
        }
        analysis.nega_identities_hold =
            (first.v.head(nega_row).array() == 1.0).all() && first.v(nega_row) == -1.0;
    } else {
        analysis.nega_identities_hold = false;
    }
    return analysis;
}

NegaAnalysis analyze_nega(const RankDataset& ds, int k, const TsvdOptions& options) {
    NegaTable source = nega_code(ds);
    const int n = ds.pattern_count();
    const int d = ds.item_count();
    Eigen::MatrixXd counts(n + 1, d);
    for (int i = 0; i < n; ++i)
        counts.row(i) = ds.pattern(i).weight * ds.pattern(i).scores.transpose();
    counts.row(n) = source.nega_row.transpose();
    const CorrespondenceTable table = correspondence_table(counts);
    const int max_axes = static_cast<int>(std::min(table.p.rows(), table.p.cols())) - 1;
    TaxicabDecomposition decomposition = decompose(table, std::min(k, max_axes), options);
    std::vector<FactorScores> axes = factor_scores(decomposition);
    return fix_nega_sign(
        NegaAnalysis{std::move(source), std::move(decomposition), std::move(axes), false});
}

std::vector<BiplotPoint> biplot_coordinates(const NegaAnalysis& analysis, int axis_x, int axis_y) {
    const int axes = analysis.axis_count();
    if (axis_x < 1 || axis_x > axes || axis_y < 1 || axis_y > axes)
        throw std::invalid_argument("biplot_coordinates: axis out of range");
    const FactorScores& ax = analysis.axes[axis_x - 1];
    const FactorScores& ay = analysis.axes[axis_y - 1];
    const RankDataset& base = analysis.source.base;
    std::vector<BiplotPoint> points;
    points.reserve(base.pattern_count() + base.item_count() + 1);
    for (int i = 0; i < base.pattern_count(); ++i)
        points.push_back({base.pattern(i).label, ax.f(i), ay.f(i), BiplotPoint::Kind::Voter});
    for (int j = 0; j < base.item_count(); ++j)
        points.push_back({base.items().label(j), ax.g(j), ay.g(j), BiplotPoint::Kind::Item});
    const int nega_row = base.pattern_count();
    points.push_back({"NEGA", ax.f(nega_row), ay.f(nega_row), BiplotPoint::Kind::Nega});
    return points;
}

} // namespace tcarank
