#include "tcarank/homogeneity.hpp"

#include <cmath>
#include <stdexcept>

#include "tcarank/errors.hpp"

namespace tcarank {

namespace {

constexpr double kBetaTol = 1e-9;
constexpr double kFaithfulTol = 1e-9;

} // namespace

ScenarioResult classify_scenario(const NegaAnalysis& analysis) {
    ScenarioResult result;
    const int n = analysis.voter_count();
    Eigen::VectorXd f1 = analysis.axes.empty() ? Eigen::VectorXd::Zero(n)
                                               : Eigen::VectorXd(analysis.voter_scores(1));
    double v1_weight = 0.0;
    double total_weight = 0.0;
    for (int i = 0; i < n; ++i) {
        const double w = analysis.source.base.pattern(i).weight;
        total_weight += w;
        if (f1(i) < -kScoreEps) {
            result.v1_indices.push_back(i);
            v1_weight += w;
        } else if (std::abs(f1(i)) <= kScoreEps) {
            result.boundary_indices.push_back(i);
        }
    }
    result.kind = result.v1_indices.empty() ? Scenario::Scen1 : Scenario::Scen2;
    result.v1_weight_fraction = total_weight > 0.0 ? v1_weight / total_weight : 0.0;
    return result;
}

double upper_bound_u(int item_count) {
    if (item_count < 1)
        throw std::invalid_argument("upper_bound_u: item count must be positive");
    const int m = (item_count + 1) / 2;
    return static_cast<double>(m) / (2 * m - 1);
}

double ghc(const NegaAnalysis& analysis) {
    if (classify_scenario(analysis).kind != Scenario::Scen1)
        throw NotHomogeneousError("GHC is defined only for globally homogeneous data");
    const double u = upper_bound_u(analysis.source.base.item_count());
    const double lambda1 = analysis.lambda1();
    if (lambda1 > u + 1e-8)
        throw std::logic_error("ghc: lambda1 exceeds the theoretical bound U(d)");
    return 100.0 * lambda1 / u;
}

PartitionResult faithful_partition(const NegaAnalysis& analysis) {
    const RankDataset& base = analysis.source.base;
    const int d = base.item_count();
    PartitionResult result;
    Eigen::VectorXd g1 = analysis.axes.empty() ? Eigen::VectorXd::Zero(d)
                                               : analysis.axes.front().g;
    for (int j = 0; j < d; ++j) {
        if (g1(j) > kScoreEps)
            result.partition.plus.push_back(j);
        else if (g1(j) < -kScoreEps)
            result.partition.minus.push_back(j);
        else
            result.partition.zero.push_back(j);
    }
    const Eigen::VectorXd beta = mean_borda(base);
    const double mid = 0.5 * (d - 1);
    const int m = d / 2;
    bool faithful;
    if (d % 2 == 0) {
        faithful = static_cast<int>(result.partition.plus.size()) == m &&
                   static_cast<int>(result.partition.minus.size()) == m;
    } else {
        faithful = static_cast<int>(result.partition.plus.size()) == m &&
                   static_cast<int>(result.partition.minus.size()) == m &&
                   result.partition.zero.size() == 1;
    }
    for (int j : result.partition.plus)
        faithful = faithful && beta(j) > mid + kBetaTol;
    for (int j : result.partition.minus)
        faithful = faithful && beta(j) < mid - kBetaTol;
    for (int j : result.partition.zero)
        faithful = faithful && std::abs(beta(j) - mid) <= kBetaTol;
    result.faithful = faithful;
    return result;
}

std::vector<int> faithful_voters(const NegaAnalysis& analysis) {
    std::vector<int> voters;
    if (analysis.axes.empty()) return voters;
    const double u = upper_bound_u(analysis.source.base.item_count());
    const Eigen::VectorXd f1 = analysis.voter_scores(1);
    for (int i = 0; i < analysis.voter_count(); ++i)
        if (std::abs(f1(i) - u) <= kFaithfulTol) voters.push_back(i);
    return voters;
}

std::vector<int> crossing_counts(const RankDataset& ds, const ItemPartition& partition) {
    const int d = ds.item_count();
    std::vector<char> covered(d, 0);
    for (const auto* block : {&partition.plus, &partition.zero, &partition.minus}) {
        for (int j : *block) {
            if (j < 0 || j >= d || covered[j])
                throw std::invalid_argument("crossing_counts: malformed partition");
            covered[j] = 1;
        }
    }
    for (char c : covered)
        if (!c) throw std::invalid_argument("crossing_counts: partition does not cover all items");

    const double mid = 0.5 * (d - 1);
    std::vector<int> counts;
    counts.reserve(ds.pattern_count());
    for (const auto& p : ds.patterns()) {
        int crossings = 0;
        for (int j : partition.plus)
            if (p.scores(j) < mid - kBetaTol) ++crossings;
        for (int j : partition.minus)
            if (p.scores(j) > mid + kBetaTol) ++crossings;
        counts.push_back(crossings);
    }
    return counts;
}

HomogeneityReport homogeneity_report(const NegaAnalysis& analysis) {
    if (classify_scenario(analysis).kind != Scenario::Scen1)
        throw NotHomogeneousError("homogeneity report is defined only for Scen1 data");
    HomogeneityReport report;
    report.lambda1 = analysis.lambda1();
    report.u_d = upper_bound_u(analysis.source.base.item_count());
    report.ghc_percent = ghc(analysis);
    PartitionResult partition = faithful_partition(analysis);
    report.partition = std::move(partition.partition);
    report.faithful_partition = partition.faithful;
    report.faithful_voters = faithful_voters(analysis);
    report.crossings = crossing_counts(analysis.source.base, report.partition);
    report.beta = mean_borda(analysis.source.base);
    return report;
}

HomogeneityReport homogeneity_report(const RankDataset& ds) {
    return homogeneity_report(analyze_nega(ds, 1));
}

} // namespace tcarank
