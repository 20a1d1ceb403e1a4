#ifndef TCARANK_HOMOGENEITY_HPP
#define TCARANK_HOMOGENEITY_HPP

#include <vector>

#include "tcarank/tca.hpp"

namespace tcarank {

// Sign/zero tolerance for factor scores. Table entries are rationals with
// denominators bounded by n d(d-1), far above this at desk scale.
inline constexpr double kScoreEps = 1e-10;

enum class Scenario { Scen1, Scen2 };

// Law-of-contradiction classification of a sign-fixed analysis. Scen1
// (globally homogeneous) holds iff no voter scores below -eps on axis 1.
struct ScenarioResult {
    Scenario kind = Scenario::Scen1;
    std::vector<int> v1_indices;       // voters with f11 < -eps (empty for Scen1)
    std::vector<int> boundary_indices; // voters with |f11| <= eps
    double v1_weight_fraction = 0.0;   // weight of v1_indices over the analyzed subset
};

ScenarioResult classify_scenario(const NegaAnalysis& analysis);

// U(d) = ceil(d/2) / (2 ceil(d/2) - 1), the largest attainable lambda1 for
// globally homogeneous rank data; U(1) = 1.
double upper_bound_u(int item_count);

// Global homogeneity coefficient, 100 lambda1 / U(d). Defined only for
// Scen1 data; throws NotHomogeneousError otherwise.
double ghc(const NegaAnalysis& analysis);

// First-axis split of the items by the sign of g1.
struct ItemPartition {
    std::vector<int> plus;  // g1 > eps
    std::vector<int> zero;  // |g1| <= eps
    std::vector<int> minus; // g1 < -eps
};

struct PartitionResult {
    ItemPartition partition;
    bool faithful = false;
};

// Partition plus the faithfulness test: block sizes m/m (even d) or m/1/m
// (odd d) and mean scores ordered beta(minus) < (d-1)/2 < beta(plus), the
// middle block sitting at (d-1)/2.
PartitionResult faithful_partition(const NegaAnalysis& analysis);

// Voters whose first factor score equals U(d) (within 1e-9); their
// rankings are intra-block permutations.
std::vector<int> faithful_voters(const NegaAnalysis& analysis);

// Per-pattern count of score assignments violating the block partition: a
// score below (d-1)/2 on a plus item or above it on a minus item.
std::vector<int> crossing_counts(const RankDataset& ds, const ItemPartition& partition);

struct HomogeneityReport {
    double lambda1 = 0.0;
    double u_d = 0.0;
    double ghc_percent = 0.0;
    ItemPartition partition;
    bool faithful_partition = false;
    std::vector<int> faithful_voters;
    std::vector<int> crossings; // per pattern
    Eigen::VectorXd beta;
};

HomogeneityReport homogeneity_report(const NegaAnalysis& analysis);
HomogeneityReport homogeneity_report(const RankDataset& ds);

} // namespace tcarank

#endif
