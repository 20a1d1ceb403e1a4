#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "helpers.hpp"
#include "tcarank/homogeneity.hpp"
#include "tcarank/tca.hpp"

using namespace tcarank;
using testutil::pearson;
using testutil::single_complete_pattern;
using testutil::subset_by_labels;
using testutil::table1;

TEST_CASE("factor scores of a faithful single pattern follow the closed form") {
    for (int d : {4, 5, 8, 11}) {
        const NegaAnalysis analysis = analyze_nega(single_complete_pattern(d), 1);
        REQUIRE(analysis.axis_count() == 1);
        const double u = upper_bound_u(d);
        CHECK(analysis.voter_scores(1)(0) == doctest::Approx(u).epsilon(1e-12));
        CHECK(analysis.nega_score(1) == doctest::Approx(-u).epsilon(1e-12));
        for (int j = 0; j < d; ++j) {
            const double expected = (d - 2.0 * (j + 1) + 1.0) / (d - 1.0); // oracle formula
            CHECK(analysis.axes[0].g(j) == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("a uniform tie pattern has no non-trivial axes") {
    Eigen::VectorXd flat = Eigen::VectorXd::Constant(4, 1.5);
    const RankDataset ds(testutil::letter_items(4), {{flat, 3.0, ""}});
    const NegaAnalysis analysis = analyze_nega(ds, 3);
    CHECK(analysis.axis_count() == 0);
    CHECK(analysis.lambda1() == 0.0);
}

TEST_CASE("fix_nega_sign orients axis one against the nega row") {
    NegaAnalysis analysis = analyze_nega(testutil::load_fixture("artificial2.csv"), 2);
    REQUIRE(analysis.axis_count() >= 1);
    CHECK(analysis.nega_score(1) == doctest::Approx(-4.0 / 7.0).epsilon(1e-12));
    CHECK(analysis.nega_identities_hold);

    // flipping by hand and re-fixing restores the orientation, lambda intact
    const double lambda_before = analysis.lambda1();
    NegaAnalysis flipped = analysis;
    flipped.decomposition.factors[0].u = -flipped.decomposition.factors[0].u;
    flipped.decomposition.factors[0].v = -flipped.decomposition.factors[0].v;
    flipped.decomposition.factors[0].a = -flipped.decomposition.factors[0].a;
    flipped.decomposition.factors[0].b = -flipped.decomposition.factors[0].b;
    flipped.axes[0].f = -flipped.axes[0].f;
    flipped.axes[0].g = -flipped.axes[0].g;
    CHECK(flipped.nega_score(1) > 0.0);
    const NegaAnalysis refixed = fix_nega_sign(flipped);
    CHECK(refixed.nega_score(1) <= 0.0);
    CHECK(refixed.lambda1() == lambda_before);
    CHECK((refixed.axes[0].f.array() == analysis.axes[0].f.array()).all());

    // an already correctly oriented analysis is unchanged
    const NegaAnalysis same = fix_nega_sign(analysis);
    CHECK((same.axes[0].f.array() == analysis.axes[0].f.array()).all());
}

TEST_CASE("the full political goals table splits 8 negative and 8 boundary patterns") {
    const NegaAnalysis analysis = analyze_nega(table1(), 3);
    const Eigen::VectorXd f1 = analysis.voter_scores(1);
    std::set<std::string> negative, boundary;
    for (int i = 0; i < analysis.voter_count(); ++i) {
        if (f1(i) < -kScoreEps)
            negative.insert(analysis.source.base.pattern(i).label);
        else if (std::abs(f1(i)) <= kScoreEps)
            boundary.insert(analysis.source.base.pattern(i).label);
    }
    CHECK(negative.size() == 8);
    CHECK(boundary.size() == 8);
    // together they are the 16 patterns the worked example eliminates
    std::set<std::string> eliminated = negative;
    eliminated.insert(boundary.begin(), boundary.end());
    std::set<std::string> expected;
    for (const auto& label : testutil::kPostmaterialist10) expected.insert(label);
    for (const auto& label : testutil::kMixed5) expected.insert(label);
    expected.insert("DACB30");
    CHECK(eliminated == expected);
}

TEST_CASE("materialist voter scores take exactly two values") {
    const NegaAnalysis analysis =
        analyze_nega(subset_by_labels(table1(), testutil::kMaterialist8), 3);
    const Eigen::VectorXd f1 = analysis.voter_scores(1);
    std::set<long long> distinct;
    for (int i = 0; i < f1.size(); ++i)
        distinct.insert(llround(f1(i) * 1e9));
    REQUIRE(distinct.size() == 2);
    CHECK(f1.minCoeff() == doctest::Approx(1.0 / 3.0).epsilon(1e-9)); // printed as 0.34 in the source table
    CHECK(f1.maxCoeff() == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("four-orderings subset pins every score at one half") {
    const NegaAnalysis analysis = analyze_nega(
        parse_orderings(read_file(testutil::fixture_path("four_orderings.csv"))), 3);
    CHECK(analysis.lambda1() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(analysis.nega_score(1)) == doctest::Approx(0.5).epsilon(1e-12));
    const Eigen::VectorXd f1 = analysis.voter_scores(1);
    for (int i = 0; i < f1.size(); ++i)
        CHECK(f1(i) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("weighted transitions hold per axis") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        const int d = 3 + static_cast<int>(rng() % 6);
        const int n = 1 + static_cast<int>(rng() % 12);
        const NegaAnalysis analysis = analyze_nega(testutil::random_complete(rng, d, n), 3);
        const auto& table = analysis.decomposition.table;
        for (std::size_t axis = 0; axis < analysis.axes.size(); ++axis) {
            const auto& factor = analysis.decomposition.factors[axis];
            const auto& scores = analysis.axes[axis];
            const double row_side = factor.v.dot(table.row_masses.cwiseProduct(scores.f));
            const double col_side = factor.u.dot(table.col_masses.cwiseProduct(scores.g));
            CHECK(std::abs(row_side - scores.lambda) < 1e-10);
            CHECK(std::abs(col_side - scores.lambda) < 1e-10);
        }
    }
}

TEST_CASE("nega-row identities hold on homogeneous data") {
    const NegaAnalysis analysis =
        analyze_nega(subset_by_labels(table1(), testutil::kMaterialist8), 3);
    REQUIRE(analysis.nega_identities_hold);
    const int nega_row = analysis.voter_count();

    // corr(g1, beta) = 1
    const Eigen::VectorXd beta = mean_borda(analysis.source.base);
    CHECK(pearson(analysis.axes[0].g, beta) == doctest::Approx(1.0).epsilon(1e-10));

    // lambda1 equals twice the taxicab norm of the centered nega row
    const Eigen::MatrixXd residual = center(analysis.decomposition.table);
    CHECK(analysis.lambda1() ==
          doctest::Approx(2.0 * residual.row(nega_row).lpNorm<1>()).epsilon(1e-10));

    // the nega row vanishes after deflating axis one
    const Eigen::MatrixXd deflated = deflate(residual, analysis.decomposition.factors[0]);
    CHECK(deflated.row(nega_row).cwiseAbs().maxCoeff() < 1e-10);

    // f1(nega) = 2 a1(nega): the nega row carries mass one half
    CHECK(analysis.nega_score(1) ==
          doctest::Approx(2.0 * analysis.decomposition.factors[0].a(nega_row)).epsilon(1e-12));
}

namespace {

// Gap between the best and second-best candidate dispersion; a tied first
// place means the axis itself is ambiguous.
double candidate_gap(const Eigen::MatrixXd& m) {
    const int cols = static_cast<int>(m.cols());
    double best = -1.0, second = -1.0;
    for (unsigned mask = 0; mask < (1u << (cols - 1)); ++mask) {
        Eigen::VectorXd u(cols);
        u(0) = 1.0;
        for (int j = 1; j < cols; ++j) u(j) = (mask >> (j - 1)) & 1u ? 1.0 : -1.0;
        const double lambda = (m * u).lpNorm<1>();
        if (lambda > best) {
            second = best;
            best = lambda;
        } else if (lambda > second) {
            second = lambda;
        }
    }
    return best - second;
}

} // namespace

TEST_CASE("merging identical profiles does not change the analysis") {
    std::mt19937 rng(77);
    int compared = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 4 + static_cast<int>(rng() % 3);
        const RankDataset base =
            merge_identical_patterns(testutil::random_complete(rng, d, 6));
        const int n0 = base.pattern_count();
        if (n0 < 2) continue;
        std::vector<RankPattern> doubled(base.patterns().begin(), base.patterns().end());
        RankPattern dup = doubled[1];
        dup.weight = 3.0;
        dup.label.clear();
        doubled.push_back(dup);
        const RankDataset with_dup(base.items(), std::move(doubled));
        const RankDataset merged = merge_identical_patterns(with_dup);
        REQUIRE(merged.pattern_count() == n0);
        CHECK(merged.pattern(1).weight == base.pattern(1).weight + 3.0);

        const NegaAnalysis a = analyze_nega(with_dup, 2);
        const NegaAnalysis b = analyze_nega(merged, 2);
        REQUIRE(a.axis_count() == b.axis_count());
        if (a.axis_count() == 0) continue;
        // the optimal dispersion is merge-invariant even when tied
        CHECK(a.axes[0].lambda == doctest::Approx(b.axes[0].lambda).epsilon(1e-10));

        // score comparisons need a unique factor in generic position: a tied
        // candidate, or a zero score whose sign fp noise may flip, leaves
        // the axis (and everything after deflation) ambiguous
        if (n0 + 1 <= d) continue;
        const Eigen::MatrixXd residual = center(a.decomposition.table);
        if (candidate_gap(residual) < 1e-7) continue;
        if (a.voter_scores(1).cwiseAbs().minCoeff() < 1e-7) continue;
        if (a.axes[0].g.cwiseAbs().minCoeff() < 1e-7) continue;
        ++compared;
        CHECK((a.axes[0].g - b.axes[0].g).cwiseAbs().maxCoeff() < 1e-9);
        CHECK(a.axes[0].f(1) == doctest::Approx(b.axes[0].f(1)).epsilon(1e-9));
        CHECK(a.axes[0].f(n0) == doctest::Approx(b.axes[0].f(1)).epsilon(1e-9));

        if (a.axis_count() < 2) continue;
        CHECK(a.axes[1].lambda == doctest::Approx(b.axes[1].lambda).epsilon(1e-10));
        const Eigen::MatrixXd deflated = deflate(residual, a.decomposition.factors[0]);
        if (candidate_gap(deflated) < 1e-7) continue;
        if (a.voter_scores(2).cwiseAbs().minCoeff() < 1e-7) continue;
        if (a.axes[1].g.cwiseAbs().minCoeff() < 1e-7) continue;
        const double flip = (a.axes[1].g - b.axes[1].g).cwiseAbs().maxCoeff() <
                                    (a.axes[1].g + b.axes[1].g).cwiseAbs().maxCoeff()
                                ? 1.0
                                : -1.0;
        CHECK((a.axes[1].g - flip * b.axes[1].g).cwiseAbs().maxCoeff() < 1e-9);
        CHECK(a.axes[1].f(1) == doctest::Approx(flip * b.axes[1].f(1)).epsilon(1e-9));
        CHECK(a.axes[1].f(n0) == doctest::Approx(flip * b.axes[1].f(1)).epsilon(1e-9));
    }
    CHECK(compared >= 10);
}

TEST_CASE("biplot coordinates place the expected points at the origin") {
    const NegaAnalysis materialists =
        analyze_nega(subset_by_labels(table1(), testutil::kMaterialist8), 3);
    REQUIRE(materialists.axis_count() == 3);
    for (const auto& point : biplot_coordinates(materialists, 2, 3)) {
        if (point.kind == BiplotPoint::Kind::Nega) {
            CHECK(std::abs(point.x) < 1e-9);
            CHECK(std::abs(point.y) < 1e-9);
        }
    }

    const NegaAnalysis postmaterialists =
        analyze_nega(subset_by_labels(table1(), testutil::kPostmaterialist10), 3);
    bool nega_origin = false, item_a_origin = false;
    for (const auto& point : biplot_coordinates(postmaterialists, 2, 3)) {
        if (point.kind == BiplotPoint::Kind::Nega)
            nega_origin = std::abs(point.x) < 1e-9 && std::abs(point.y) < 1e-9;
        if (point.kind == BiplotPoint::Kind::Item && point.label == "A")
            item_a_origin = std::abs(point.x) < 1e-9 && std::abs(point.y) < 1e-9;
    }
    CHECK(nega_origin);
    CHECK(item_a_origin);

    for (const auto& point : biplot_coordinates(materialists, 2, 2))
        CHECK(point.x == point.y);

    CHECK_THROWS_AS(biplot_coordinates(materialists, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(biplot_coordinates(materialists, 0, 1), std::invalid_argument);
}
