#include <doctest.h>

#include <filesystem>
#include <random>

#include "helpers.hpp"
#include "tcarank/io.hpp"
#include "tcarank/svg.hpp"

using namespace tcarank;

TEST_CASE("orderings parser reads complete and tied rows") {
    const RankDataset ds = parse_orderings("ordering,weight\nA>B>C>D,137\nA>B>[C,D],166\n");
    REQUIRE(ds.pattern_count() == 2);
    CHECK(ds.items().labels() == std::vector<std::string>{"A", "B", "C", "D"});
    Eigen::VectorXd first(4), second(4);
    first << 3, 2, 1, 0;
    second << 3, 2, 0.5, 0.5;
    CHECK((ds.pattern(0).scores.array() == first.array()).all());
    CHECK(ds.pattern(0).weight == 137.0);
    CHECK(ds.pattern(0).label == "ABCD137");
    CHECK((ds.pattern(1).scores.array() == second.array()).all());
    CHECK(ds.pattern(1).label == "AB166");
}

TEST_CASE("orderings parser reports line numbers on bad input") {
    const auto line_of = [](const std::string& text) {
        try {
            parse_orderings(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("ordering,weight\nA>A>B,1\n") == 2);
    CHECK(line_of("ordering,weight\nA>B>C,1\nA>B,1\n") == 3);       // missing item
    CHECK(line_of("ordering,weight\nA>B>C,1\nA>B>X,1\n") == 3);     // unknown item
    CHECK(line_of("ordering,weight\nA>B,0\n") == 2);                // non-positive weight
    CHECK(line_of("ordering,weight\nA>B,-3\n") == 2);
    CHECK(line_of("ordering,weight\nA>B\n") == 2);                  // no weight field
    CHECK_THROWS_AS(parse_orderings(""), ParseError);
    CHECK_THROWS_AS(parse_orderings("ordering,weight\n"), ParseError);
    CHECK_THROWS_AS(parse_orderings("foo,bar\nA>B,1\n"), ParseError);
}

TEST_CASE("ranks parser maps ranks to scores, ties averaged") {
    const RankDataset ds = parse_ranks("A,B,C,D\n1,2,3,4\n4,3,2,1\n1,2,2,4\n");
    REQUIRE(ds.pattern_count() == 3);
    Eigen::VectorXd straight(4), reversed(4);
    straight << 3, 2, 1, 0;
    reversed << 0, 1, 2, 3;
    CHECK((ds.pattern(0).scores.array() == straight.array()).all());
    CHECK((ds.pattern(1).scores.array() == reversed.array()).all());

    // oracle: the tie rule over the tiers {A},{B,C},{D}
    const Eigen::VectorXd tied = borda_scores(Ordering{{{0}, {1, 2}, {3}}, 1.0}, 4);
    CHECK((ds.pattern(2).scores.array() == tied.array()).all());
    CHECK(ds.pattern(2).scores(1) == 1.5);
}

TEST_CASE("ranks parser accepts a weight column and rejects bad cells") {
    const RankDataset ds = parse_ranks("A,B,C,__weight\n1,2,3,10\n");
    REQUIRE(ds.pattern_count() == 1);
    CHECK(ds.pattern(0).weight == 10.0);

    CHECK_THROWS_AS(parse_ranks("A,B,C\n1,2,x\n"), ParseError);
    CHECK_THROWS_AS(parse_ranks("A,B,C\n1,2\n"), ParseError);
    CHECK_THROWS_AS(parse_ranks("A,B,C\n1,2,9\n"), ParseError); // rank out of range
    CHECK_THROWS_AS(parse_ranks(""), ParseError);
}

TEST_CASE("serialization round-trips parsed datasets exactly") {
    std::mt19937 rng(515);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 8);
        const int n = 1 + static_cast<int>(rng() % 10);
        RankDataset seed = testutil::random_complete(rng, d, n);
        if (trial % 2 == 1 && d > 2)
            seed = collapse_to_partial(seed, 1 + static_cast<int>(rng() % (d - 1)));
        // item order is taken from first appearance, so start from parsed text
        const RankDataset ds = parse_orderings(serialize_orderings(seed));
        const std::string text = serialize_orderings(ds);
        const RankDataset reparsed = parse_orderings(text);
        REQUIRE(reparsed.pattern_count() == ds.pattern_count());
        CHECK(reparsed.items() == ds.items());
        CHECK(serialize_orderings(reparsed) == text);
        for (int i = 0; i < ds.pattern_count(); ++i) {
            CHECK((reparsed.pattern(i).scores.array() == ds.pattern(i).scores.array()).all());
            CHECK(reparsed.pattern(i).weight == ds.pattern(i).weight);
            CHECK(reparsed.pattern(i).label == ds.pattern(i).label);
        }
        // the reparse carries the same orderings under the relabeling
        const Eigen::VectorXd beta_seed = mean_borda(seed);
        const Eigen::VectorXd beta_ds = mean_borda(ds);
        for (int j = 0; j < d; ++j)
            CHECK(beta_ds(j) == beta_seed(seed.items().index_of(ds.items().label(j))));
    }
}

TEST_CASE("fractional weights survive the round trip") {
    const std::string text = "ordering,weight\nA>B>C,0.125\nB>[A,C],2.5\n";
    const RankDataset ds = parse_orderings(text);
    CHECK(ds.pattern(0).weight == 0.125);
    CHECK(ds.pattern(1).weight == 2.5);
    CHECK(serialize_orderings(ds) == text);
}

TEST_CASE("svg emitter produces a deterministic standalone canvas") {
    const std::string empty = emit_svg({}, "axis 1", "axis 2");
    CHECK(empty.find("<?xml") == 0);
    CHECK(empty.find("<svg") != std::string::npos);
    CHECK(empty.find("</svg>") != std::string::npos);
    CHECK(empty.find("axis 1") != std::string::npos);

    std::vector<BiplotPoint> points = {
        {"ABCD137", 0.5, 0.25, BiplotPoint::Kind::Voter},
        {"A<B&C", 1.0, -1.0, BiplotPoint::Kind::Item},
        {"NEGA", -0.5, 0.0, BiplotPoint::Kind::Nega},
    };
    const std::string svg = emit_svg(points, "axis 1 (lambda=0.5801)", "axis 2");
    CHECK(svg == emit_svg(points, "axis 1 (lambda=0.5801)", "axis 2"));
    CHECK(svg.find("NEGA") != std::string::npos);
    CHECK(svg.find("A&lt;B&amp;C") != std::string::npos);
    CHECK(svg.find("<circle") != std::string::npos);
}

TEST_CASE("atomic writes replace files completely") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "tcarank_io_test";
    fs::create_directories(dir);
    const std::string path = (dir / "x.txt").string();
    write_file_atomic(path, "first");
    write_file_atomic(path, "second");
    CHECK(read_file(path) == "second");
    CHECK_FALSE(fs::exists(path + ".tmp"));
    fs::remove_all(dir);
    CHECK_THROWS_AS(read_file((dir / "missing.txt").string()), std::runtime_error);
}
