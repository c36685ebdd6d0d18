#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "obstruct/analysis/analyzer.hpp"
#include "obstruct/core/error.hpp"
#include "obstruct/io/input.hpp"
#include "obstruct/io/render.hpp"
#include "obstruct/io/report_json.hpp"
#include "support/oracles.hpp"
#include "support/worked_tables.hpp"

using namespace obstruct;

namespace {

const char* kSquareJson = R"({
  "points": ["x", "a", "b", "y"],
  "distances": [[0, 1, 1, 1], [1, 0, 2, 1], [1, 2, 0, 1], [1, 1, 1, 0]],
  "cover": {"X": ["x", "a", "b"], "Y": ["a", "b", "y"]},
  "r": 1
})";

}  // namespace

TEST_CASE("distance matrix JSON with an embedded cover and radius") {
    auto doc = parse_distance_json(kSquareJson);
    REQUIRE(doc.space);
    CHECK_FALSE(doc.complex);
    CHECK(doc.space->size() == 4);
    CHECK(doc.space->d(doc.labels().id("a"), doc.labels().id("b")) == Distance(2));
    CHECK(doc.space->d(doc.labels().id("x"), doc.labels().id("y")) == Distance(1));
    REQUIRE(doc.cover);
    CHECK(doc.cover->x == std::vector<std::string>{"x", "a", "b"});
    CHECK(doc.radius == Distance(1));
    auto [x, y] = resolve_cover(doc.labels(), *doc.cover);
    CHECK(x == VertexSet{0, 1, 2});
    CHECK(y == VertexSet{1, 2, 3});
}

TEST_CASE("distance JSON accepts exact strings and infinity") {
    auto doc = parse_distance_json(R"({"points": ["p", "q", "s"],
        "distances": [[0, "3/2", "inf"], ["3/2", 0, 0.25], ["inf", 0.25, 0]]})");
    CHECK(doc.space->d(0, 1) == Distance(Rational(3, 2)));
    CHECK(doc.space->d(1, 2) == Distance(Rational(1, 4)));
    CHECK(doc.space->d(0, 2).is_infinite());
    CHECK_FALSE(doc.radius);
}

TEST_CASE("distance JSON errors") {
    CHECK_THROWS_AS(parse_distance_json("{"), InvalidInput);
    CHECK_THROWS_AS(parse_distance_json(R"({"points": ["a"]})"), InvalidInput);
    CHECK_THROWS_AS(parse_distance_json(R"({"points": ["a", "b"], "distances": [[0, 1], [2, 0]]})"),
                    InvalidInput);
    CHECK_THROWS_AS(parse_distance_json(R"({"points": ["a", "b"], "distances": [[1, 1], [1, 0]]})"),
                    InvalidInput);
    CHECK_THROWS_AS(parse_distance_json(R"({"points": ["a", "b"], "distances": [[0, -1], [-1, 0]]})"),
                    InvalidInput);
    CHECK_THROWS_AS(parse_distance_json(R"({"points": ["a", "a"], "distances": [[0, 1], [1, 0]]})"),
                    InvalidInput);
    CHECK_THROWS_AS(parse_distance_json(R"({"points": ["a", "b"], "distances": [[0, 1]]})"), InvalidInput);
}

TEST_CASE("lower-triangular CSV in its accepted shapes") {
    const std::string expected_rows[] = {
        // bare lower triangle, first row omitted
        "a,b,c\n1\n2,3\n",
        // leading corner cell and row labels
        ",a,b,c\na\nb,1\nc,2,3\n",
        // with the diagonal
        "a,b,c\n0\n1,0\n2,3,0\n",
        // full rows, comments and blank lines
        "# three points\na,b,c\n\n0,1,2\n1,0,3\n2,3,0\n",
    };
    for (const auto& text : expected_rows) {
        INFO(text);
        auto doc = parse_distance_csv(text);
        REQUIRE(doc.space);
        CHECK(doc.space->size() == 3);
        CHECK(doc.space->d(0, 1) == Distance(1));
        CHECK(doc.space->d(0, 2) == Distance(2));
        CHECK(doc.space->d(2, 1) == Distance(3));
    }
}

TEST_CASE("numeric CSV labels are not mistaken for row labels") {
    auto doc = parse_distance_csv("1,2,3\n4\n5,6\n");
    CHECK(doc.space->d(0, 1) == Distance(4));
    CHECK(doc.space->d(1, 2) == Distance(6));
}

TEST_CASE("CSV errors name the line") {
    try {
        parse_distance_csv("a,b,c\n1\n2,x\n");
        FAIL("expected InvalidInput");
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_distance_csv("a,b\n1,2,3\n"), InvalidInput);
    CHECK_THROWS_AS(parse_distance_csv("a,b,c\n1\n"), InvalidInput);
    CHECK_THROWS_AS(parse_distance_csv(""), InvalidInput);
}

TEST_CASE("the CSV transcription of every worked table matches the pair list") {
    for (const auto& t : {tables::square(), tables::six_point(), tables::seven_point(), tables::five_point(),
                          tables::eight_point(), tables::nine_point()}) {
        const auto space = t.space();
        std::string csv;
        for (std::size_t i = 0; i < t.labels.size(); ++i)
            csv += (i ? "," : "") + t.labels[i];
        csv += "\n";
        for (std::size_t i = 1; i < t.labels.size(); ++i) {
            csv += t.labels[i];
            for (std::size_t j = 0; j < i; ++j)
                csv += "," + space.d(static_cast<Vertex>(i), static_cast<Vertex>(j)).to_string();
            csv += "\n";
        }
        auto doc = parse_distance_csv(csv);
        CHECK(*doc.space == space);
    }
}

TEST_CASE("facet lists with string and integer labels") {
    auto doc = parse_facets_json(R"({"facets": [["u", "v", "w"], ["w", "t"]], "cover": {"X": ["u"], "Y": ["t"]}})");
    REQUIRE(doc.complex);
    CHECK_FALSE(doc.space);
    CHECK(doc.labels().names() == std::vector<std::string>{"t", "u", "v", "w"});
    CHECK(doc.complex->contains(Simplex{1, 2, 3}));
    CHECK(doc.complex->contains(Simplex{0, 3}));
    CHECK_FALSE(doc.complex->contains(Simplex{0, 1}));
    REQUIRE(doc.cover);

    auto num = parse_input(R"({"facets": [[10, 2], [2, 9]]})");
    CHECK(num.labels().names() == std::vector<std::string>{"2", "9", "10"});
    CHECK(num.complex->contains(Simplex{0, 2}));

    CHECK_THROWS_AS(parse_facets_json(R"({"facets": [[]]})"), InvalidInput);
    CHECK_THROWS_AS(parse_facets_json(R"({"facets": 3})"), InvalidInput);
    CHECK_THROWS_AS(parse_input(R"({"facets": [[1]], "points": ["a"], "distances": [[0]]})"), InvalidInput);
}

TEST_CASE("parse_input dispatches on content") {
    CHECK(parse_input(kSquareJson).space);
    CHECK(parse_input("a,b\n1\n").space);
    CHECK(parse_input(R"({"facets": [[1, 2]]})").complex);
}

TEST_CASE("cover files and label resolution") {
    auto c = parse_cover_json(R"({"X": ["a", "b"], "Y": ["b", "c"]})");
    CHECK(c == CoverSpec{{"a", "b"}, {"b", "c"}});
    CHECK_THROWS_AS(parse_cover_json(R"({"X": ["a"]})"), InvalidInput);
    CHECK_THROWS_AS(parse_cover_json("[]"), InvalidInput);
    LabelTable labels({"a", "b", "c"});
    CHECK_THROWS_AS(resolve_cover(labels, CoverSpec{{"a", "zz"}, {"c"}}), InvalidInput);
}

TEST_CASE("read_file reports a missing path") {
    CHECK_THROWS_AS(read_file("/nonexistent/obstruct/input.csv"), InvalidInput);
    const std::string path = "obstruct_io_test.tmp";
    std::ofstream(path) << "a,b\n1\n";
    CHECK(read_file(path) == "a,b\n1\n");
    std::remove(path.c_str());
}

TEST_CASE("coefficients and profiles round-trip through JSON") {
    for (const auto& c : {Coefficients::integers(), Coefficients::rationals(), Coefficients::prime(7)})
        CHECK(coefficients_from_json(to_json(c)) == c);
    auto rp2 = Complex::from_facets(tables::rp2_facets());
    for (bool reduced : {true, false}) {
        auto p = homology(rp2, Coefficients::integers(), 3, reduced);
        CHECK(profile_from_json(to_json(p)) == p);
    }
    auto m = induced_map(Complex::from_facets({{0, 1}, {1, 2}, {0, 2}}), Complex::from_facets({{0, 1, 2}}), 1,
                         Coefficients::prime(3));
    CHECK(induced_map_from_json(to_json(m)) == m);
}

TEST_CASE("reports round-trip through JSON") {
    for (const auto& t : {tables::square(), tables::five_point(), tables::eight_point()}) {
        auto r = analyze_metric(t.cover());
        CHECK(report_from_json(to_json(r)) == r);
        CHECK(report_from_json(nlohmann::json::parse(to_json(r).dump())) == r);
    }
    AnalyzeOptions no_verify;
    no_verify.verify = false;
    auto r = analyze(Complex::from_facets(tables::rp2_facets()), Cover::make(Complex::from_facets(tables::rp2_facets()),
                                                                              {1, 2, 3, 4}, {3, 4, 5, 6}),
                     no_verify);
    auto j = to_json(r);
    CHECK(j["verification"].is_null());
    CHECK(report_from_json(j) == r);

    j["verdicts"][0]["status"] = "maybe";
    CHECK_THROWS_AS(report_from_json(j), InvalidInput);
    CHECK_THROWS_AS(report_from_json(nlohmann::json::array()), InvalidInput);
}

TEST_CASE("text rendering") {
    auto k = vietoris_rips(tables::square().space(), 1, 3);
    auto counts = simplex_counts(k, 3);
    CHECK(counts == std::vector<std::size_t>{4, 5, 2, 0});
    CHECK(render_counts_text(counts).find("4 vertices, 5 edges") != std::string::npos);

    HomologyGroup g{1, {2}};
    CHECK(group_text(g, Coefficients::integers()) == "Z ⊕ Z/2");
    CHECK(group_text(HomologyGroup{2, {}}, Coefficients::rationals()) == "Q^2");
    CHECK(group_text(HomologyGroup{}, Coefficients::prime(2)) == "0");

    auto report = analyze_metric(tables::square().cover());
    auto text = render_report_text(report);
    CHECK(text.find("HOLDS        common-obstruction-vertex") != std::string::npos);
    CHECK(text.find("FAILS        contractible-obstructions") != std::string::npos);
    CHECK(text.find("sound: no discrepancies") != std::string::npos);
}
