#include <catch2/catch_amalgamated.hpp>

#include "obstruct/analysis/analyzer.hpp"
#include "obstruct/core/error.hpp"
#include "obstruct/io/corpus.hpp"
#include "obstruct/io/input.hpp"
#include "support/worked_tables.hpp"

using namespace obstruct;

TEST_CASE("every worked example meets its expectations") {
    const auto& cases = corpus_cases();
    REQUIRE(cases.size() == 6);
    for (const auto& c : cases) {
        const CaseResult r = run_case(c);
        INFO(c.name << ": " << (r.mismatches.empty() ? "" : r.mismatches.front()));
        CHECK(r.passed());
        CHECK(r.checked > 0);
    }
}

TEST_CASE("case names are stable and lookup rejects unknown names") {
    std::vector<std::string> names;
    for (const auto& c : corpus_cases())
        names.push_back(c.name);
    CHECK(names == std::vector<std::string>{"square-4pt", "six-pt-entry", "seven-pt-independence", "five-pt-gluing",
                                            "eight-pt-s3", "nine-pt-circle"});
    CHECK(corpus_case("eight-pt-s3").r == 8);
    CHECK_THROWS_AS(corpus_case("ten-pt"), InvalidInput);
}

TEST_CASE("the corpus tables agree with the independently transcribed tables") {
    const std::vector<std::pair<std::string, tables::Table>> pairs = {
        {"square-4pt", tables::square()},          {"six-pt-entry", tables::six_point()},
        {"seven-pt-independence", tables::seven_point()}, {"five-pt-gluing", tables::five_point()},
        {"eight-pt-s3", tables::eight_point()},    {"nine-pt-circle", tables::nine_point()}};
    for (const auto& [name, t] : pairs) {
        INFO(name);
        const auto& c = corpus_case(name);
        const auto mc = c.metric_cover();
        const auto expected = t.cover();
        CHECK(mc.space == expected.space);
        CHECK(mc.x == expected.x);
        CHECK(mc.y == expected.y);
        CHECK(mc.r == expected.r);
        CHECK(*parse_distance_csv(c.csv).space == expected.space);
    }
}

TEST_CASE("a perturbed distance is caught as a homology mismatch") {
    // Pulling x1 next to a22 adds simplices that change the homology of K.
    const auto mutated = with_distance(corpus_case("eight-pt-s3"), "x1", "a22", 8);
    const CaseResult r = run_case(mutated);
    CHECK_FALSE(r.passed());
    bool homology = false;
    for (const auto& m : r.mismatches)
        homology = homology || m.find("homology mismatch") != std::string::npos;
    CHECK(homology);
    // The analyzer itself stays sound on the mutated table.
    CHECK(r.discrepancies.empty());
}

TEST_CASE("check_case flags a report that contradicts stated values") {
    const auto& c = corpus_case("square-4pt");
    auto report = analyze_metric(c.metric_cover(), c.options);
    REQUIRE(check_case(c, report).passed());
    for (auto& v : report.verdicts) {
        if (v.id == "common-obstruction-vertex")
            v.status = HypothesisStatus::Fails;
    }
    auto r = check_case(c, report);
    CHECK_FALSE(r.passed());
    REQUIRE_FALSE(r.mismatches.empty());
    CHECK(r.mismatches.front().rfind("[stated]", 0) == 0);
}

TEST_CASE("with_distance validates its labels") {
    CHECK_THROWS_AS(with_distance(corpus_case("square-4pt"), "x", "nowhere", 1), InvalidInput);
}
