#include <catch2/catch_amalgamated.hpp>

#include "obstruct/core/error.hpp"
#include "obstruct/metric/assumptions.hpp"
#include "support/oracles.hpp"
#include "support/worked_tables.hpp"

using namespace obstruct;

namespace {

DistanceSpace from_rows(std::vector<std::vector<long long>> rows) {
    std::vector<std::string> names;
    std::vector<std::vector<Distance>> m;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        names.push_back("p" + std::to_string(i));
        std::vector<Distance> r;
        for (auto v : rows[i])
            r.emplace_back(v);
        m.push_back(r);
    }
    return DistanceSpace(names, m);
}

// Random pseudometric: shortest paths over random positive weights.
DistanceSpace random_pseudometric(std::mt19937_64& rng, std::size_t n, const std::string& prefix,
                                  std::vector<std::string> names = {}) {
    std::uniform_int_distribution<int> w(0, 6);
    std::vector<std::vector<long long>> d(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j)
            d[i][j] = d[j][i] = w(rng);
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        }
    }
    if (names.empty()) {
        for (std::size_t i = 0; i < n; ++i)
            names.push_back(prefix + std::to_string(i));
    }
    std::vector<std::vector<Distance>> m;
    for (auto& row : d) {
        std::vector<Distance> r;
        for (auto v : row)
            r.emplace_back(v);
        m.push_back(r);
    }
    return DistanceSpace(names, m);
}

}  // namespace

TEST_CASE("distance parsing is exact") {
    CHECK(Distance::parse("3") == Distance(3));
    CHECK(Distance::parse("1/2").value() == Rational(1, 2));
    CHECK(Distance::parse("0.25").value() == Rational(1, 4));
    CHECK(Distance::parse("2.5e-1").value() == Rational(1, 4));
    CHECK(Distance::parse("1E2") == Distance(100));
    CHECK(Distance::parse("inf").is_infinite());
    CHECK(Distance::parse("∞").is_infinite());
    CHECK(Distance::parse("4/2").to_string() == "2");
    CHECK_THROWS_AS(Distance::parse("-1"), InvalidInput);
    CHECK_THROWS_AS(Distance::parse("1/0"), InvalidInput);
    CHECK_THROWS_AS(Distance::parse("abc"), InvalidInput);
    CHECK(Distance::infinity() > Distance(1000000));
    CHECK((Distance(1) + Distance::infinity()).is_infinite());
}

TEST_CASE("validate reports symmetry and reflexivity violations") {
    CHECK(validate(tables::nine_point().space()).empty());
    auto asym = from_rows({{0, 1}, {2, 0}});
    auto v = validate(asym);
    REQUIRE(v.size() == 1);
    CHECK(v[0] == Violation{Violation::Kind::Symmetry, 0, 1});
    std::vector<std::vector<Distance>> m{{Distance::parse("1/2"), 1}, {1, 0}};
    auto refl = validate(DistanceSpace({"a", "b"}, m));
    REQUIRE(refl.size() == 1);
    CHECK(refl[0].kind == Violation::Kind::Reflexivity);
    CHECK_THROWS_AS(DistanceSpace({"a", "b"}, {{0, 1}}), InvalidInput);
}

TEST_CASE("triangle inequality") {
    CHECK(is_pseudometric(tables::eight_point().space()));
    auto bad = from_rows({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}});
    auto w = triangle_violation(bad);
    REQUIRE(w);
    CHECK(*w == std::array<Vertex, 3>{0, 1, 2});
}

TEST_CASE("diameter") {
    auto t = tables::nine_point();
    auto s = t.space();
    CHECK(diam(s, {t.id("z1")}) == Distance(0));
    CHECK(diam(s, make_vertex_set({t.id("z1"), t.id("z4"), t.id("z7")})) == Distance(3));
    CHECK_THROWS_AS(diam(s, {}), InvalidInput);
    std::mt19937_64 rng(3);
    auto r = random_pseudometric(rng, 7, "p");
    for (int trial = 0; trial < 20; ++trial) {
        auto sub = oracle::random_subset(rng, r.all_points(), 0.5);
        if (sub.empty())
            continue;
        Distance best = 0;
        for (auto i : sub)
            for (auto j : sub)
                best = std::max(best, r.d(i, j));
        CHECK(diam(r, sub) == best);
    }
}

TEST_CASE("Vietoris-Rips uses the closed threshold") {
    auto t = tables::nine_point();
    auto s = t.space();
    CHECK(vietoris_rips(s, 1, 2).count(1) == 9);
    CHECK(vietoris_rips(s, 0, 2).count(1) == 0);
    CHECK(vietoris_rips(s, 4, 2).count(1) == 36);
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        auto d = random_pseudometric(rng, 7, "p");
        auto k1 = vietoris_rips(d, 2, 4);
        auto k2 = vietoris_rips(d, 3, 4);
        for (const auto& e : k1.all_simplices())
            CHECK(k2.contains(e));
        auto x = oracle::random_subset(rng, d.all_points(), 0.5);
        auto sub = vietoris_rips(d.subspace(x), 2, 4);
        // Relabel the subspace back to the original ids.
        std::vector<Simplex> mapped;
        for (const auto& s2 : sub.all_simplices()) {
            std::vector<Vertex> vs;
            for (auto v : s2)
                vs.push_back(x[v]);
            mapped.emplace_back(vs);
        }
        CHECK(mapped == restriction(k1, x).all_simplices());
    }
}

TEST_CASE("tolerance mode widens every threshold by epsilon") {
    std::vector<std::vector<Distance>> m{{0, Distance::parse("1.0000001")}, {Distance::parse("1.0000001"), 0}};
    DistanceSpace exact({"a", "b"}, m);
    CHECK(vietoris_rips(exact, 1, 1).count(1) == 0);
    auto loose = exact.with_tolerance(Distance::parse("1e-6"));
    CHECK(vietoris_rips(loose, 1, 1).count(1) == 1);
}

TEST_CASE("metric gluing") {
    auto t = tables::eight_point();
    auto mc = t.cover();
    CHECK(is_metric_gluing(mc.space, mc.x, mc.y));
    CHECK(mc.space.d(t.id("x1"), t.id("y1")) == Distance(8));

    // Glue the two halves back together and recover the printed cross distances.
    auto dx = mc.space.subspace(mc.x);
    auto dy = mc.space.subspace(mc.y);
    auto glued = glue(dx, dy, {"a11", "a12", "a21", "a22"});
    CHECK(glued.warnings.empty());
    const auto& g = glued.space;
    for (const auto& p : std::vector<std::string>{"x1", "x2"}) {
        for (const auto& q : std::vector<std::string>{"y1", "y2"})
            CHECK(g.d(g.labels().id(p), g.labels().id(q)) == mc.space.d(t.id(p), t.id(q)));
    }
    CHECK(is_metric_gluing(g, glued.x, glued.y));

    // A = X degenerates to dX.
    auto whole = glue(mc.space, dx, dx.labels().names());
    CHECK(whole.space.matrix() == mc.space.matrix());

    CHECK_THROWS_AS(glue(dx, dy, {"a11"}), GluingMismatch);

    // Unit square split into two paths; the straight diagonal beats any detour.
    std::vector<std::vector<Distance>> sq{{0, 1, 1, Distance::parse("7/5")},
                                          {1, 0, Distance::parse("7/5"), 1},
                                          {1, Distance::parse("7/5"), 0, 1},
                                          {Distance::parse("7/5"), 1, 1, 0}};
    DistanceSpace square({"p", "q", "s", "t"}, sq);
    CHECK_FALSE(is_metric_gluing(square, {0, 1, 2}, {1, 2, 3}));
    CHECK(metric_gluing_violation(square, {0, 1, 2}, {1, 2, 3}) == std::make_pair<Vertex, Vertex>(0, 3));
}

TEST_CASE("gluing random pseudometrics gives a pseudometric gluing that restricts correctly") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_pseudometric(rng, 3, "a");
        std::vector<std::string> xn = {"a0", "a1", "a2", "x0", "x1", "x2"};
        std::vector<std::string> yn = {"a0", "a1", "a2", "y0", "y1"};
        // Build both sides around the same A block.
        auto make_side = [&](const std::vector<std::string>& names) {
            auto base = random_pseudometric(rng, names.size(), "t", names);
            auto m = base.matrix();
            for (Vertex i = 0; i < 3; ++i)
                for (Vertex j = 0; j < 3; ++j)
                    m[i][j] = a.d(i, j);
            // Re-close so the overwritten block stays consistent.
            const auto n = names.size();
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        m[i][j] = std::min(m[i][j], m[i][k] + m[k][j]);
            return DistanceSpace(names, m);
        };
        auto dx = make_side(xn);
        auto dy = make_side(yn);
        bool same_a = true;
        for (Vertex i = 0; i < 3; ++i)
            for (Vertex j = 0; j < 3; ++j)
                same_a &= dx.d(i, j) == dy.d(i, j);
        if (!same_a)
            continue;  // shortcuts outside A changed the block
        auto g = glue(dx, dy, {"a0", "a1", "a2"});
        CHECK(is_pseudometric(g.space));
        CHECK(is_metric_gluing(g.space, g.x, g.y));
        CHECK(g.space.subspace(g.x).matrix() == dx.matrix());
    }
    auto p = from_rows({{0, 1}, {1, 0}});
    auto q = DistanceSpace({"u", "w"}, {{0, 2}, {2, 0}});
    auto g = glue(p, q, {});
    CHECK(g.warnings.size() == 1);
    CHECK(g.space.d(0, 2).is_infinite());
}

TEST_CASE("shared-neighbour assumption") {
    auto t = tables::square();
    auto r = check_assumption_I(t.cover());
    CHECK(r.holds);
    CHECK(r.witnesses == make_vertex_set({t.id("a"), t.id("b")}));

    auto s = from_rows({{0, 1, 5}, {1, 0, 5}, {5, 5, 0}});
    auto empty_a = MetricCover::make(s, {0, 2}, {1}, 1);
    CHECK_FALSE(check_assumption_I(empty_a).holds);
    auto unshared = MetricCover::make(s, {0, 2}, {1, 2}, 1);  // the cross edge 0-1 is far from A = {2}
    CHECK_FALSE(check_assumption_I(unshared).holds);
    auto far = MetricCover::make(from_rows({{0, 9, 1}, {9, 0, 1}, {1, 1, 0}}), {0, 2}, {1, 2}, 0);
    CHECK(check_assumption_I(far).holds);
}

TEST_CASE("sixty-degree condition") {
    auto line = from_rows({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
    CHECK(check_assumption_II(MetricCover::make(line, {0, 1}, {1, 2}, 1)).holds);
    auto wide = from_rows({{0, 2, 1}, {2, 0, 2}, {1, 2, 0}});
    auto r = check_assumption_II(MetricCover::make(wide, {0, 1}, {1, 2}, 1));
    CHECK_FALSE(r.holds);
    CHECK(*r.witness == std::array<Vertex, 3>{0, 2, 1});
    CHECK_FALSE(check_assumption_II(MetricCover::make(line, {0, 1}, {2}, 1)).holds);

    // Star metric: far arms and a tight core, so d(x,y) >= diam(A) everywhere.
    auto star = from_rows({{0, 1, 1, 10}, {1, 0, 1, 9}, {1, 1, 0, 9}, {10, 9, 9, 0}});
    auto mc = MetricCover::make(star, {0, 1, 2}, {1, 2, 3}, 2);
    CHECK(check_diameter_bound(mc).holds);
    auto tight = MetricCover::make(from_rows({{0, 5, 5, 1}, {5, 0, 6, 5}, {5, 6, 0, 5}, {1, 5, 5, 0}}),
                                   {0, 1, 2}, {1, 2, 3}, 2);
    CHECK_FALSE(check_diameter_bound(tight).holds);
}

TEST_CASE("simplex assumptions") {
    CHECK(check_simplex_assumption(tables::eight_point().cover()).holds);
    CHECK(check_strong_simplex_assumption(tables::eight_point().cover()).holds);
    CHECK(check_simplex_assumption(tables::five_point().cover()).holds);

    // a, b at distance 2r both seen from a cross-edge endpoint.
    auto s = from_rows({{0, 1, 1, 1}, {1, 0, 2, 1}, {1, 2, 0, 1}, {1, 1, 1, 0}});
    auto mc = MetricCover::make(s, {0, 1, 2}, {1, 2, 3}, 1);
    auto w = check_simplex_assumption(mc);
    CHECK_FALSE(w.holds);
    CHECK(*w.witness == std::array<Vertex, 3>{0, 1, 2});

    // d(a,b) = r with d(a,v) = d(v,b) = r/2: simplex holds, strong fails.
    std::vector<std::vector<Distance>> m{
        {0, 1, Distance::parse("1/2"), Distance::parse("1/2")},
        {1, 0, Distance::parse("1/2"), 1},
        {Distance::parse("1/2"), Distance::parse("1/2"), 0, 1},
        {Distance::parse("1/2"), 1, 1, 0}};
    // points: a(0), b(1), v(2), y(3); X = {a,b,v}, Y = {a,b,y}
    auto mc2 = MetricCover::make(DistanceSpace({"a", "b", "v", "y"}, m), {0, 1, 2}, {0, 1, 3}, 1);
    CHECK(check_simplex_assumption(mc2).holds);
    CHECK_FALSE(check_strong_simplex_assumption(mc2).holds);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        auto d = random_pseudometric(rng, 6, "p");
        auto x = VertexSet{0, 1, 2, 3};
        auto y = VertexSet{2, 3, 4, 5};
        for (long long r : {1, 2, 3, 5}) {
            auto c = MetricCover::make(d, x, y, r);
            if (check_strong_simplex_assumption(c).holds)
                CHECK(check_simplex_assumption(c).holds);
            // A singleton A satisfying the sixty-degree condition has a shared neighbour.
            auto single = MetricCover::make(d, {0, 1, 2}, {2, 3, 4, 5}, r);
            if (check_assumption_II(single).holds)
                CHECK(check_assumption_I(single).holds);
        }
    }
}
