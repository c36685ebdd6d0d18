#include <catch2/catch_amalgamated.hpp>

#include "obstruct/core/error.hpp"
#include "obstruct/homology/certificate.hpp"
#include "obstruct/homology/homology.hpp"
#include "obstruct/metric/distance_space.hpp"
#include "support/oracles.hpp"
#include "support/worked_tables.hpp"

using namespace obstruct;
using Kind = ContractibilityCertificate::Kind;

TEST_CASE("stars carry a central simplex containing their centre") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 30; ++t) {
        auto k = oracle::random_complex(rng, 7, 5, 4);
        for (const auto& sigma : k.all_simplices()) {
            auto st = star(k, sigma);
            auto cert = contractibility_certificate(st);
            REQUIRE(cert.kind == Kind::CentralSimplex);
            REQUIRE(sigma.is_face_of(*cert.central));
            REQUIRE(verify_certificate(st, cert));
        }
    }
}

TEST_CASE("the six-point obstruction is a cone on a3") {
    auto t = tables::six_point();
    auto k = vietoris_rips(t.space(), t.r, 3);
    VertexSet a = make_vertex_set({t.id("a1"), t.id("a2"), t.id("a3"), t.id("a4")});
    auto ob = obstruction(k, Simplex{t.id("x"), t.id("y")}, a);
    auto cert = contractibility_certificate(ob);
    CHECK(cert.kind == Kind::CentralSimplex);
    CHECK(*cert.central == Simplex{t.id("a3")});
}

TEST_CASE("no certificate for the hollow triangle, and none for the empty complex") {
    auto h = Complex::from_facets({{1, 2}, {2, 3}, {1, 3}});
    auto cert = contractibility_certificate(h);
    CHECK(cert.kind == Kind::None);
    CHECK_FALSE(verify_certificate(h, cert));
    CHECK_THROWS_AS(contractibility_certificate(Complex()), EmptyComplex);
}

TEST_CASE("collapse sequences replay to a point") {
    auto path = Complex::from_facets({{0, 1}, {1, 2}, {2, 3}});
    auto cert = contractibility_certificate(path);
    REQUIRE(cert.kind == Kind::CollapseSequence);
    CHECK(cert.collapses.size() == 3);
    CHECK(collapses_to_point(path, cert.collapses));
    // {1} lies in two edges, so it is not a free face.
    CHECK_FALSE(collapses_to_point(path, {Collapse{Simplex{1}, Simplex{1, 2}}}));
    CHECK_FALSE(collapses_to_point(path, {}));

    // Two triangles sharing an edge plus a tail: no cone point, but collapsible.
    auto k = Complex::from_facets({{0, 1, 2}, {1, 2, 3}, {3, 4}});
    auto c2 = contractibility_certificate(k);
    REQUIRE(c2.kind == Kind::CollapseSequence);
    CHECK(verify_certificate(k, c2));
}

TEST_CASE("flag complexes beyond their ceiling are not collapsed") {
    // Path 0-1-2-3 plus a triangle 3-4-5 listed with ceiling 1.
    auto k = Complex::flag({0, 1, 2, 3, 4, 5}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}}, 1);
    CHECK(contractibility_certificate(k).kind == Kind::None);
    CHECK(contractibility_certificate(k.with_dim_cap(2)).kind == Kind::CollapseSequence);
}

TEST_CASE("certified complexes are acyclic over every coefficient ring") {
    std::mt19937_64 rng(404);
    int certified = 0;
    for (int t = 0; t < 80; ++t) {
        auto k = oracle::random_flag(rng, 7, 0.6, 6);
        if (k.empty())
            continue;
        auto cert = contractibility_certificate(k);
        if (!cert.certified())
            continue;
        ++certified;
        REQUIRE(verify_certificate(k, cert));
        for (auto c : {Coefficients::integers(), Coefficients::rationals(), Coefficients::prime(2),
                       Coefficients::prime(3)})
            REQUIRE(homology(k, c, 4).trivial());
    }
    CHECK(certified > 10);
}
