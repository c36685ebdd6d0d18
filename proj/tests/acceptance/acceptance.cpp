// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// line fails. Frozen values come from the worked tables; the property suites
// compare the library against the brute-force oracles in tests/support.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "obstruct/analysis/analyzer.hpp"
#include "obstruct/analysis/checks.hpp"
#include "obstruct/homology/smith.hpp"
#include "obstruct/io/corpus.hpp"
#include "support/oracles.hpp"
#include "support/worked_tables.hpp"

using namespace obstruct;

namespace {

const Coefficients Q = Coefficients::rationals();
const Coefficients Z = Coefficients::integers();
const Coefficients F2 = Coefficients::prime(2);
const Coefficients F3 = Coefficients::prime(3);

using Bettis = std::vector<std::size_t>;

/// Every analyzer run, for the soundness gate.
struct Gate {
    std::size_t runs = 0;
    std::vector<std::string> discrepancies;

    DecompositionReport record(DecompositionReport r, const std::string& where) {
        ++runs;
        for (const auto& d : r.discrepancies)
            discrepancies.push_back(where + ": " + d);
        return r;
    }
};

Gate gate;

/// Collects failed expectations for one criterion.
struct Expect {
    std::vector<std::string> failures;

    void that(bool ok, const std::string& what) {
        if (!ok)
            failures.push_back(what);
    }
    template <class T>
    void equal(const T& got, const T& want, const std::string& what) {
        if (!(got == want)) {
            std::ostringstream s;
            s << what << ": got " << text(got) << ", want " << text(want);
            failures.push_back(s.str());
        }
    }

private:
    static std::string text(const Bettis& b) {
        std::string s = "(";
        for (std::size_t i = 0; i < b.size(); ++i)
            s += (i ? "," : "") + std::to_string(b[i]);
        return s + ")";
    }
    static std::string text(const std::string& s) { return s; }
    static std::string text(std::size_t n) { return std::to_string(n); }
};

Bettis head(Bettis b, std::size_t n) {
    b.resize(std::min(b.size(), n));
    return b;
}

Bettis profile_of(const DecompositionReport& r, const std::string& complex, const Coefficients& c) {
    if (!r.verification)
        return {};
    const HomologyProfile* p = r.verification->profile(complex, c);
    return p ? p->bettis(0) : Bettis{};
}

const InducedMap* map_of(const DecompositionReport& r, int degree, const Coefficients& c) {
    return r.verification ? r.verification->map(degree, c) : nullptr;
}

std::string status_of(const DecompositionReport& r, const std::string& id) {
    const CriterionVerdict* v = r.verdict(id);
    return v ? status_name(v->status) : "missing";
}

const ObstructionSummary* obstruction_of(const DecompositionReport& r, const std::vector<std::string>& simplex) {
    for (const auto& o : r.obstructions) {
        if (o.simplex == simplex)
            return &o;
    }
    return nullptr;
}

AnalyzeOptions fields(std::vector<Coefficients> f, int dim_cap = 4) {
    AnalyzeOptions o;
    o.fields = std::move(f);
    o.dim_cap = dim_cap;
    return o;
}

struct Outcome {
    bool pass;
    std::string summary;
};

Outcome finish(const Expect& e, const std::string& ok_summary) {
    if (e.failures.empty())
        return {true, ok_summary};
    std::string s = e.failures.front();
    if (e.failures.size() > 1)
        s += " (+" + std::to_string(e.failures.size() - 1) + " more)";
    return {false, s};
}

Outcome nine_point_circle() {
    Expect e;
    auto r = gate.record(analyze_metric(tables::nine_point().cover(), fields({Q, F2})), "nine-point");
    e.equal(profile_of(r, "K", Q), Bettis{0, 0, 2, 0, 0}, "reduced Betti over Q");
    e.equal(profile_of(r, "K", F2), Bettis{0, 0, 2, 0, 0}, "reduced Betti over F2");
    // Independent recount by dense elimination over the brute-force face set.
    auto faces = oracle::faces_of(vietoris_rips(tables::nine_point().space(), 3, 5));
    e.equal(oracle::reduced_betti(faces, 4), Bettis{0, 0, 2, 0, 0}, "oracle reduced Betti over Q");
    e.equal(oracle::reduced_betti(faces, 4, 2), Bettis{0, 0, 2, 0, 0}, "oracle reduced Betti over F2");
    return finish(e, "VR_3 reduced Betti (0,0,2,0,0) over Q and F2");
}

Outcome eight_point_gluing() {
    Expect e;
    auto r = gate.record(analyze_metric(tables::eight_point().cover(), fields({Q, Z, F2})), "eight-point");
    for (const auto& c : {Q, Z, F2}) {
        e.equal(profile_of(r, "K_X∪K_Y", c), Bettis{0, 0, 0, 0, 0}, "union reduced Betti over " + c.name());
        e.equal(head(profile_of(r, "K", c), 4), Bettis{0, 0, 0, 1}, "VR_8(Z) reduced Betti over " + c.name());
    }
    e.equal(status_of(r, "gluing-strong-simplex"), std::string("holds"), "strong simplex verdict");
    for (int d : {0, 1}) {
        const InducedMap* m = map_of(r, d, Q);
        e.that(m && m->iso(), "H_" + std::to_string(d) + " over Q is not an isomorphism");
    }
    const InducedMap* h3 = map_of(r, 3, Q);
    e.that(h3 && !h3->iso(), "H_3 over Q is an isomorphism, expected a mismatch");
    e.that(r.sound(), "analyzer reported a discrepancy");
    return finish(e, "union acyclic, K ~ S^3, strong simplex certified, H_0 H_1 iso, H_3 0 -> Q");
}

Outcome square() {
    Expect e;
    auto r = gate.record(analyze_metric(tables::square().cover()), "square");
    e.equal(head(profile_of(r, "K_X∪K_Y", Q), 2), Bettis{0, 1}, "union reduced Betti");
    e.equal(head(profile_of(r, "K", Q), 2), Bettis{0, 0}, "total reduced Betti");
    const InducedMap* h1 = map_of(r, 1, Q);
    e.that(h1 && h1->rank == 0, "H_1 map over Q does not have rank 0");
    e.equal(status_of(r, "common-obstruction-vertex"), std::string("holds"), "common obstruction vertex verdict");
    e.equal(status_of(r, "contractible-obstructions"), std::string("fails"), "contractible obstructions verdict");
    e.that(r.sound(), "analyzer reported a discrepancy");
    return finish(e, "union (0,1), K (0,0), H_1 rank 0, shared-vertex criterion holds, contractibility fails");
}

Outcome five_point_gluing() {
    Expect e;
    const auto mc = tables::five_point().cover();
    auto r = gate.record(analyze_metric(mc), "five-point");
    e.equal(head(profile_of(r, "K_X", Q), 2), Bettis{0, 1}, "VR_3(X) reduced Betti");
    e.equal(profile_of(r, "K", Q), Bettis{0, 0, 0, 0, 0}, "VR_3(Z) reduced Betti");
    const ObstructionSummary* o = obstruction_of(r, {"x1", "x2", "y"});
    e.that(o && o->status == "empty", "St({x1,x2,y},A) is not reported empty");
    const auto& l = mc.space.labels();
    auto faces = oracle::faces_of(vietoris_rips(mc.space, mc.r, 5));
    oracle::Face sigma = {l.id("x1"), l.id("x2"), l.id("y")};
    std::sort(sigma.begin(), sigma.end());
    e.that(faces.count(sigma) == 1 && oracle::obstruction(faces, sigma, mc.a).empty(),
           "oracle: St({x1,x2,y},A) is not empty");
    const InducedMap* h1 = map_of(r, 1, Q);
    e.that(h1 && h1->surjective && !h1->injective, "H_1 over Q is not onto-and-not-injective");
    e.that(r.sound(), "analyzer reported a discrepancy");
    return finish(e, "VR_3(X) (0,1), VR_3(Z) trivial, St({x1,x2,y},A) empty, H_1 onto, not injective");
}

Outcome six_and_seven() {
    Expect e;
    std::size_t cones = 0;
    for (const auto& [name, t] : {std::pair{std::string("six-point"), tables::six_point()},
                                  std::pair{std::string("seven-point"), tables::seven_point()}}) {
        auto r = gate.record(analyze_metric(t.cover()), name);
        e.equal(status_of(r, "contractible-obstructions"), std::string("holds"), name + " contractibility verdict");
        e.that(!r.obstructions.empty(), name + ": no obstructions listed");
        for (const auto& o : r.obstructions) {
            e.that(o.status == "cone", name + ": an obstruction lacks a cone certificate");
            cones += o.status == "cone";
        }
        for (int d = 0; d <= 3; ++d) {
            const InducedMap* m = map_of(r, d, Q);
            e.that(m && m->iso(), name + ": H_" + std::to_string(d) + " over Q is not an isomorphism");
        }
        e.that(r.sound(), name + ": analyzer reported a discrepancy");
    }
    return finish(e, std::to_string(cones) + " cone certificates, iso over Q in degrees 0..3 for both");
}

/// Random cover of the vertices with a nonempty overlap more often than not.
Cover random_cover(std::mt19937_64& rng, const Complex& k) {
    auto x = oracle::random_subset(rng, k.vertices(), 0.6);
    auto y = set_union(set_difference(k.vertices(), x), oracle::random_subset(rng, x, 0.5));
    if (x.empty())
        x = y;
    return Cover::make(k, x, y);
}

void soundness_run(std::mt19937_64& rng, const Complex& k, const std::string& where) {
    if (k.empty())
        return;
    gate.record(analyze(k, random_cover(rng, k), fields({Q, Z, F2}, 3)), where);
}

Outcome property_suites() {
    Expect e;
    std::mt19937_64 rng(20240601);
    std::size_t mv = 0, cofiber = 0, cofiber_simplices = 0, clique = 0, uct = 0, uct_torsion = 0, snf = 0;

    // (a) Mayer-Vietoris exactness.
    for (int t = 0; t < 120; ++t) {
        auto k = t % 2 ? oracle::random_complex(rng, 8, 6, 4) : oracle::random_flag(rng, 8, 0.5, 3);
        const Cover c = random_cover(rng, k);
        for (const auto& f : {Q, F2}) {
            auto r = mv_check(k, c.x, c.y, f, 3);
            e.that(r.ok, "Mayer-Vietoris: " + (r.problems.empty() ? std::string() : r.problems.front()));
        }
        ++mv;
        gate.record(analyze(k, c, fields({Q, Z, F2}, 3)), "mv instance " + std::to_string(t));
    }

    // (b) Suspension shift of the cofiber, every simplex.
    for (int t = 0; t < 60; ++t) {
        auto k = oracle::random_complex(rng, 7, 4, 4);
        const Coefficients c = t % 3 == 0 ? Z : t % 3 == 1 ? Q : F2;
        for (const auto& s : k.all_simplices()) {
            auto r = check_cofiber_shift(k, s, c, 3);
            e.that(r.ok, "cofiber shift: " + (r.problems.empty() ? std::string() : r.problems.front()));
            ++cofiber_simplices;
        }
        ++cofiber;
        soundness_run(rng, k, "cofiber instance " + std::to_string(t));
    }

    // (c) Clique intersection identity.
    for (int t = 0; t < 120; ++t) {
        auto k = oracle::random_flag(rng, 8, 0.55, 4);
        auto a = oracle::random_subset(rng, k.vertices(), 0.4);
        auto r = clique_identity_check(k, a, 3);
        e.that(r.ok, "clique identity: " + (r.problems.empty() ? std::string() : r.problems.front()));
        ++clique;
        soundness_run(rng, k, "clique instance " + std::to_string(t));
    }

    // (d) Universal coefficients. Half the instances carry a projective plane
    // so that 2-torsion is present.
    for (int t = 0; t < 80; ++t) {
        auto facets = std::vector<std::vector<Vertex>>();
        if (t % 2 == 0)
            facets = tables::rp2_facets();
        std::uniform_int_distribution<Vertex> v(0, 7);
        for (int f = 0; f < 4; ++f)
            facets.push_back({v(rng), v(rng), v(rng)});
        auto k = Complex::from_facets(facets);
        auto hz = homology(k, Z, 3);
        auto hq = homology(k, Q, 3);
        e.that(hq.bettis() == hz.bettis(), "UCT: rational Betti differ from integral ranks");
        for (const auto& f : {F2, F3}) {
            auto hp = homology(k, f, 3);
            for (int d = 0; d <= 3; ++d) {
                const std::size_t want = hz.betti(d) + hz.p_torsion_count(d, f.p) + hz.p_torsion_count(d - 1, f.p);
                e.that(hp.betti(d) == want, "UCT over " + f.name() + " in degree " + std::to_string(d));
            }
        }
        bool torsion = false;
        for (int d = 0; d <= 3; ++d)
            torsion = torsion || !hz.torsion(d).empty();
        uct_torsion += torsion;
        ++uct;
        soundness_run(rng, k, "uct instance " + std::to_string(t));
    }
    e.that(uct_torsion > 0, "UCT suite never met torsion");

    // (e) Smith normal form rank against rational elimination.
    std::uniform_int_distribution<std::size_t> dim(1, 12);
    for (int t = 0; t < 240; ++t) {
        auto m = oracle::random_matrix(rng, dim(rng), dim(rng), t % 3 == 0 ? 1 : 9, 0.5);
        auto s = smith_normal_form(m);
        e.that(s.rank == oracle::rational_rank(m), "SNF rank differs from rational elimination");
        ++snf;
    }

    std::ostringstream s;
    s << "MV " << mv << " complexes, cofiber " << cofiber << " complexes (" << cofiber_simplices
      << " simplices), clique " << clique << ", UCT " << uct << " (" << uct_torsion << " with torsion), SNF " << snf
      << " matrices";
    e.that(mv >= 100 && cofiber >= 50 && clique >= 100 && snf >= 200, "suite sizes below the required minimum");
    return finish(e, s.str());
}

Outcome soundness() {
    Expect e;
    for (const auto& c : corpus_cases()) {
        auto r = run_case(c);
        ++gate.runs;
        for (const auto& d : r.discrepancies)
            gate.discrepancies.push_back(c.name + ": " + d);
        e.that(r.passed(), "corpus case " + c.name + " failed");
    }
    for (const auto& d : gate.discrepancies)
        e.that(false, d);
    return finish(e, std::to_string(gate.runs) + " analyzer runs, no certified verdict contradicted");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"nine-point circle", nine_point_circle},
        {"eight-point gluing", eight_point_gluing},
        {"square", square},
        {"five-point gluing", five_point_gluing},
        {"six- and seven-point", six_and_seven},
        {"property suites", property_suites},
        {"soundness gate", soundness},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome o = criteria[i].second();
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << ": " << o.summary
                  << " [" << static_cast<long long>(ms) << " ms]\n";
    }
    return failed == 0 ? 0 : 1;
}
