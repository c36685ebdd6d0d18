#include "obstruct/io/corpus.hpp"

#include <chrono>
#include <sstream>

#include "obstruct/core/error.hpp"
#include "obstruct/io/input.hpp"

namespace obstruct {

namespace {

const Coefficients Q = Coefficients::rationals();
const Coefficients Z = Coefficients::integers();
const Coefficients F2 = Coefficients::prime(2);

constexpr Provenance kStated = Provenance::Stated;
constexpr Provenance kDerived = Provenance::Derived;
constexpr Provenance kImmediate = Provenance::Immediate;

const char* const kUnion = "K_X∪K_Y";

AnalyzeOptions options(std::vector<Coefficients> fields) {
    AnalyzeOptions o;
    o.dim_cap = 4;
    o.fields = std::move(fields);
    o.verify = true;
    return o;
}

std::vector<CorpusCase> build_cases() {
    std::vector<CorpusCase> out;

    CorpusCase sq;
    sq.name = "square-4pt";
    sq.description = "four points, r = 1: a shared neighbour exists but the cross edge sees two isolated vertices";
    sq.csv = "x,a,b,y\n"
             "x\n"
             "a,1\n"
             "b,1,2\n"
             "y,1,1,1\n";
    sq.x = {"x", "a", "b"};
    sq.y = {"a", "b", "y"};
    sq.r = 1;
    sq.options = options({Q, Z});
    sq.betti = {{kUnion, Q, {0, 1}, kStated}, {"K", Q, {0, 0}, kStated}, {kUnion, Z, {0, 1}, kDerived},
                {"K_A", Q, {1}, kImmediate}};
    sq.verdicts = {{"common-obstruction-vertex", HypothesisStatus::Holds, kStated},
                   {"shared-neighbour", HypothesisStatus::Holds, kStated},
                   {"contractible-obstructions", HypothesisStatus::Fails, kStated},
                   {"no-cross-simplices", HypothesisStatus::Fails, kImmediate}};
    sq.maps = {{0, Q, true, true, kDerived}, {1, Q, false, true, kStated}};
    sq.obstructions = {{{"x", "y"}, "homology-only", kStated}};
    out.push_back(sq);

    CorpusCase six;
    six.name = "six-pt-entry";
    six.description = "six points, r = 1: one cross edge whose obstruction is a path, so the inclusion is a weak "
                      "equivalence although the shared neighbours are not all of A";
    six.csv = "x,a1,a2,a3,a4,y\n"
              "x\n"
              "a1,1\n"
              "a2,2,1\n"
              "a3,1,1,2\n"
              "a4,1,2,1,1\n"
              "y,1,1,2,1,1\n";
    six.x = {"x", "a1", "a2", "a3", "a4"};
    six.y = {"a1", "a2", "a3", "a4", "y"};
    six.r = 1;
    six.options = options({Q, Z});
    six.betti = {{kUnion, Q, {0, 1}, kDerived}, {"K", Q, {0, 1}, kDerived}};
    six.verdicts = {{"contractible-obstructions", HypothesisStatus::Holds, kStated},
                    {"shared-neighbour-all", HypothesisStatus::Fails, kStated},
                    {"one-entry-point", HypothesisStatus::Holds, kDerived}};
    for (int d = 0; d <= 3; ++d)
        six.maps.push_back({d, Q, true, true, kStated});
    six.obstructions = {{{"x", "y"}, "cone", kStated}};
    out.push_back(six);

    CorpusCase seven;
    seven.name = "seven-pt-independence";
    seven.description = "seven points, r = 1: the two cross edges have different contractible obstructions";
    seven.csv = "x1,x2,a1,a2,a3,a4,y\n"
                "x1\n"
                "x2,1\n"
                "a1,1,2\n"
                "a2,1,1,1\n"
                "a3,2,1,1,2\n"
                "a4,1,1,2,1,1\n"
                "y,1,1,1,1,2,1\n";
    seven.x = {"x1", "x2", "a1", "a2", "a3", "a4"};
    seven.y = {"a1", "a2", "a3", "a4", "y"};
    seven.r = 1;
    seven.options = options({Q, Z});
    seven.betti = {{kUnion, Q, {0, 1}, kDerived}, {"K", Q, {0, 1}, kDerived}};
    seven.verdicts = {{"contractible-obstructions", HypothesisStatus::Holds, kStated},
                      {"shared-neighbour-set", HypothesisStatus::Fails, kStated}};
    for (int d = 0; d <= 3; ++d)
        seven.maps.push_back({d, Q, true, true, kStated});
    seven.obstructions = {{{"x1", "y"}, "cone", kStated},
                          {{"x2", "y"}, "cone", kStated},
                          {{"x1", "x2", "y"}, "cone", kStated}};
    out.push_back(seven);

    CorpusCase five;
    five.name = "five-pt-gluing";
    five.description = "five points, r = 3: a metric gluing with the simplex property whose 2-simplex "
                       "{x1,x2,y} has an empty obstruction";
    five.csv = "x1,x2,a1,a2,y\n"
               "x1\n"
               "x2,3\n"
               "a1,1,4\n"
               "a2,4,1,3\n"
               "y,3,3,2,2\n";
    five.x = {"x1", "x2", "a1", "a2"};
    five.y = {"a1", "a2", "y"};
    five.r = 3;
    five.options = options({Q, Z});
    five.betti = {{"K_X", Q, {0, 1}, kStated}, {"K_Y", Q, {0}, kStated},    {"K_A", Q, {0}, kStated},
                  {kUnion, Q, {0, 1}, kStated}, {"K", Q, {0, 0}, kStated}};
    five.verdicts = {{"gluing-simplex", HypothesisStatus::Holds, kStated},
                     {"gluing-strong-simplex", HypothesisStatus::Fails, kDerived},
                     {"contractible-obstructions", HypothesisStatus::Fails, kStated}};
    five.maps = {{0, Q, true, true, kStated}, {1, Q, false, true, kStated}};
    five.obstructions = {{{"x1", "y"}, "cone", kStated},
                         {{"x2", "y"}, "cone", kStated},
                         {{"x1", "x2", "y"}, "empty", kStated}};
    out.push_back(five);

    CorpusCase eight;
    eight.name = "eight-pt-s3";
    eight.description = "eight points, r = 8: the strong simplex property holds, the union is contractible and "
                        "the whole complex is a 3-sphere";
    eight.csv = "x1,x2,a11,a12,a21,a22,y1,y2\n"
                "x1\n"
                "x2,6\n"
                "a11,3,9\n"
                "a12,5,7,4\n"
                "a21,7,5,4,6\n"
                "a22,9,3,6,4,4\n"
                "y1,8,8,5,9,3,7\n"
                "y2,8,8,7,3,9,5,6\n";
    eight.x = {"x1", "x2", "a11", "a12", "a21", "a22"};
    eight.y = {"y1", "y2", "a11", "a12", "a21", "a22"};
    eight.r = 8;
    eight.options = options({Q, Z, F2});
    eight.betti = {{kUnion, Q, {0, 0, 0, 0, 0}, kStated}, {"K", Q, {0, 0, 0, 1, 0}, kStated},
                   {"K", Z, {0, 0, 0, 1, 0}, kStated},     {"K", F2, {0, 0, 0, 1, 0}, kDerived}};
    eight.verdicts = {{"gluing-strong-simplex", HypothesisStatus::Holds, kStated},
                      {"gluing-simplex", HypothesisStatus::Holds, kDerived},
                      {"contractible-obstructions", HypothesisStatus::Fails, kDerived}};
    eight.maps = {{0, Q, true, true, kStated},
                  {1, Q, true, true, kStated},
                  {2, Q, true, true, kDerived},
                  {3, Q, true, false, kStated}};
    eight.obstructions = {{{"x1", "x2", "y1", "y2"}, "empty", kDerived}};
    out.push_back(eight);

    CorpusCase nine;
    nine.name = "nine-pt-circle";
    nine.description = "nine points on a circle, r = 3: every obstruction is contractible and the complex is "
                       "a wedge of two 2-spheres";
    nine.csv = "z1,z2,z3,z4,z5,z6,z7,z8,z9\n"
               "z1\n"
               "z2,1\n"
               "z3,2,1\n"
               "z4,3,2,1\n"
               "z5,4,3,2,1\n"
               "z6,4,4,3,2,1\n"
               "z7,3,4,4,3,2,1\n"
               "z8,2,3,4,4,3,2,1\n"
               "z9,1,2,3,4,4,3,2,1\n";
    nine.x = {"z1", "z2", "z4", "z5", "z7", "z8"};
    nine.y = {"z1", "z3", "z4", "z6", "z7", "z9"};
    nine.r = 3;
    nine.options = options({Q, Z, F2});
    nine.betti = {{"K", Q, {0, 0, 2, 0, 0}, kStated},  {"K", F2, {0, 0, 2, 0, 0}, kStated},
                  {"K", Z, {0, 0, 2, 0, 0}, kStated},  {"K_A", Q, {0, 0, 0, 0, 0}, kStated},
                  {kUnion, Q, {0, 0, 2, 0, 0}, kDerived}};
    nine.verdicts = {{"contractible-obstructions", HypothesisStatus::Holds, kStated}};
    for (int d = 0; d <= 4; ++d)
        nine.maps.push_back({d, Q, true, true, kStated});
    nine.obstructions = {{{"z8", "z9"}, "cone", kStated}, {{"z2", "z3"}, "cone", kDerived}};
    out.push_back(nine);

    return out;
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string join(const std::vector<std::string>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + v[i];
    return s + "}";
}

}  // namespace

const char* provenance_name(Provenance p) {
    switch (p) {
    case Provenance::Stated:
        return "stated";
    case Provenance::Derived:
        return "derived";
    case Provenance::Immediate:
        return "immediate";
    }
    return "?";
}

MetricCover CorpusCase::metric_cover() const {
    InputDocument doc = parse_distance_csv(csv);
    const auto [xs, ys] = resolve_cover(doc.space->labels(), {x, y});
    return MetricCover::make(*doc.space, xs, ys, r);
}

const std::vector<CorpusCase>& corpus_cases() {
    static const std::vector<CorpusCase> cases = build_cases();
    return cases;
}

const CorpusCase& corpus_case(const std::string& name) {
    for (const auto& c : corpus_cases()) {
        if (c.name == name)
            return c;
    }
    throw InvalidInput("no corpus case named " + name);
}

CaseResult check_case(const CorpusCase& c, const DecompositionReport& report) {
    CaseResult res;
    res.name = c.name;
    res.discrepancies = report.discrepancies;
    auto miss = [&](Provenance p, const std::string& what) {
        res.mismatches.push_back(std::string("[") + provenance_name(p) + "] " + what);
    };
    if (!report.verification) {
        miss(kImmediate, "report has no verification block");
        return res;
    }
    const Verification& ver = *report.verification;

    for (const auto& e : c.betti) {
        ++res.checked;
        const HomologyProfile* p = ver.profile(e.complex, e.coeffs);
        if (!p) {
            miss(e.provenance, "no " + e.coeffs.name() + " profile for " + e.complex);
            continue;
        }
        auto got = p->bettis(0);
        bool ok = true;
        for (std::size_t d = 0; d < std::max(got.size(), e.reduced_betti.size()); ++d) {
            const std::size_t want = d < e.reduced_betti.size() ? e.reduced_betti[d] : 0;
            const std::size_t have = d < got.size() ? got[d] : 0;
            ok = ok && want == have;
        }
        if (!ok)
            miss(e.provenance, "homology mismatch: reduced Betti of " + e.complex + " over " + e.coeffs.name() +
                                   " is " + join(got) + ", expected " + join(e.reduced_betti));
    }
    for (const auto& e : c.verdicts) {
        ++res.checked;
        const CriterionVerdict* v = report.verdict(e.id);
        if (!v)
            miss(e.provenance, "no verdict " + e.id);
        else if (v->status != e.status)
            miss(e.provenance, "verdict " + e.id + " is " + status_name(v->status) + ", expected " +
                                   status_name(e.status));
    }
    for (const auto& e : c.maps) {
        ++res.checked;
        const InducedMap* m = ver.map(e.degree, e.coeffs);
        if (!m) {
            miss(e.provenance, "no map in degree " + std::to_string(e.degree) + " over " + e.coeffs.name());
            continue;
        }
        if (m->injective != e.injective || m->surjective != e.surjective)
            miss(e.provenance, "H_" + std::to_string(e.degree) + " over " + e.coeffs.name() + ": injective " +
                                   (m->injective ? "yes" : "no") + ", surjective " + (m->surjective ? "yes" : "no") +
                                   "; expected " + (e.injective ? "yes" : "no") + ", " +
                                   (e.surjective ? "yes" : "no"));
    }
    for (const auto& e : c.obstructions) {
        ++res.checked;
        const ObstructionSummary* found = nullptr;
        for (const auto& o : report.obstructions) {
            if (o.simplex == e.simplex)
                found = &o;
        }
        if (!found)
            miss(e.provenance, join(e.simplex) + " is not listed in K \\ P");
        else if (found->status != e.status)
            miss(e.provenance, "St(" + join(e.simplex) + ",A) is " + found->status + ", expected " + e.status);
    }
    return res;
}

CaseResult run_case(const CorpusCase& c) {
    const auto start = std::chrono::steady_clock::now();
    CaseResult res;
    try {
        res = check_case(c, analyze_metric(c.metric_cover(), c.options));
    } catch (const Error& e) {
        res.name = c.name;
        res.mismatches.push_back(std::string("error: ") + e.what());
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

CorpusCase with_distance(const CorpusCase& c, const std::string& a, const std::string& b, long long d) {
    const DistanceSpace s = *parse_distance_csv(c.csv).space;
    const auto& l = s.labels();
    const Vertex i = l.id(a);
    const Vertex j = l.id(b);
    std::ostringstream csv;
    for (std::size_t k = 0; k < l.size(); ++k)
        csv << (k ? "," : "") << l.name(static_cast<Vertex>(k));
    csv << "\n";
    for (std::size_t row = 0; row < s.size(); ++row) {
        csv << l.name(static_cast<Vertex>(row));
        for (std::size_t col = 0; col < row; ++col) {
            const auto u = static_cast<Vertex>(row);
            const auto v = static_cast<Vertex>(col);
            const bool hit = (u == i && v == j) || (u == j && v == i);
            csv << "," << (hit ? Distance(d) : s.d(u, v)).to_string();
        }
        csv << "\n";
    }
    CorpusCase out = c;
    out.csv = csv.str();
    return out;
}

}  // namespace obstruct
