#include "obstruct/io/report_json.hpp"

#include "obstruct/core/error.hpp"

namespace obstruct {

using nlohmann::json;

namespace {

template <typename T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InvalidInput(std::string("report JSON: missing \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("report JSON: bad \"") + key + "\": " + e.what());
    }
}

const json& array_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
        throw InvalidInput(std::string("report JSON: \"") + key + "\" must be an array");
    return j.at(key);
}

json to_json(const Conclusion& c) {
    return {{"claim", c.claim},
            {"iso_through", c.iso_through},
            {"surjective_at", c.surjective_at},
            {"excluded_prime", c.excluded_prime}};
}

Conclusion conclusion_from_json(const json& j) {
    return {field<std::string>(j, "claim"), field<int>(j, "iso_through"), field<int>(j, "surjective_at"),
            field<std::uint64_t>(j, "excluded_prime")};
}

json to_json(const CriterionVerdict& v) {
    return {{"id", v.id},
            {"hypothesis", v.hypothesis},
            {"status", status_name(v.status)},
            {"detail", v.detail},
            {"conclusion", to_json(v.conclusion)},
            {"agreement", agreement_name(v.agreement)},
            {"verification", v.verification}};
}

CriterionVerdict verdict_from_json(const json& j) {
    CriterionVerdict v;
    v.id = field<std::string>(j, "id");
    v.hypothesis = field<std::string>(j, "hypothesis");
    v.status = parse_hypothesis_status(field<std::string>(j, "status"));
    v.detail = field<std::string>(j, "detail");
    v.conclusion = conclusion_from_json(j.at("conclusion"));
    v.agreement = parse_agreement(field<std::string>(j, "agreement"));
    v.verification = field<std::string>(j, "verification");
    return v;
}

json to_json(const ObstructionSummary& s) {
    return {{"simplex", s.simplex},   {"status", s.status},       {"facets", s.facets},
            {"apex", s.apex},         {"collapses", s.collapses}, {"homology", to_json(s.homology)}};
}

ObstructionSummary obstruction_from_json(const json& j) {
    ObstructionSummary s;
    s.simplex = field<std::vector<std::string>>(j, "simplex");
    s.status = field<std::string>(j, "status");
    s.facets = field<std::vector<std::vector<std::string>>>(j, "facets");
    s.apex = field<std::vector<std::string>>(j, "apex");
    s.collapses = field<std::size_t>(j, "collapses");
    s.homology = profile_from_json(j.at("homology"));
    return s;
}

json to_json(const CensusRow& r) {
    return {{"dim", r.dim},   {"count", r.count},           {"empty", r.empty},
            {"cone", r.cone}, {"collapsible", r.collapsible}, {"homology_only", r.homology_only}};
}

CensusRow census_from_json(const json& j) {
    return {field<int>(j, "dim"),         field<std::size_t>(j, "count"),       field<std::size_t>(j, "empty"),
            field<std::size_t>(j, "cone"), field<std::size_t>(j, "collapsible"), field<std::size_t>(j, "homology_only")};
}

json to_json(const Verification& v) {
    json profiles = json::array();
    for (const auto& p : v.profiles)
        profiles.push_back({{"complex", p.complex}, {"profile", to_json(p.profile)}});
    json maps = json::array();
    for (const auto& m : v.maps)
        maps.push_back(to_json(m));
    return {{"max_degree", v.max_degree}, {"profiles", profiles}, {"maps", maps}};
}

Verification verification_from_json(const json& j) {
    Verification v;
    v.max_degree = field<int>(j, "max_degree");
    for (const auto& p : array_field(j, "profiles"))
        v.profiles.push_back({field<std::string>(p, "complex"), profile_from_json(p.at("profile"))});
    for (const auto& m : array_field(j, "maps"))
        v.maps.push_back(induced_map_from_json(m));
    return v;
}

}  // namespace

json to_json(const Coefficients& c) {
    return c.name();
}

Coefficients coefficients_from_json(const json& j) {
    if (!j.is_string())
        throw InvalidInput("report JSON: coefficients must be a string");
    return Coefficients::parse(j.get<std::string>());
}

json to_json(const HomologyProfile& p) {
    json groups = json::array();
    for (const auto& g : p.groups)
        groups.push_back({{"betti", g.betti}, {"torsion", g.torsion}});
    return {{"coefficients", to_json(p.coeffs)},
            {"reduced", p.reduced},
            {"min_degree", p.min_degree},
            {"groups", groups}};
}

HomologyProfile profile_from_json(const json& j) {
    HomologyProfile p;
    p.coeffs = coefficients_from_json(j.at("coefficients"));
    p.reduced = field<bool>(j, "reduced");
    p.min_degree = field<int>(j, "min_degree");
    for (const auto& g : array_field(j, "groups"))
        p.groups.push_back({field<std::size_t>(g, "betti"), field<std::vector<std::uint64_t>>(g, "torsion")});
    return p;
}

json to_json(const InducedMap& m) {
    return {{"degree", m.degree},
            {"coefficients", to_json(m.coeffs)},
            {"source_dim", m.source_dim},
            {"target_dim", m.target_dim},
            {"rank", m.rank},
            {"matrix", m.matrix},
            {"injective", m.injective},
            {"surjective", m.surjective}};
}

InducedMap induced_map_from_json(const json& j) {
    InducedMap m;
    m.degree = field<int>(j, "degree");
    m.coeffs = coefficients_from_json(j.at("coefficients"));
    m.source_dim = field<std::size_t>(j, "source_dim");
    m.target_dim = field<std::size_t>(j, "target_dim");
    m.rank = field<std::size_t>(j, "rank");
    m.matrix = field<std::vector<std::vector<std::string>>>(j, "matrix");
    m.injective = field<bool>(j, "injective");
    m.surjective = field<bool>(j, "surjective");
    return m;
}

json to_json(const DecompositionReport& r) {
    json census = json::array();
    for (const auto& c : r.census)
        census.push_back(to_json(c));
    json obstructions = json::array();
    for (const auto& o : r.obstructions)
        obstructions.push_back(to_json(o));
    json verdicts = json::array();
    for (const auto& v : r.verdicts)
        verdicts.push_back(to_json(v));
    return {{"cover", {{"X", r.x}, {"Y", r.y}, {"A", r.a}}},
            {"radius", r.radius},
            {"dim_cap", r.dim_cap},
            {"flag", r.flag},
            {"exhausted", r.exhausted},
            {"census", census},
            {"obstructions", obstructions},
            {"verdicts", verdicts},
            {"verification", r.verification ? to_json(*r.verification) : json(nullptr)},
            {"notes", r.notes},
            {"discrepancies", r.discrepancies},
            {"sound", r.sound()}};
}

DecompositionReport report_from_json(const json& j) {
    DecompositionReport r;
    if (!j.is_object() || !j.contains("cover"))
        throw InvalidInput("report JSON: missing \"cover\"");
    const json& cover = j.at("cover");
    r.x = field<std::vector<std::string>>(cover, "X");
    r.y = field<std::vector<std::string>>(cover, "Y");
    r.a = field<std::vector<std::string>>(cover, "A");
    r.radius = field<std::string>(j, "radius");
    r.dim_cap = field<int>(j, "dim_cap");
    r.flag = field<bool>(j, "flag");
    r.exhausted = field<bool>(j, "exhausted");
    for (const auto& c : array_field(j, "census"))
        r.census.push_back(census_from_json(c));
    for (const auto& o : array_field(j, "obstructions"))
        r.obstructions.push_back(obstruction_from_json(o));
    for (const auto& v : array_field(j, "verdicts"))
        r.verdicts.push_back(verdict_from_json(v));
    if (j.contains("verification") && !j.at("verification").is_null())
        r.verification = verification_from_json(j.at("verification"));
    r.notes = field<std::vector<std::string>>(j, "notes");
    r.discrepancies = field<std::vector<std::string>>(j, "discrepancies");
    return r;
}

}  // namespace obstruct
