#include "obstruct/analysis/report.hpp"

#include "obstruct/core/error.hpp"

namespace obstruct {

const char* status_name(HypothesisStatus s) {
    switch (s) {
    case HypothesisStatus::Holds:
        return "holds";
    case HypothesisStatus::Fails:
        return "fails";
    case HypothesisStatus::NotApplicable:
        return "not_applicable";
    case HypothesisStatus::Inconclusive:
        return "inconclusive";
    }
    return "?";
}

const char* agreement_name(Agreement a) {
    switch (a) {
    case Agreement::Unchecked:
        return "unchecked";
    case Agreement::Consistent:
        return "consistent";
    case Agreement::Discrepancy:
        return "discrepancy";
    }
    return "?";
}

HypothesisStatus parse_hypothesis_status(const std::string& s) {
    for (auto v : {HypothesisStatus::Holds, HypothesisStatus::Fails, HypothesisStatus::NotApplicable,
                   HypothesisStatus::Inconclusive}) {
        if (s == status_name(v))
            return v;
    }
    throw InvalidInput("unknown hypothesis status '" + s + "'");
}

Agreement parse_agreement(const std::string& s) {
    for (auto v : {Agreement::Unchecked, Agreement::Consistent, Agreement::Discrepancy}) {
        if (s == agreement_name(v))
            return v;
    }
    throw InvalidInput("unknown agreement '" + s + "'");
}

const HomologyProfile* Verification::profile(const std::string& complex, const Coefficients& c) const {
    for (const auto& p : profiles) {
        if (p.complex == complex && p.profile.coeffs == c)
            return &p.profile;
    }
    return nullptr;
}

const InducedMap* Verification::map(int degree, const Coefficients& c) const {
    for (const auto& m : maps) {
        if (m.degree == degree && m.coeffs == c)
            return &m;
    }
    return nullptr;
}

const CriterionVerdict* DecompositionReport::verdict(const std::string& id) const {
    for (const auto& v : verdicts) {
        if (v.id == id)
            return &v;
    }
    return nullptr;
}

}  // namespace obstruct
