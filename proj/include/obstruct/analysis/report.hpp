#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "obstruct/homology/homology.hpp"

namespace obstruct {

enum class HypothesisStatus { Holds, Fails, NotApplicable, Inconclusive };
enum class Agreement { Unchecked, Consistent, Discrepancy };

const char* status_name(HypothesisStatus s);
const char* agreement_name(Agreement a);
HypothesisStatus parse_hypothesis_status(const std::string& s);
Agreement parse_agreement(const std::string& s);

/// Used as `iso_through` when every degree is claimed.
inline constexpr int kAllDegrees = 1 << 20;

/// What a criterion promises about the inclusion K_X ∪ K_Y ⊆ K, and the
/// homological shadow of that promise which the verification can test.
struct Conclusion {
    /// Statement at the strength the theorem gives, e.g. "homotopy fibers are 1-connected".
    std::string claim;
    /// H_i isomorphism claimed for i <= iso_through; -1 for none.
    int iso_through = -1;
    /// H_i surjection claimed at this degree; -1 for none.
    int surjective_at = -1;
    /// Fields of this characteristic, and the integers, are exempt; 0 for none.
    std::uint64_t excluded_prime = 0;

    friend bool operator==(const Conclusion&, const Conclusion&) = default;
};

struct CriterionVerdict {
    std::string id;
    std::string hypothesis;
    HypothesisStatus status = HypothesisStatus::NotApplicable;
    /// Witness on failure, the certifying data on success, or the reason otherwise.
    std::string detail;
    /// Meaningful only when the hypothesis holds.
    Conclusion conclusion;
    Agreement agreement = Agreement::Unchecked;
    std::string verification;

    friend bool operator==(const CriterionVerdict&, const CriterionVerdict&) = default;
};

struct ObstructionSummary {
    std::vector<std::string> simplex;
    std::string status;
    std::vector<std::vector<std::string>> facets;
    /// Central simplex of a cone certificate.
    std::vector<std::string> apex;
    std::size_t collapses = 0;
    /// Reduced integral homology.
    HomologyProfile homology;

    friend bool operator==(const ObstructionSummary&, const ObstructionSummary&) = default;
};

struct CensusRow {
    int dim = 0;
    std::size_t count = 0;
    std::size_t empty = 0;
    std::size_t cone = 0;
    std::size_t collapsible = 0;
    std::size_t homology_only = 0;

    friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct NamedProfile {
    std::string complex;  ///< "K_X", "K_Y", "K_A", "K_X∪K_Y" or "K"
    HomologyProfile profile;
    friend bool operator==(const NamedProfile&, const NamedProfile&) = default;
};

struct Verification {
    int max_degree = 0;
    /// Reduced homology of each complex over each requested coefficient ring.
    std::vector<NamedProfile> profiles;
    /// H_d(K_X ∪ K_Y) -> H_d(K) over each requested field, d = 0..max_degree.
    std::vector<InducedMap> maps;

    const HomologyProfile* profile(const std::string& complex, const Coefficients& c) const;
    const InducedMap* map(int degree, const Coefficients& c) const;

    friend bool operator==(const Verification&, const Verification&) = default;
};

struct DecompositionReport {
    std::vector<std::string> x;
    std::vector<std::string> y;
    std::vector<std::string> a;
    std::string radius;  ///< empty unless built from a distance space
    int dim_cap = 0;
    bool flag = false;
    /// Whether the listing of K \ P up to dim_cap is all of K \ P.
    bool exhausted = false;
    std::vector<CensusRow> census;
    std::vector<ObstructionSummary> obstructions;
    std::vector<CriterionVerdict> verdicts;
    std::optional<Verification> verification;
    std::vector<std::string> notes;
    /// Conflicts between a certified verdict and the computation. Any entry is a bug.
    std::vector<std::string> discrepancies;

    const CriterionVerdict* verdict(const std::string& id) const;
    bool sound() const { return discrepancies.empty(); }

    friend bool operator==(const DecompositionReport&, const DecompositionReport&) = default;
};

}  // namespace obstruct
