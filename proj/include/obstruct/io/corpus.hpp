#pragma once

#include <string>
#include <vector>

#include "obstruct/analysis/analyzer.hpp"

namespace obstruct {

/// Where an expectation comes from.
enum class Provenance {
    Stated,     ///< a claim made about the example in its source
    Derived,    ///< worked out independently from the table
    Immediate,  ///< follows from the definitions alone
};

const char* provenance_name(Provenance p);

struct BettiExpectation {
    std::string complex;  ///< a profile name of the verification block
    Coefficients coeffs;
    std::vector<std::size_t> reduced_betti;  ///< degrees 0.. ; later degrees must be zero
    Provenance provenance;
};

struct VerdictExpectation {
    std::string id;
    HypothesisStatus status;
    Provenance provenance;
};

/// Injectivity and surjectivity of H_d(K_X ∪ K_Y) -> H_d(K).
struct MapExpectation {
    int degree;
    Coefficients coeffs;
    bool injective;
    bool surjective;
    Provenance provenance;
};

struct ObstructionExpectation {
    std::vector<std::string> simplex;
    std::string status;  ///< as in ObstructionSummary
    Provenance provenance;
};

struct CorpusCase {
    std::string name;
    std::string description;
    /// Distance table in the lower-triangular CSV format.
    std::string csv;
    std::vector<std::string> x;
    std::vector<std::string> y;
    long long r = 0;
    AnalyzeOptions options;
    std::vector<BettiExpectation> betti;
    std::vector<VerdictExpectation> verdicts;
    std::vector<MapExpectation> maps;
    std::vector<ObstructionExpectation> obstructions;

    MetricCover metric_cover() const;
};

struct CaseResult {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> mismatches;
    /// Soundness problems found by the analyzer itself.
    std::vector<std::string> discrepancies;
    double seconds = 0;
    bool passed() const { return mismatches.empty() && discrepancies.empty(); }
};

/// The six worked examples, in a fixed order.
const std::vector<CorpusCase>& corpus_cases();
const CorpusCase& corpus_case(const std::string& name);

CaseResult run_case(const CorpusCase& c);
/// Same as run_case against an already computed report.
CaseResult check_case(const CorpusCase& c, const DecompositionReport& report);

/// Copy of the case with d(a,b) = d(b,a) replaced, for mutation checks.
CorpusCase with_distance(const CorpusCase& c, const std::string& a, const std::string& b, long long d);

}  // namespace obstruct
