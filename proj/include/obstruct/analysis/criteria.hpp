#pragma once

#include <string>
#include <vector>

#include "obstruct/analysis/p_complement.hpp"
#include "obstruct/analysis/report.hpp"
#include "obstruct/core/labels.hpp"
#include "obstruct/metric/assumptions.hpp"

namespace obstruct {

/// Everything a criterion may look at. `items` is K \ P up to dim_cap.
struct CriterionContext {
    const Complex& k;
    const Cover& cover;
    int dim_cap;
    const std::vector<PComplementItem>& items;
    bool exhausted;
    const LabelTable& labels;
    /// Consequences the theorems guarantee outright (a central vertex, a
    /// nonempty obstruction) are checked on the spot; failures land here.
    std::vector<std::string>* discrepancies;
};

/// Criteria that apply to any simplicial complex, in fixed order.
std::vector<CriterionVerdict> general_criteria(const CriterionContext& ctx);

/// Criteria for clique complexes; all not applicable when K is explicit.
std::vector<CriterionVerdict> clique_criteria(const CriterionContext& ctx);

/// Distance-space criteria for K = VR_r(Z).
std::vector<CriterionVerdict> metric_criteria(const CriterionContext& ctx, const MetricCover& mc);

/// K_S with every simplex listed; throws EnumerationRefused past the vertex limit.
Complex full_restriction(const Complex& k, const VertexSet& s);

}  // namespace obstruct
