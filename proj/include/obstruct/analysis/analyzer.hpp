#pragma once

#include <vector>

#include "obstruct/analysis/report.hpp"
#include "obstruct/core/cover.hpp"
#include "obstruct/core/labels.hpp"
#include "obstruct/metric/assumptions.hpp"

namespace obstruct {

struct AnalyzeOptions {
    /// K \ P is listed up to this dimension, and homology is computed up to this degree.
    int dim_cap = 4;
    std::vector<Coefficients> fields = {Coefficients::rationals(), Coefficients::integers()};
    bool verify = true;
};

/**
 * Lists K \ P with its obstruction complexes, evaluates every criterion and,
 * when asked, computes the homology of K_X, K_Y, K_A, K_X ∪ K_Y and K with
 * the induced maps of K_X ∪ K_Y ⊆ K, then checks each certified conclusion
 * against those maps. Conflicts go to `discrepancies`.
 *
 * Throws CoverError when the cover does not fit K and InvalidInput when
 * dim_cap < 1.
 */
DecompositionReport analyze(const Complex& k, const Cover& cover, const AnalyzeOptions& options,
                            const LabelTable& labels);

/// As above with vertex ids as labels.
DecompositionReport analyze(const Complex& k, const Cover& cover, const AnalyzeOptions& options = {});

/// analyze on VR_r(Z), plus the distance-space criteria.
DecompositionReport analyze_metric(const MetricCover& mc, const AnalyzeOptions& options = {});

/// Re-derives every verdict's agreement from the verification block. Returns
/// the discrepancy messages; an unverified report yields none.
std::vector<std::string> check_agreement(DecompositionReport& report);

}  // namespace obstruct
