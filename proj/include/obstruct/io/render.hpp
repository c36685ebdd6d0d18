#pragma once

#include <string>
#include <vector>

#include "obstruct/analysis/report.hpp"
#include "obstruct/core/complex.hpp"

namespace obstruct {

/// Simplex counts per dimension 0..max_dim.
std::vector<std::size_t> simplex_counts(const Complex& k, int max_dim);

std::string render_counts_text(const std::vector<std::size_t>& counts);
std::string render_profile_text(const HomologyProfile& p);
/// "0", "Z^2", "Z ⊕ Z/2", "Q^3".
std::string group_text(const HomologyGroup& g, const Coefficients& c);
std::string render_report_text(const DecompositionReport& r);

}  // namespace obstruct
