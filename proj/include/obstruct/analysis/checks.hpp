#pragma once

#include <string>
#include <vector>

#include "obstruct/core/complex.hpp"
#include "obstruct/homology/homology.hpp"

namespace obstruct {

struct CheckResult {
    bool ok = true;
    std::size_t checked = 0;
    std::vector<std::string> problems;
};

/**
 * For σ ∈ K of dimension n, with L = ⋃_{v∈σ} K_{K_0∖{v}} and
 * O = St(σ, K_0∖σ):
 *   H_i(K, L) ≅ H̃_{i−n−1}(O)        for 0 <= i <= max_deg,
 *   H̃_i(L ∩ St(σ)) ≅ H̃_{i−n}(O)     for −1 <= i <= max_deg,
 * the second because L ∩ St(σ) is the join of ∂σ with O. Reduced homology
 * uses the augmented complex, so the empty complex has rank one in degree −1.
 *
 * Throws NotASimplex if σ ∉ K.
 */
CheckResult check_cofiber_shift(const Complex& k, const Simplex& sigma, Coefficients coeffs, int max_deg);

/**
 * Rank accounting for the Mayer–Vietoris sequence of K_X, K_Y inside
 * K_X ∪ K_Y over a field, unreduced, degrees 0..max_deg. With j_n the sum
 * map H_n(K_X) ⊕ H_n(K_Y) → H_n(K_X ∪ K_Y), exactness forces
 *   rank i_n = h_n(K_X) + h_n(K_Y) − rank j_n,
 *   h_n(K_A) = rank i_n + h_{n+1}(K_X ∪ K_Y) − rank j_{n+1},
 * and j_0 onto. Each is checked.
 */
CheckResult mv_check(const Complex& k, const VertexSet& x, const VertexSet& y, Coefficients field, int max_deg);

/**
 * On a flag complex, St(σ, A) computed from its definition agrees with
 * ⋂_{x∈σ} St({x}, A) and with St(τ, A) ∩ St(ρ, A) for two facets τ, ρ of σ,
 * for every σ up to dim_cap.
 */
CheckResult clique_identity_check(const Complex& k, const VertexSet& a, int dim_cap);

}  // namespace obstruct
