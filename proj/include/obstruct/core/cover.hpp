#pragma once

#include "obstruct/core/complex.hpp"

namespace obstruct {

/// Two vertex sets X, Y covering the vertices of a complex, with A = X ∩ Y.
struct Cover {
    VertexSet x;
    VertexSet y;
    VertexSet a;

    /// Validates X ∪ Y = K_0 and X, Y ⊆ K_0; throws CoverError otherwise.
    static Cover make(const Complex& k, VertexSet x, VertexSet y);
    /// No check against a complex; A is still derived.
    static Cover unchecked(VertexSet x, VertexSet y);

    VertexSet x_only() const { return set_difference(x, a); }
    VertexSet y_only() const { return set_difference(y, a); }

    friend bool operator==(const Cover&, const Cover&) = default;
};

/// σ ∈ K \ P: σ meets X and Y and misses A.
bool in_p_complement(const Simplex& sigma, const Cover& cover);

/// K \ P up to dimension `dim_cap`, ordered by dimension then lexicographically.
std::vector<Simplex> p_complement(const Complex& k, const Cover& cover, int dim_cap);

/// Whether K \ P has no simplex in dimension dim_cap + 1, so that the listing
/// up to dim_cap is all of K \ P. A simplex of K \ P has faces in K \ P of
/// every dimension from 1 up to its own, so one empty dimension ends it.
bool p_complement_exhausted(const Complex& k, const Cover& cover, int dim_cap);

}  // namespace obstruct
