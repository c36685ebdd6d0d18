#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "obstruct/core/complex.hpp"
#include "obstruct/homology/smith.hpp"

namespace obstruct {

/// Sparse integer matrix of ∂_n, one column per n-simplex.
struct BoundaryMatrix {
    int degree = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    /// Column entries (row, ±1), rows increasing.
    std::vector<std::vector<std::pair<std::size_t, int>>> columns;

    IntMatrix dense() const;
};

/// ∂_n of K over the lexicographic simplex order. Refuses n > dim_cap on a
/// flag complex; the ceiling argument overrides the complex's own.
BoundaryMatrix boundary(const Complex& k, int n, int dim_cap);

/// Finite chain complex of free modules with simplex bases.
struct ChainData {
    int min_degree = 0;  ///< -1 when augmented
    /// basis[d] lists the simplices spanning degree d >= 0.
    std::vector<std::vector<Simplex>> basis;
    /// dims[d - min_degree]
    std::vector<std::size_t> dims;
    /// boundaries[d - min_degree] is ∂_d : C_d -> C_{d-1}; unused at min_degree.
    std::vector<BoundaryMatrix> boundaries;

    int top_degree() const { return min_degree + static_cast<int>(dims.size()) - 1; }
    std::size_t dim(int d) const;
    /// Null when ∂_d is a map to or from the zero module.
    const BoundaryMatrix* boundary(int d) const;
};

/// Simplicial chains of K in degrees up to `top`, augmented by C_{-1} = Z
/// when requested. The empty complex augmented is Z in degree -1.
ChainData simplicial_chains(const Complex& k, int top, bool augmented);

/// Quotient C(K)/C(L) in degrees up to `top`. L must be a subcomplex.
ChainData relative_chains(const Complex& k, const Complex& l, int top);

}  // namespace obstruct
