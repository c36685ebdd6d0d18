#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "obstruct/core/simplex.hpp"

namespace obstruct {

enum class ComplexKind { Explicit, Flag };

using Edge = std::pair<Vertex, Vertex>;

/**
 * Finite abstract simplicial complex.
 *
 * Two backings share one interface. An explicit complex stores every simplex.
 * A flag complex stores a graph and a dimension ceiling; membership of any
 * vertex set is answered exactly (all pairs adjacent), but listing simplices
 * above the ceiling is refused with EnumerationRefused.
 *
 * Values are immutable and cheap to copy.
 */
class Complex {
public:
    /// The empty complex.
    Complex();

    /// Downward closure of the given facets. Empty facets are rejected.
    static Complex from_facets(const std::vector<std::vector<Vertex>>& facets);
    static Complex from_simplices(const std::vector<Simplex>& simplices);
    /// The full simplex Delta[S]; the empty set gives the empty complex.
    static Complex standard_simplex(const VertexSet& s);
    /// Clique complex of the graph. Edge endpoints must be in `vertices`.
    static Complex flag(VertexSet vertices, const std::vector<Edge>& edges, int dim_cap);

    ComplexKind kind() const;
    bool is_flag() const { return kind() == ComplexKind::Flag; }
    bool empty() const { return vertices().empty(); }

    const VertexSet& vertices() const;
    std::size_t num_vertices() const { return vertices().size(); }

    bool contains(const Simplex& s) const { return contains(s.span()); }
    /// Membership of a sorted vertex set; the empty set is never a member.
    bool contains(std::span<const Vertex> sorted) const;
    bool has_vertex(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;
    VertexSet neighbors(Vertex v) const;
    std::vector<Edge> edges() const;

    /// Flag: the enumeration ceiling. Explicit: the top dimension (-1 if empty).
    int dim_cap() const;
    /// Largest dimension that may be listed. Same as dim_cap().
    int max_listable_dim() const { return dim_cap(); }

    /// Lexicographically sorted simplices of dimension d.
    std::vector<Simplex> simplices(int d) const;
    /// All simplices of dimension <= d, ordered by dimension then lexicographically.
    std::vector<Simplex> simplices_up_to(int d) const;
    /// All simplices. For flag complexes, up to the ceiling.
    std::vector<Simplex> all_simplices() const { return simplices_up_to(dim_cap()); }
    std::size_t count(int d) const;

    /// Same flag complex with a different ceiling. Explicit complexes are returned unchanged.
    Complex with_dim_cap(int cap) const;

    /// Explicit complex equal to the simplices listable here.
    Complex materialize() const;

    /// Set equality of simplices up to the given dimension.
    bool same_simplices(const Complex& other, int up_to_dim) const;

    struct Data;

private:
    explicit Complex(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    std::shared_ptr<const Data> data_;

    friend struct ComplexAccess;
};

// Set-level constructions. Flag inputs give flag outputs where the result is
// itself a clique complex; otherwise the result is materialized.

/// K_S = {σ ∈ K : σ ⊆ S}.
Complex restriction(const Complex& k, const VertexSet& s);

/// St(σ) = {μ ∈ K : σ ∪ μ ∈ K}. Throws NotASimplex if σ ∉ K.
Complex star(const Complex& k, const Simplex& sigma);

/// St(σ, A) = {μ ⊆ A : σ ∪ μ ∈ K}. Possibly empty. Throws NotASimplex if σ ∉ K.
Complex obstruction(const Complex& k, const Simplex& sigma, const VertexSet& a);

/// Same set as `obstruction`, computed by filtering every subset of A up to
/// `cap` dimensions. Slow; kept as a cross-check.
Complex obstruction_by_definition(const Complex& k, const Simplex& sigma, const VertexSet& a, int cap);

bool is_central(const Complex& k, const Simplex& tau);

/// All vertices v with {v} central. This set is itself a central simplex when nonempty.
VertexSet central_vertices(const Complex& k);

/// Simplices of dimension <= n, as an explicit complex.
Complex skeleton(const Complex& k, int n);

/// K ∗ L. Throws JoinOverlap if the vertex sets meet.
Complex join(const Complex& k, const Complex& l);

/// Union and intersection. `cap` bounds materialization when a flag input
/// forces it; -1 means the larger of the two ceilings.
Complex union_of(const Complex& k, const Complex& l, int cap = -1);
Complex intersection_of(const Complex& k, const Complex& l, int cap = -1);

/// K_X ∪ K_Y. Stays flag for flag K.
Complex restriction_union(const Complex& k, const VertexSet& x, const VertexSet& y);

/// Whether every simplex of `sub` up to `up_to_dim` lies in `k`.
bool is_subcomplex(const Complex& sub, const Complex& k, int up_to_dim);

}  // namespace obstruct
