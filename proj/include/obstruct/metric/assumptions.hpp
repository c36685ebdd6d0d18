#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "obstruct/core/cover.hpp"
#include "obstruct/metric/distance_space.hpp"

namespace obstruct {

/// A distance space with a cover X ∪ Y of its points and a radius r.
struct MetricCover {
    DistanceSpace space;
    VertexSet x;
    VertexSet y;
    VertexSet a;
    Distance r;

    /// Throws CoverError unless X ∪ Y is every point; InvalidInput for infinite r.
    static MetricCover make(DistanceSpace space, VertexSet x, VertexSet y, Distance r);

    Cover cover() const { return Cover::unchecked(x, y); }
    VertexSet x_only() const { return set_difference(x, a); }
    VertexSet y_only() const { return set_difference(y, a); }
    /// Pairs x ∈ X\A, y ∈ Y\A with d(x,y) ≤ r, in index order.
    std::vector<std::pair<Vertex, Vertex>> cross_edges() const;
};

/// Outcome of a metric predicate. A failing predicate names its first
/// counterexample in index order when one exists.
struct PredicateResult {
    bool holds = true;
    std::optional<std::array<Vertex, 3>> witness;
    std::string reason;
};

/// A single v ∈ A within r of both ends of every cross edge.
struct SharedNeighbourResult {
    bool holds = false;
    std::vector<Vertex> witnesses;  ///< every such v, smallest id first
    std::string reason;
};

SharedNeighbourResult check_assumption_I(const MetricCover& mc);

/// d(x,y) ≥ d(x,v) and d(x,y) ≥ d(y,v) for every x ∈ X\A, y ∈ Y\A, v ∈ A.
/// Witness is (x, y, v). Fails when A is empty.
PredicateResult check_assumption_II(const MetricCover& mc);

/// d(x,y) ≥ diam(A) for every x ∈ X\A, y ∈ Y\A. Witness is (x, y, y).
PredicateResult check_diameter_bound(const MetricCover& mc);

/// For each endpoint v of a cross edge, a, b ∈ A within r of v are within r
/// of each other. Witness is (v, a, b).
PredicateResult check_simplex_assumption(const MetricCover& mc);

/// As above with conclusion 2 d(a,b) ≤ d(a,v) + d(v,b).
PredicateResult check_strong_simplex_assumption(const MetricCover& mc);

}  // namespace obstruct
