#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "obstruct/core/complex.hpp"
#include "obstruct/core/labels.hpp"
#include "obstruct/metric/distance.hpp"

namespace obstruct {

/**
 * Finite labeled point set with a square distance matrix. Point ids are the
 * matrix indices. Nothing beyond squareness is enforced here; `validate`
 * reports symmetry and reflexivity problems.
 *
 * With a positive tolerance ε every comparison a ≤ b becomes a ≤ b + ε. The
 * default ε = 0 keeps all threshold tests exact.
 */
class DistanceSpace {
public:
    DistanceSpace() = default;
    /// Throws InvalidInput on a non-square matrix, a label count mismatch or duplicate labels.
    DistanceSpace(std::vector<std::string> labels, std::vector<std::vector<Distance>> matrix, Distance tolerance = 0);

    std::size_t size() const { return matrix_.size(); }
    const LabelTable& labels() const { return labels_; }
    const Distance& d(Vertex i, Vertex j) const { return matrix_[i][j]; }
    const std::vector<std::vector<Distance>>& matrix() const { return matrix_; }
    const Distance& tolerance() const { return tolerance_; }
    DistanceSpace with_tolerance(Distance eps) const;

    bool leq(const Distance& a, const Distance& b) const;
    bool approx_equal(const Distance& a, const Distance& b) const { return leq(a, b) && leq(b, a); }
    bool within(Vertex i, Vertex j, const Distance& r) const { return leq(d(i, j), r); }

    VertexSet all_points() const;
    /// Sub-space on the given ids, relabeled densely in id order.
    DistanceSpace subspace(const VertexSet& ids) const;

    friend bool operator==(const DistanceSpace&, const DistanceSpace&) = default;

private:
    LabelTable labels_;
    std::vector<std::vector<Distance>> matrix_;
    Distance tolerance_;
};

struct Violation {
    enum class Kind { Symmetry, Reflexivity } kind;
    Vertex i;
    Vertex j;
    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every symmetry violation (i < j) and every nonzero diagonal entry, in index order.
std::vector<Violation> validate(const DistanceSpace& space);

/// First triple (x, y, z) in index order with d(x,z) > d(x,y) + d(y,z), if any.
std::optional<std::array<Vertex, 3>> triangle_violation(const DistanceSpace& space);
inline bool is_pseudometric(const DistanceSpace& space) { return !triangle_violation(space); }

/// Largest pairwise distance; 0 for a singleton. Throws InvalidInput on an empty set.
Distance diam(const DistanceSpace& space, const VertexSet& s);

/// Flag complex on all points with an edge wherever d ≤ r (closed threshold).
Complex vietoris_rips(const DistanceSpace& space, const Distance& r, int dim_cap);

struct GluedSpace {
    DistanceSpace space;
    VertexSet x;  ///< ids of the points of the first space
    VertexSet y;  ///< ids of the points of the second space
    std::vector<std::string> warnings;
};

/**
 * Metric gluing of dX and dY along their shared labels `a`. The result lists
 * the labels of dX first, then those of dY not in A. Cross distances are the
 * minimum over A of d(x,a) + d(a,y), infinite when A is empty.
 *
 * Throws GluingMismatch when `a` is not exactly the shared label set or the
 * two spaces disagree on A × A.
 */
GluedSpace glue(const DistanceSpace& dx, const DistanceSpace& dy, const std::vector<std::string>& a);

/// First (x, y) with x ∈ X\A, y ∈ Y\A where d(x,y) differs from the minimum
/// over A of d(x,a) + d(a,y).
std::optional<std::pair<Vertex, Vertex>> metric_gluing_violation(const DistanceSpace& space, const VertexSet& x,
                                                                  const VertexSet& y);
inline bool is_metric_gluing(const DistanceSpace& space, const VertexSet& x, const VertexSet& y) {
    return !metric_gluing_violation(space, x, y);
}

}  // namespace obstruct
