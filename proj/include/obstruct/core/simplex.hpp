#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace obstruct {

/// Interned vertex identifier. Labels are mapped to dense ids at ingestion.
using Vertex = std::uint32_t;

/// Strictly increasing list of vertices. Used for covers, restriction sets
/// and anywhere a plain finite vertex set is needed.
using VertexSet = std::vector<Vertex>;

VertexSet make_vertex_set(std::vector<Vertex> vertices);
VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b);
bool is_subset(std::span<const Vertex> sub, std::span<const Vertex> super);
bool intersects(std::span<const Vertex> a, std::span<const Vertex> b);
bool contains_vertex(std::span<const Vertex> set, Vertex v);

/**
 * A nonempty finite set of vertices, stored sorted and duplicate free.
 *
 * Ordering is lexicographic on the sorted vertex list. Code that needs the
 * usual "by dimension, then lexicographic" order uses `DimLexLess`.
 */
class Simplex {
public:
    /// Sorts and deduplicates; throws InvalidInput when empty.
    explicit Simplex(std::vector<Vertex> vertices);
    Simplex(std::initializer_list<Vertex> vertices);

    /// Wraps an already strictly increasing, nonempty list.
    static Simplex from_sorted(std::vector<Vertex> vertices);

    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::span<const Vertex> span() const { return vertices_; }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }
    auto begin() const { return vertices_.begin(); }
    auto end() const { return vertices_.end(); }

    bool contains(Vertex v) const;
    bool is_face_of(const Simplex& other) const;

    Simplex with(Vertex v) const;
    /// Codimension-one face obtained by dropping the i-th vertex. Requires size() > 1.
    Simplex facet(std::size_t i) const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
        return a.vertices_ <=> b.vertices_;
    }

private:
    struct Sorted {};
    Simplex(Sorted, std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}

    std::vector<Vertex> vertices_;
};

Simplex simplex_union(const Simplex& a, const Simplex& b);

struct DimLexLess {
    bool operator()(const Simplex& a, const Simplex& b) const {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace obstruct

template <>
struct std::hash<obstruct::Simplex> {
    std::size_t operator()(const obstruct::Simplex& s) const noexcept {
        return obstruct::SimplexHash{}(s);
    }
};
