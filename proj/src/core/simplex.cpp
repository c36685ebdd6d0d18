#include "obstruct/core/simplex.hpp"

#include <algorithm>
#include <iterator>

#include "obstruct/core/error.hpp"

namespace obstruct {

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(std::span<const Vertex> sub, std::span<const Vertex> super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool intersects(std::span<const Vertex> a, std::span<const Vertex> b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j)
            return true;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return false;
}

bool contains_vertex(std::span<const Vertex> set, Vertex v) {
    return std::binary_search(set.begin(), set.end(), v);
}

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(make_vertex_set(std::move(vertices))) {
    if (vertices_.empty())
        throw InvalidInput("a simplex must have at least one vertex");
}

Simplex::Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

Simplex Simplex::from_sorted(std::vector<Vertex> vertices) {
    if (vertices.empty())
        throw InvalidInput("a simplex must have at least one vertex");
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        if (vertices[i - 1] >= vertices[i])
            throw InvalidInput("simplex vertices must be strictly increasing");
    }
    return Simplex(Sorted{}, std::move(vertices));
}

bool Simplex::contains(Vertex v) const {
    return contains_vertex(vertices_, v);
}

bool Simplex::is_face_of(const Simplex& other) const {
    return is_subset(vertices_, other.vertices_);
}

Simplex Simplex::with(Vertex v) const {
    if (contains(v))
        return *this;
    std::vector<Vertex> out = vertices_;
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return Simplex(Sorted{}, std::move(out));
}

Simplex Simplex::facet(std::size_t i) const {
    std::vector<Vertex> out;
    out.reserve(vertices_.size() - 1);
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
        if (k != i)
            out.push_back(vertices_[k]);
    }
    return Simplex::from_sorted(std::move(out));
}

Simplex simplex_union(const Simplex& a, const Simplex& b) {
    return Simplex::from_sorted(set_union(a.span(), b.span()));
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    // FNV-1a over the vertex ids
    std::size_t h = 1469598103934665603ull;
    for (Vertex v : s) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace obstruct
