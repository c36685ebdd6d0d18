#include "obstruct/core/cover.hpp"

#include "obstruct/core/error.hpp"

namespace obstruct {

Cover Cover::make(const Complex& k, VertexSet x, VertexSet y) {
    Cover c = unchecked(std::move(x), std::move(y));
    if (!is_subset(c.x, k.vertices()) || !is_subset(c.y, k.vertices()))
        throw CoverError("cover sets must lie in the vertex set");
    if (set_union(c.x, c.y) != k.vertices())
        throw CoverError("X and Y must cover every vertex");
    return c;
}

Cover Cover::unchecked(VertexSet x, VertexSet y) {
    Cover c;
    c.x = make_vertex_set(std::move(x));
    c.y = make_vertex_set(std::move(y));
    c.a = set_intersection(c.x, c.y);
    return c;
}

bool in_p_complement(const Simplex& sigma, const Cover& cover) {
    return intersects(sigma.span(), cover.x) && intersects(sigma.span(), cover.y) &&
           !intersects(sigma.span(), cover.a);
}

std::vector<Simplex> p_complement(const Complex& k, const Cover& cover, int dim_cap) {
    std::vector<Simplex> out;
    for (Simplex& s : k.with_dim_cap(dim_cap).simplices_up_to(dim_cap)) {
        if (in_p_complement(s, cover))
            out.push_back(std::move(s));
    }
    return out;
}

bool p_complement_exhausted(const Complex& k, const Cover& cover, int dim_cap) {
    if (!k.is_flag() && dim_cap >= k.dim_cap())
        return true;
    for (const Simplex& s : k.with_dim_cap(dim_cap + 1).simplices(dim_cap + 1)) {
        if (in_p_complement(s, cover))
            return false;
    }
    return true;
}

}  // namespace obstruct
