#include "obstruct/homology/chain_complex.hpp"

#include <algorithm>
#include <unordered_map>

#include "obstruct/core/error.hpp"

namespace obstruct {

namespace {

using Index = std::unordered_map<Simplex, std::size_t>;

Index index_of(const std::vector<Simplex>& list) {
    Index idx;
    idx.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i)
        idx.emplace(list[i], i);
    return idx;
}

// Boundary between two bases; faces missing from the row basis are dropped,
// which is exactly the quotient by a subcomplex.
BoundaryMatrix boundary_between(int degree, const std::vector<Simplex>& cols, const std::vector<Simplex>& rows) {
    BoundaryMatrix m;
    m.degree = degree;
    m.rows = rows.size();
    m.cols = cols.size();
    Index row_index = index_of(rows);
    m.columns.reserve(cols.size());
    for (const Simplex& s : cols) {
        std::vector<std::pair<std::size_t, int>> col;
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto it = row_index.find(s.facet(i));
            if (it != row_index.end())
                col.emplace_back(it->second, i % 2 == 0 ? 1 : -1);
        }
        std::sort(col.begin(), col.end());
        m.columns.push_back(std::move(col));
    }
    return m;
}

BoundaryMatrix augmentation(std::size_t vertices) {
    BoundaryMatrix m;
    m.degree = 0;
    m.rows = 1;
    m.cols = vertices;
    m.columns.assign(vertices, {{0, 1}});
    return m;
}

std::vector<std::vector<Simplex>> layers(const Complex& k, int top) {
    std::vector<std::vector<Simplex>> out;
    Complex capped = k.with_dim_cap(top);
    for (int d = 0; d <= top; ++d)
        out.push_back(capped.simplices(d));
    return out;
}

}  // namespace

IntMatrix BoundaryMatrix::dense() const {
    IntMatrix m(rows, std::vector<BigInt>(cols, 0));
    for (std::size_t j = 0; j < cols; ++j) {
        for (auto [i, v] : columns[j])
            m[i][j] = v;
    }
    return m;
}

BoundaryMatrix boundary(const Complex& k, int n, int dim_cap) {
    if (n < 1)
        throw InvalidInput("boundary degree must be at least 1");
    if (k.is_flag() && n > dim_cap)
        throw EnumerationRefused("boundary in degree " + std::to_string(n) + " exceeds the ceiling " +
                                 std::to_string(dim_cap));
    Complex capped = k.with_dim_cap(k.is_flag() ? dim_cap : k.dim_cap());
    return boundary_between(n, capped.simplices(n), capped.simplices(n - 1));
}

std::size_t ChainData::dim(int d) const {
    if (d < min_degree || d > top_degree())
        return 0;
    return dims[static_cast<std::size_t>(d - min_degree)];
}

const BoundaryMatrix* ChainData::boundary(int d) const {
    if (d <= min_degree || d > top_degree())
        return nullptr;
    return &boundaries[static_cast<std::size_t>(d - min_degree)];
}

ChainData simplicial_chains(const Complex& k, int top, bool augmented) {
    ChainData c;
    c.min_degree = augmented ? -1 : 0;
    c.basis = layers(k, top);
    if (augmented) {
        c.dims.push_back(1);
        c.boundaries.emplace_back();
    }
    for (int d = 0; d <= top; ++d) {
        const auto& cols = c.basis[static_cast<std::size_t>(d)];
        c.dims.push_back(cols.size());
        if (d == 0)
            c.boundaries.push_back(augmented ? augmentation(cols.size()) : BoundaryMatrix{});
        else
            c.boundaries.push_back(boundary_between(d, cols, c.basis[static_cast<std::size_t>(d - 1)]));
    }
    return c;
}

ChainData relative_chains(const Complex& k, const Complex& l, int top) {
    ChainData c;
    c.min_degree = 0;
    for (auto& layer : layers(k, top)) {
        std::vector<Simplex> kept;
        for (Simplex& s : layer) {
            if (!l.contains(s))
                kept.push_back(std::move(s));
        }
        c.basis.push_back(std::move(kept));
    }
    for (int d = 0; d <= top; ++d) {
        const auto& cols = c.basis[static_cast<std::size_t>(d)];
        c.dims.push_back(cols.size());
        if (d == 0)
            c.boundaries.emplace_back();
        else
            c.boundaries.push_back(boundary_between(d, cols, c.basis[static_cast<std::size_t>(d - 1)]));
    }
    return c;
}

}  // namespace obstruct
