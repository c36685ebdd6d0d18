#include "obstruct/metric/distance_space.hpp"

#include <algorithm>

#include "obstruct/core/error.hpp"

namespace obstruct {

DistanceSpace::DistanceSpace(std::vector<std::string> labels, std::vector<std::vector<Distance>> matrix,
                             Distance tolerance)
    : labels_(labels), matrix_(std::move(matrix)), tolerance_(std::move(tolerance)) {
    if (labels.size() != matrix_.size())
        throw InvalidInput("distance matrix has " + std::to_string(matrix_.size()) + " rows for " +
                           std::to_string(labels.size()) + " points");
    for (std::size_t i = 0; i < matrix_.size(); ++i) {
        if (matrix_[i].size() != matrix_.size())
            throw InvalidInput("distance matrix is not square (row " + std::to_string(i) + ")");
    }
    if (tolerance_.is_infinite())
        throw InvalidInput("tolerance must be finite");
}

DistanceSpace DistanceSpace::with_tolerance(Distance eps) const {
    DistanceSpace out = *this;
    if (eps.is_infinite())
        throw InvalidInput("tolerance must be finite");
    out.tolerance_ = std::move(eps);
    return out;
}

bool DistanceSpace::leq(const Distance& a, const Distance& b) const {
    if (b.is_infinite())
        return true;
    if (a.is_infinite())
        return false;
    return a.value() <= b.value() + tolerance_.value();
}

VertexSet DistanceSpace::all_points() const {
    VertexSet out(size());
    for (std::size_t i = 0; i < size(); ++i)
        out[i] = static_cast<Vertex>(i);
    return out;
}

DistanceSpace DistanceSpace::subspace(const VertexSet& ids) const {
    std::vector<std::string> names;
    std::vector<std::vector<Distance>> m;
    for (Vertex i : ids) {
        names.push_back(labels_.name(i));
        std::vector<Distance> row;
        for (Vertex j : ids)
            row.push_back(d(i, j));
        m.push_back(std::move(row));
    }
    return DistanceSpace(std::move(names), std::move(m), tolerance_);
}

std::vector<Violation> validate(const DistanceSpace& space) {
    std::vector<Violation> out;
    const auto n = static_cast<Vertex>(space.size());
    for (Vertex i = 0; i < n; ++i) {
        if (space.d(i, i) != Distance(0))
            out.push_back({Violation::Kind::Reflexivity, i, i});
        for (Vertex j = i + 1; j < n; ++j) {
            if (space.d(i, j) != space.d(j, i))
                out.push_back({Violation::Kind::Symmetry, i, j});
        }
    }
    return out;
}

std::optional<std::array<Vertex, 3>> triangle_violation(const DistanceSpace& space) {
    const auto n = static_cast<Vertex>(space.size());
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = 0; y < n; ++y) {
            for (Vertex z = 0; z < n; ++z) {
                if (!space.leq(space.d(x, z), space.d(x, y) + space.d(y, z)))
                    return std::array<Vertex, 3>{x, y, z};
            }
        }
    }
    return std::nullopt;
}

Distance diam(const DistanceSpace& space, const VertexSet& s) {
    if (s.empty())
        throw InvalidInput("diameter of the empty set is undefined");
    Distance best = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j)
            best = std::max(best, space.d(s[i], s[j]));
    }
    return best;
}

Complex vietoris_rips(const DistanceSpace& space, const Distance& r, int dim_cap) {
    std::vector<Edge> edges;
    const auto n = static_cast<Vertex>(space.size());
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (space.within(i, j, r))
                edges.emplace_back(i, j);
        }
    }
    return Complex::flag(space.all_points(), edges, dim_cap);
}

GluedSpace glue(const DistanceSpace& dx, const DistanceSpace& dy, const std::vector<std::string>& a) {
    std::vector<std::string> shared;
    for (const auto& name : dx.labels().names()) {
        if (dy.labels().find(name))
            shared.push_back(name);
    }
    {
        std::vector<std::string> want = a;
        std::vector<std::string> have = shared;
        std::sort(want.begin(), want.end());
        std::sort(have.begin(), have.end());
        if (want != have)
            throw GluingMismatch("the gluing set must be exactly the labels shared by both spaces");
    }
    for (const auto& p : shared) {
        for (const auto& q : shared) {
            if (dx.d(dx.labels().id(p), dx.labels().id(q)) != dy.d(dy.labels().id(p), dy.labels().id(q)))
                throw GluingMismatch("spaces disagree on d(" + p + "," + q + ")");
        }
    }

    GluedSpace out;
    std::vector<std::string> names = dx.labels().names();
    for (const auto& name : dy.labels().names()) {
        if (!dx.labels().find(name))
            names.push_back(name);
    }
    LabelTable table(names);
    const std::size_t n = names.size();
    for (std::size_t i = 0; i < dx.size(); ++i)
        out.x.push_back(static_cast<Vertex>(i));
    for (const auto& name : dy.labels().names())
        out.y.push_back(table.id(name));
    out.x = make_vertex_set(out.x);
    out.y = make_vertex_set(out.y);

    auto side_distance = [&](const std::string& p, const std::string& q) -> std::optional<Distance> {
        auto xp = dx.labels().find(p), xq = dx.labels().find(q);
        if (xp && xq)
            return dx.d(*xp, *xq);
        auto yp = dy.labels().find(p), yq = dy.labels().find(q);
        if (yp && yq)
            return dy.d(*yp, *yq);
        return std::nullopt;
    };

    std::vector<std::vector<Distance>> m(n, std::vector<Distance>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (auto d = side_distance(names[i], names[j])) {
                m[i][j] = *d;
                continue;
            }
            Distance best = Distance::infinity();
            for (const auto& s : shared)
                best = std::min(best, *side_distance(names[i], s) + *side_distance(s, names[j]));
            m[i][j] = best;
        }
    }
    if (shared.empty() && dx.size() > 0 && dy.size() > 0)
        out.warnings.push_back("gluing along an empty set: cross distances are infinite");
    out.space = DistanceSpace(std::move(names), std::move(m), std::max(dx.tolerance(), dy.tolerance()));
    return out;
}

std::optional<std::pair<Vertex, Vertex>> metric_gluing_violation(const DistanceSpace& space, const VertexSet& x,
                                                                  const VertexSet& y) {
    VertexSet a = set_intersection(x, y);
    for (Vertex p : set_difference(x, a)) {
        for (Vertex q : set_difference(y, a)) {
            Distance best = Distance::infinity();
            for (Vertex v : a)
                best = std::min(best, space.d(p, v) + space.d(v, q));
            if (!space.approx_equal(space.d(p, q), best))
                return std::make_pair(p, q);
        }
    }
    return std::nullopt;
}

}  // namespace obstruct
