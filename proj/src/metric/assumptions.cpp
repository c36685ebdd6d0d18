#include "obstruct/metric/assumptions.hpp"

#include <algorithm>

#include "obstruct/core/error.hpp"

namespace obstruct {

namespace {

// Endpoints of cross edges, each listed once, in id order.
VertexSet cross_endpoints(const MetricCover& mc) {
    std::vector<Vertex> out;
    for (auto [p, q] : mc.cross_edges()) {
        out.push_back(p);
        out.push_back(q);
    }
    return make_vertex_set(std::move(out));
}

template <typename Conclusion>
PredicateResult check_pairs_near_endpoints(const MetricCover& mc, Conclusion&& ok) {
    PredicateResult out;
    const DistanceSpace& s = mc.space;
    for (Vertex v : cross_endpoints(mc)) {
        for (std::size_t i = 0; i < mc.a.size(); ++i) {
            Vertex a = mc.a[i];
            if (!s.within(a, v, mc.r))
                continue;
            for (std::size_t j = i + 1; j < mc.a.size(); ++j) {
                Vertex b = mc.a[j];
                if (s.within(v, b, mc.r) && !ok(v, a, b)) {
                    out.holds = false;
                    out.witness = std::array<Vertex, 3>{v, a, b};
                    return out;
                }
            }
        }
    }
    return out;
}

}  // namespace

MetricCover MetricCover::make(DistanceSpace space, VertexSet x, VertexSet y, Distance r) {
    if (r.is_infinite())
        throw InvalidInput("radius must be finite");
    MetricCover mc;
    mc.x = make_vertex_set(std::move(x));
    mc.y = make_vertex_set(std::move(y));
    VertexSet all = space.all_points();
    if (!is_subset(mc.x, all) || !is_subset(mc.y, all) || set_union(mc.x, mc.y) != all)
        throw CoverError("X and Y must cover every point");
    mc.a = set_intersection(mc.x, mc.y);
    mc.space = std::move(space);
    mc.r = std::move(r);
    return mc;
}

std::vector<std::pair<Vertex, Vertex>> MetricCover::cross_edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    VertexSet xs = x_only();
    VertexSet ys = y_only();
    for (Vertex p : xs) {
        for (Vertex q : ys) {
            if (space.within(p, q, r))
                out.emplace_back(std::min(p, q), std::max(p, q));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SharedNeighbourResult check_assumption_I(const MetricCover& mc) {
    SharedNeighbourResult out;
    if (mc.a.empty()) {
        out.reason = "A is empty";
        return out;
    }
    auto edges = mc.cross_edges();
    for (Vertex v : mc.a) {
        bool good = true;
        for (auto [p, q] : edges) {
            if (!mc.space.within(p, v, mc.r) || !mc.space.within(q, v, mc.r)) {
                good = false;
                break;
            }
        }
        if (good)
            out.witnesses.push_back(v);
    }
    out.holds = !out.witnesses.empty();
    if (!out.holds)
        out.reason = "no point of A is within r of both ends of every cross edge";
    return out;
}

PredicateResult check_assumption_II(const MetricCover& mc) {
    PredicateResult out;
    if (mc.a.empty()) {
        out.holds = false;
        out.reason = "A is empty";
        return out;
    }
    const DistanceSpace& s = mc.space;
    for (Vertex p : mc.x_only()) {
        for (Vertex q : mc.y_only()) {
            for (Vertex v : mc.a) {
                if (!s.leq(s.d(p, v), s.d(p, q)) || !s.leq(s.d(q, v), s.d(p, q))) {
                    out.holds = false;
                    out.witness = std::array<Vertex, 3>{p, q, v};
                    return out;
                }
            }
        }
    }
    return out;
}

PredicateResult check_diameter_bound(const MetricCover& mc) {
    PredicateResult out;
    if (mc.a.empty()) {
        out.holds = false;
        out.reason = "A is empty";
        return out;
    }
    Distance da = diam(mc.space, mc.a);
    for (Vertex p : mc.x_only()) {
        for (Vertex q : mc.y_only()) {
            if (!mc.space.leq(da, mc.space.d(p, q))) {
                out.holds = false;
                out.witness = std::array<Vertex, 3>{p, q, q};
                return out;
            }
        }
    }
    return out;
}

PredicateResult check_simplex_assumption(const MetricCover& mc) {
    return check_pairs_near_endpoints(mc, [&](Vertex, Vertex a, Vertex b) { return mc.space.within(a, b, mc.r); });
}

PredicateResult check_strong_simplex_assumption(const MetricCover& mc) {
    const DistanceSpace& s = mc.space;
    return check_pairs_near_endpoints(
        mc, [&](Vertex v, Vertex a, Vertex b) { return s.leq(2 * s.d(a, b), s.d(a, v) + s.d(v, b)); });
}

}  // namespace obstruct
