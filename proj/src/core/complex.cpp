#include "obstruct/core/complex.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_set>

#include <boost/dynamic_bitset.hpp>

#include "obstruct/core/error.hpp"

namespace obstruct {

using Bits = boost::dynamic_bitset<>;

struct Complex::Data {
    ComplexKind kind = ComplexKind::Explicit;
    VertexSet vertices;

    // Explicit backing.
    std::unordered_set<Simplex> members;
    std::vector<std::vector<Simplex>> by_dim;

    // Flag backing, indexed by position in `vertices`.
    std::vector<Bits> adj;
    int cap = -1;

    std::size_t local(Vertex v) const {
        return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
    }
    bool has(Vertex v) const { return contains_vertex(vertices, v); }
};

struct ComplexAccess {
    static const Complex::Data& data(const Complex& k) { return *k.data_; }
    static Complex make(std::shared_ptr<const Complex::Data> d) { return Complex(std::move(d)); }
};

namespace {

using Data = Complex::Data;

const Data& data_of(const Complex& k) {
    return ComplexAccess::data(k);
}

Complex explicit_from_set(std::unordered_set<Simplex> members) {
    auto d = std::make_shared<Data>();
    d->kind = ComplexKind::Explicit;
    for (const Simplex& s : members) {
        auto dim = static_cast<std::size_t>(s.dim());
        if (d->by_dim.size() <= dim)
            d->by_dim.resize(dim + 1);
        d->by_dim[dim].push_back(s);
    }
    for (auto& layer : d->by_dim)
        std::sort(layer.begin(), layer.end());
    if (!d->by_dim.empty()) {
        for (const Simplex& s : d->by_dim[0])
            d->vertices.push_back(s[0]);
    }
    d->members = std::move(members);
    return ComplexAccess::make(std::move(d));
}

// Downward closure by repeatedly dropping one vertex; each simplex is
// expanded once.
void close_into(std::unordered_set<Simplex>& members, const Simplex& top) {
    std::vector<Simplex> stack{top};
    while (!stack.empty()) {
        Simplex s = std::move(stack.back());
        stack.pop_back();
        if (!members.insert(s).second || s.size() == 1)
            continue;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex f = s.facet(i);
            if (!members.count(f))
                stack.push_back(std::move(f));
        }
    }
}

Complex flag_from_predicate(const VertexSet& vertices, const std::function<bool(Vertex, Vertex)>& adjacent, int cap) {
    auto d = std::make_shared<Data>();
    d->kind = ComplexKind::Flag;
    d->vertices = vertices;
    d->cap = cap;
    const std::size_t n = vertices.size();
    d->adj.assign(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (adjacent(vertices[i], vertices[j])) {
                d->adj[i].set(j);
                d->adj[j].set(i);
            }
        }
    }
    return ComplexAccess::make(std::move(d));
}

// Depth-first clique search. Visits cliques of size <= max_size in
// lexicographic order of their sorted local indices, which equals the
// lexicographic order of vertex ids.
template <typename F>
void visit_cliques(const Data& d, std::size_t max_size, F&& visit) {
    if (max_size == 0)
        return;
    std::vector<std::size_t> current;
    std::function<void(const Bits&)> extend = [&](const Bits& candidates) {
        for (auto i = candidates.find_first(); i != Bits::npos; i = candidates.find_next(i)) {
            current.push_back(i);
            visit(current);
            if (current.size() < max_size) {
                Bits next = candidates & d.adj[i];
                for (auto j = next.find_first(); j != Bits::npos && j <= i; j = next.find_next(j))
                    next.reset(j);
                if (next.any())
                    extend(next);
            }
            current.pop_back();
        }
    };
    Bits all(d.vertices.size());
    all.set();
    extend(all);
}

Simplex to_simplex(const Data& d, const std::vector<std::size_t>& local) {
    std::vector<Vertex> vs;
    vs.reserve(local.size());
    for (auto i : local)
        vs.push_back(d.vertices[i]);
    return Simplex::from_sorted(std::move(vs));
}

void refuse_above_cap(const Data& d, int dim) {
    if (d.kind == ComplexKind::Flag && dim > d.cap)
        throw EnumerationRefused("flag complex listing requested in dimension " + std::to_string(dim) +
                                 " above its ceiling " + std::to_string(d.cap));
}

// Vertices of K adjacent to every vertex of sigma (flag backing).
VertexSet common_neighbors(const Data& d, const Simplex& sigma) {
    Bits acc(d.vertices.size());
    acc.set();
    for (Vertex v : sigma)
        acc &= d.adj[d.local(v)];
    VertexSet out;
    for (auto i = acc.find_first(); i != Bits::npos; i = acc.find_next(i))
        out.push_back(d.vertices[i]);
    return out;
}

void require_member(const Complex& k, const Simplex& s, const char* what) {
    if (!k.contains(s))
        throw NotASimplex(std::string(what) + ": simplex is not in the complex");
}

Complex filter(const Complex& k, const std::function<bool(const Simplex&)>& keep) {
    std::unordered_set<Simplex> out;
    for (const Simplex& s : k.all_simplices()) {
        if (keep(s))
            out.insert(s);
    }
    return explicit_from_set(std::move(out));
}

}  // namespace

Complex::Complex() : data_(std::make_shared<Data>()) {}

Complex Complex::from_facets(const std::vector<std::vector<Vertex>>& facets) {
    std::unordered_set<Simplex> members;
    for (const auto& f : facets) {
        if (f.empty())
            throw InvalidInput("empty facet");
        close_into(members, Simplex(f));
    }
    return explicit_from_set(std::move(members));
}

Complex Complex::from_simplices(const std::vector<Simplex>& simplices) {
    std::unordered_set<Simplex> members;
    for (const Simplex& s : simplices)
        close_into(members, s);
    return explicit_from_set(std::move(members));
}

Complex Complex::standard_simplex(const VertexSet& s) {
    if (s.empty())
        return Complex();
    return from_simplices({Simplex(s)});
}

Complex Complex::flag(VertexSet vertices, const std::vector<Edge>& edges, int dim_cap) {
    vertices = make_vertex_set(std::move(vertices));
    auto d = std::make_shared<Data>();
    d->kind = ComplexKind::Flag;
    d->vertices = std::move(vertices);
    d->cap = dim_cap;
    const std::size_t n = d->vertices.size();
    d->adj.assign(n, Bits(n));
    for (const auto& [u, v] : edges) {
        if (u == v)
            continue;
        if (!d->has(u) || !d->has(v))
            throw InvalidInput("edge endpoint outside the vertex set");
        auto i = d->local(u);
        auto j = d->local(v);
        d->adj[i].set(j);
        d->adj[j].set(i);
    }
    return Complex(std::move(d));
}

ComplexKind Complex::kind() const {
    return data_->kind;
}

const VertexSet& Complex::vertices() const {
    return data_->vertices;
}

bool Complex::has_vertex(Vertex v) const {
    return data_->has(v);
}

bool Complex::contains(std::span<const Vertex> sorted) const {
    const Data& d = *data_;
    if (sorted.empty())
        return false;
    if (d.kind == ComplexKind::Explicit) {
        if (static_cast<std::size_t>(sorted.size()) > d.by_dim.size())
            return false;
        return d.members.count(Simplex::from_sorted({sorted.begin(), sorted.end()})) > 0;
    }
    std::vector<std::size_t> idx;
    idx.reserve(sorted.size());
    for (Vertex v : sorted) {
        if (!d.has(v))
            return false;
        idx.push_back(d.local(v));
    }
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            if (!d.adj[idx[i]].test(idx[j]))
                return false;
        }
    }
    return true;
}

bool Complex::adjacent(Vertex u, Vertex v) const {
    if (u == v)
        return false;
    Vertex lo = std::min(u, v);
    Vertex hi = std::max(u, v);
    const Vertex pair[2] = {lo, hi};
    return contains(std::span<const Vertex>(pair, 2));
}

VertexSet Complex::neighbors(Vertex v) const {
    VertexSet out;
    for (Vertex u : data_->vertices) {
        if (adjacent(u, v))
            out.push_back(u);
    }
    return out;
}

std::vector<Edge> Complex::edges() const {
    std::vector<Edge> out;
    const Data& d = *data_;
    if (d.kind == ComplexKind::Explicit) {
        if (d.by_dim.size() > 1) {
            for (const Simplex& s : d.by_dim[1])
                out.emplace_back(s[0], s[1]);
        }
        return out;
    }
    for (std::size_t i = 0; i < d.vertices.size(); ++i) {
        for (auto j = d.adj[i].find_next(i); j != Bits::npos; j = d.adj[i].find_next(j))
            out.emplace_back(d.vertices[i], d.vertices[j]);
    }
    return out;
}

int Complex::dim_cap() const {
    const Data& d = *data_;
    if (d.kind == ComplexKind::Flag)
        return d.cap;
    return static_cast<int>(d.by_dim.size()) - 1;
}

std::vector<Simplex> Complex::simplices(int dim) const {
    const Data& d = *data_;
    if (dim < 0)
        return {};
    if (d.kind == ComplexKind::Explicit) {
        if (static_cast<std::size_t>(dim) >= d.by_dim.size())
            return {};
        return d.by_dim[static_cast<std::size_t>(dim)];
    }
    refuse_above_cap(d, dim);
    std::vector<Simplex> out;
    const auto want = static_cast<std::size_t>(dim) + 1;
    // Search only to the wanted size; shorter cliques are passed over.
    visit_cliques(d, want, [&](const std::vector<std::size_t>& c) {
        if (c.size() == want)
            out.push_back(to_simplex(d, c));
    });
    return out;
}

std::vector<Simplex> Complex::simplices_up_to(int dim) const {
    const Data& d = *data_;
    std::vector<Simplex> out;
    if (dim < 0)
        return out;
    if (d.kind == ComplexKind::Explicit) {
        for (std::size_t k = 0; k < d.by_dim.size() && static_cast<int>(k) <= dim; ++k)
            out.insert(out.end(), d.by_dim[k].begin(), d.by_dim[k].end());
        return out;
    }
    refuse_above_cap(d, dim);
    visit_cliques(d, static_cast<std::size_t>(dim) + 1,
                  [&](const std::vector<std::size_t>& c) { out.push_back(to_simplex(d, c)); });
    std::stable_sort(out.begin(), out.end(), DimLexLess{});
    return out;
}

std::size_t Complex::count(int dim) const {
    const Data& d = *data_;
    if (dim < 0)
        return 0;
    if (d.kind == ComplexKind::Explicit)
        return static_cast<std::size_t>(dim) < d.by_dim.size() ? d.by_dim[static_cast<std::size_t>(dim)].size() : 0;
    refuse_above_cap(d, dim);
    std::size_t n = 0;
    const auto want = static_cast<std::size_t>(dim) + 1;
    visit_cliques(d, want, [&](const std::vector<std::size_t>& c) { n += (c.size() == want); });
    return n;
}

Complex Complex::with_dim_cap(int cap) const {
    if (data_->kind == ComplexKind::Explicit || data_->cap == cap)
        return *this;
    auto d = std::make_shared<Data>(*data_);
    d->cap = cap;
    return Complex(std::move(d));
}

Complex Complex::materialize() const {
    if (data_->kind == ComplexKind::Explicit)
        return *this;
    std::unordered_set<Simplex> members;
    for (Simplex& s : all_simplices())
        members.insert(std::move(s));
    return explicit_from_set(std::move(members));
}

bool Complex::same_simplices(const Complex& other, int up_to_dim) const {
    return with_dim_cap(up_to_dim).simplices_up_to(up_to_dim) ==
           other.with_dim_cap(up_to_dim).simplices_up_to(up_to_dim);
}

Complex restriction(const Complex& k, const VertexSet& s) {
    const Data& d = data_of(k);
    if (d.kind == ComplexKind::Flag) {
        return flag_from_predicate(set_intersection(d.vertices, s),
                                   [&](Vertex u, Vertex v) { return k.adjacent(u, v); }, d.cap);
    }
    return filter(k, [&](const Simplex& t) { return is_subset(t.span(), s); });
}

Complex star(const Complex& k, const Simplex& sigma) {
    require_member(k, sigma, "star");
    const Data& d = data_of(k);
    if (d.kind == ComplexKind::Flag)
        return restriction(k, set_union(sigma.span(), common_neighbors(d, sigma)));
    return filter(k, [&](const Simplex& mu) { return k.contains(simplex_union(sigma, mu)); });
}

Complex obstruction(const Complex& k, const Simplex& sigma, const VertexSet& a) {
    require_member(k, sigma, "obstruction");
    const Data& d = data_of(k);
    if (d.kind == ComplexKind::Flag)
        return restriction(k, set_intersection(a, set_union(sigma.span(), common_neighbors(d, sigma))));
    return filter(k, [&](const Simplex& mu) {
        return is_subset(mu.span(), a) && k.contains(simplex_union(sigma, mu));
    });
}

Complex obstruction_by_definition(const Complex& k, const Simplex& sigma, const VertexSet& a, int cap) {
    require_member(k, sigma, "obstruction");
    std::vector<Simplex> found;
    std::vector<Vertex> mu;
    const auto max_size = static_cast<std::size_t>(std::max(cap, -1) + 1);
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
        for (std::size_t i = from; i < a.size(); ++i) {
            mu.push_back(a[i]);
            if (k.contains(set_union(sigma.span(), mu))) {
                found.push_back(Simplex::from_sorted(mu));
                if (mu.size() < max_size)
                    grow(i + 1);
            }
            mu.pop_back();
        }
    };
    // Membership is downward closed, so a failing μ has no members above it.
    grow(0);
    return Complex::from_simplices(found);
}

bool is_central(const Complex& k, const Simplex& tau) {
    require_member(k, tau, "is_central");
    const Data& d = data_of(k);
    if (d.kind == ComplexKind::Flag)
        return set_union(tau.span(), common_neighbors(d, tau)) == d.vertices;
    for (const Simplex& s : k.all_simplices()) {
        if (!k.contains(simplex_union(s, tau)))
            return false;
    }
    return true;
}

VertexSet central_vertices(const Complex& k) {
    VertexSet out;
    for (Vertex v : k.vertices()) {
        if (is_central(k, Simplex{v}))
            out.push_back(v);
    }
    return out;
}

Complex skeleton(const Complex& k, int n) {
    std::unordered_set<Simplex> members;
    for (Simplex& s : k.with_dim_cap(n).simplices_up_to(n))
        members.insert(std::move(s));
    return explicit_from_set(std::move(members));
}

Complex join(const Complex& k, const Complex& l) {
    if (intersects(k.vertices(), l.vertices()))
        throw JoinOverlap("join needs disjoint vertex sets");
    if (k.empty())
        return l;
    if (l.empty())
        return k;
    if (k.is_flag() && l.is_flag()) {
        const VertexSet& kv = k.vertices();
        const VertexSet& lv = l.vertices();
        return flag_from_predicate(
            set_union(kv, lv),
            [&](Vertex u, Vertex v) {
                bool uk = contains_vertex(kv, u);
                bool vk = contains_vertex(kv, v);
                if (uk != vk)
                    return true;
                return uk ? k.adjacent(u, v) : l.adjacent(u, v);
            },
            k.dim_cap() + l.dim_cap() + 1);
    }
    std::vector<Simplex> ks = k.all_simplices();
    std::vector<Simplex> ls = l.all_simplices();
    std::unordered_set<Simplex> members(ks.begin(), ks.end());
    members.insert(ls.begin(), ls.end());
    for (const Simplex& s : ks) {
        for (const Simplex& t : ls)
            members.insert(simplex_union(s, t));
    }
    return explicit_from_set(std::move(members));
}

Complex union_of(const Complex& k, const Complex& l, int cap) {
    if (cap < 0)
        cap = std::max(k.dim_cap(), l.dim_cap());
    auto listed = [cap](const Complex& c) { return c.is_flag() ? c.with_dim_cap(cap).all_simplices() : c.all_simplices(); };
    std::unordered_set<Simplex> members;
    for (Simplex& s : listed(k))
        members.insert(std::move(s));
    for (Simplex& s : listed(l))
        members.insert(std::move(s));
    return explicit_from_set(std::move(members));
}

Complex intersection_of(const Complex& k, const Complex& l, int cap) {
    if (cap < 0)
        cap = std::max(k.dim_cap(), l.dim_cap());
    if (k.is_flag() && l.is_flag()) {
        return flag_from_predicate(set_intersection(k.vertices(), l.vertices()),
                                   [&](Vertex u, Vertex v) { return k.adjacent(u, v) && l.adjacent(u, v); }, cap);
    }
    // Walk the explicit side; membership on the other side is exact.
    const Complex& walk = k.is_flag() ? l : k;
    const Complex& probe = k.is_flag() ? k : l;
    std::unordered_set<Simplex> members;
    for (Simplex& s : walk.all_simplices()) {
        if (probe.contains(s))
            members.insert(std::move(s));
    }
    return explicit_from_set(std::move(members));
}

Complex restriction_union(const Complex& k, const VertexSet& x, const VertexSet& y) {
    const Data& d = data_of(k);
    if (d.kind == ComplexKind::Flag) {
        // A clique of the union graph cannot meet both X\Y and Y\X, so the
        // union of the two restrictions is again a clique complex.
        return flag_from_predicate(
            set_intersection(d.vertices, set_union(x, y)),
            [&](Vertex u, Vertex v) {
                if (!k.adjacent(u, v))
                    return false;
                bool in_x = contains_vertex(x, u) && contains_vertex(x, v);
                bool in_y = contains_vertex(y, u) && contains_vertex(y, v);
                return in_x || in_y;
            },
            d.cap);
    }
    return filter(k, [&](const Simplex& s) { return is_subset(s.span(), x) || is_subset(s.span(), y); });
}

bool is_subcomplex(const Complex& sub, const Complex& k, int up_to_dim) {
    for (const Simplex& s : sub.with_dim_cap(up_to_dim).simplices_up_to(up_to_dim)) {
        if (!k.contains(s))
            return false;
    }
    return true;
}

}  // namespace obstruct
