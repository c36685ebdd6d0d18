#include "obstruct/analysis/criteria.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "obstruct/core/error.hpp"

namespace obstruct {

namespace {

using Item = PComplementItem;

CriterionVerdict verdict(std::string id, std::string hypothesis) {
    CriterionVerdict v;
    v.id = std::move(id);
    v.hypothesis = std::move(hypothesis);
    return v;
}

CriterionVerdict not_applicable(CriterionVerdict v, std::string reason) {
    v.status = HypothesisStatus::NotApplicable;
    v.detail = std::move(reason);
    return v;
}

CriterionVerdict fails(CriterionVerdict v, std::string witness) {
    v.status = HypothesisStatus::Fails;
    v.detail = std::move(witness);
    return v;
}

CriterionVerdict inconclusive(CriterionVerdict v, std::string reason) {
    v.status = HypothesisStatus::Inconclusive;
    v.detail = std::move(reason);
    return v;
}

CriterionVerdict holds(CriterionVerdict v, Conclusion c, std::string detail) {
    v.status = HypothesisStatus::Holds;
    v.conclusion = std::move(c);
    v.detail = std::move(detail);
    return v;
}

Conclusion weak_equivalence() {
    return {"weak equivalence", kAllDegrees, -1, 0};
}

Conclusion homology_isomorphism() {
    return {"isomorphism on homology with any coefficients", kAllDegrees, -1, 0};
}

/// Fibers n-connected: iso on H_i for i <= n and onto H_{n+1}.
Conclusion fibers_connected(int n) {
    if (n >= kAllDegrees)
        return {"homotopy fibers are n-connected for every n (weak equivalence)", kAllDegrees, -1, 0};
    return {"homotopy fibers are " + std::to_string(n) + "-connected", n, n + 1, 0};
}

std::string level_text(int n) {
    return n >= kAllDegrees ? "every n" : "n = " + std::to_string(n);
}

bool same_complex(const Complex& a, const Complex& b) {
    return a.all_simplices() == b.all_simplices();
}

std::vector<const Item*> edges_of(const std::vector<Item>& items) {
    std::vector<const Item*> out;
    for (const Item& it : items) {
        if (it.simplex.dim() == 1)
            out.push_back(&it);
    }
    return out;
}

bool contains_set(const Complex& k, const VertexSet& s) {
    return !s.empty() && k.contains(std::span<const Vertex>(s));
}

VertexSet with_vertices(const Simplex& s, std::span<const Vertex> extra) {
    return set_union(s.span(), extra);
}

/// Certified connectivity of a complex: kAllDegrees when contractible, 0 when
/// only connected, -1 otherwise. Homology decides connectedness; anything
/// higher needs a certificate.
int certified_connectivity(const Complex& c) {
    if (c.empty())
        return -1;
    if (contractibility_certificate(c).certified())
        return kAllDegrees;
    auto h = homology(c, Coefficients::integers(), 0, true);
    return h.group(0).trivial() ? 0 : -1;
}

std::string connectivity_text(int n) {
    if (n >= kAllDegrees)
        return "certified contractible";
    if (n == 0)
        return "connected, higher connectivity not certified";
    return "not connected";
}

/**
 * Largest n with check(item, n) for every listed item of dimension <= n + 1.
 * When the listing is all of K \ P and every item also passes the check at
 * the next level, the answer is kAllDegrees. The first failing item is
 * reported through `witness`.
 */
int connectivity_level(const CriterionContext& ctx, const std::function<bool(const Item&, int)>& check,
                       const Item** witness) {
    *witness = nullptr;
    for (int n = 0;; ++n) {
        for (const Item& it : ctx.items) {
            if (it.simplex.dim() <= n + 1 && !check(it, n)) {
                *witness = &it;
                return n - 1;
            }
        }
        if (n + 1 >= ctx.dim_cap) {
            if (!ctx.exhausted)
                return n;
            for (const Item& it : ctx.items) {
                if (!check(it, n + 1))
                    return n;
            }
            return kAllDegrees;
        }
    }
}

std::string describe(const CriterionContext& ctx, const Item& it) {
    return "St(" + ctx.labels.format(it.simplex) + ",A)";
}

std::string obstruction_text(const CriterionContext& ctx, const Item& it) {
    if (it.obstruction.empty())
        return describe(ctx, it) + " is empty";
    std::string facets;
    for (const Simplex& s : it.obstruction.all_simplices()) {
        bool maximal = true;
        for (Vertex v : it.obstruction.vertices()) {
            if (!s.contains(v) && it.obstruction.contains(s.with(v))) {
                maximal = false;
                break;
            }
        }
        if (maximal)
            facets += (facets.empty() ? "" : " ∪ ") + ("Δ" + ctx.labels.format(s));
    }
    return describe(ctx, it) + " = " + facets;
}

void flag_discrepancy(const CriterionContext& ctx, const std::string& id, const std::string& what) {
    if (ctx.discrepancies)
        ctx.discrepancies->push_back(id + ": " + what);
}

// ---------------------------------------------------------------------------
// General complexes

CriterionVerdict no_cross_simplices(const CriterionContext& ctx) {
    auto v = verdict("no-cross-simplices", "K \\ P is empty, so K_X ∪ K_Y = K");
    auto edges = edges_of(ctx.items);
    if (!edges.empty())
        return fails(v, ctx.labels.format(edges.front()->simplex) + " lies in K \\ P");
    return holds(v, weak_equivalence(), "no simplex meets X\\A and Y\\A");
}

CriterionVerdict contractible_obstructions(const CriterionContext& ctx) {
    auto v = verdict("contractible-obstructions", "St(σ,A) is contractible for every σ in K \\ P");
    if (ctx.items.empty())
        return not_applicable(v, "K \\ P is empty");
    for (const Item& it : ctx.items) {
        if (it.contractible())
            continue;
        if (it.status == ObstructionStatus::Empty)
            return fails(v, describe(ctx, it) + " is empty");
        if (!it.acyclic())
            return fails(v, obstruction_text(ctx, it) + ", which is not acyclic");
        return inconclusive(v, describe(ctx, it) + " is Z-acyclic but contractibility is not certified");
    }
    std::size_t cones = 0;
    for (const Item& it : ctx.items)
        cones += it.status == ObstructionStatus::ConeCertified;
    std::string detail = std::to_string(ctx.items.size()) + " obstructions certified (" + std::to_string(cones) +
                         " cones, " + std::to_string(ctx.items.size() - cones) + " collapses)";
    if (!ctx.exhausted)
        return inconclusive(v, detail + " up to dimension " + std::to_string(ctx.dim_cap) +
                                   "; K \\ P continues above it");
    return holds(v, weak_equivalence(), detail);
}

CriterionVerdict skeletal_connectivity(const CriterionContext& ctx) {
    auto v = verdict("skeletal-connectivity", "St(σ,A) is n-connected for every σ in (sk_{n+1} K) \\ P");
    if (ctx.items.empty())
        return not_applicable(v, "K \\ P is empty");
    const Item* witness = nullptr;
    int n = connectivity_level(
        ctx, [](const Item& it, int level) { return level == 0 ? it.connected() : it.contractible(); }, &witness);
    if (n < 0)
        return fails(v, describe(ctx, *witness) + " is not connected");
    std::string detail = "holds for " + level_text(n);
    if (witness)
        detail += "; " + describe(ctx, *witness) + " is not certified " + std::to_string(n + 1) + "-connected";
    else if (n < kAllDegrees)
        detail += "; higher levels need simplices above the dimension cap";
    return holds(v, fibers_connected(n), detail);
}

CriterionVerdict torsion_obstructions(const CriterionContext& ctx) {
    auto v = verdict("torsion-obstructions",
                     "every St(σ,A) is connected with reduced integral homology a finite p-group in each degree");
    if (ctx.items.empty())
        return not_applicable(v, "K \\ P is empty");
    std::vector<std::uint64_t> primes;
    for (const Item& it : ctx.items) {
        for (const auto& g : it.profile.groups) {
            for (std::uint64_t q : g.torsion) {
                for (std::uint64_t p = 2; p <= q; ++p) {
                    if (q % p == 0) {
                        primes.push_back(p);
                        break;
                    }
                }
            }
        }
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    if (primes.empty())
        return not_applicable(v, "no obstruction has torsion; see acyclic-obstructions");
    if (primes.size() > 1)
        return fails(v, "torsion at more than one prime");
    const std::uint64_t p = primes.front();
    for (const Item& it : ctx.items) {
        if (!it.connected())
            return fails(v, describe(ctx, it) + " is not connected");
        for (int d = 1; d <= it.profile.max_degree(); ++d) {
            if (it.profile.betti(d) != 0)
                return fails(v, describe(ctx, it) + " has free homology in degree " + std::to_string(d));
        }
    }
    if (!ctx.exhausted)
        return inconclusive(v, "K \\ P continues above dimension " + std::to_string(ctx.dim_cap));
    Conclusion c{"homology isomorphism with Z/q coefficients for every prime q ≠ " + std::to_string(p), kAllDegrees,
                 -1, p};
    return holds(v, c, "p = " + std::to_string(p));
}

CriterionVerdict acyclic_obstructions(const CriterionContext& ctx) {
    auto v = verdict("acyclic-obstructions", "St(σ,A) has trivial reduced integral homology for every σ in K \\ P");
    if (ctx.items.empty())
        return not_applicable(v, "K \\ P is empty");
    for (const Item& it : ctx.items) {
        if (!it.acyclic())
            return fails(v, describe(ctx, it) + (it.obstruction.empty() ? " is empty" : " is not acyclic"));
    }
    if (!ctx.exhausted)
        return inconclusive(v, "acyclic up to dimension " + std::to_string(ctx.dim_cap) +
                                   "; K \\ P continues above it");
    return holds(v, homology_isomorphism(), "all " + std::to_string(ctx.items.size()) + " obstructions acyclic");
}

CriterionVerdict common_obstruction_vertex(const CriterionContext& ctx) {
    auto v = verdict("common-obstruction-vertex", "the obstructions of the edges in K \\ P share a vertex");
    auto edges = edges_of(ctx.items);
    if (edges.empty())
        return not_applicable(v, "K \\ P is empty");
    VertexSet common = edges.front()->obstruction.vertices();
    for (const Item* e : edges)
        common = set_intersection(common, e->obstruction.vertices());
    if (common.empty())
        return fails(v, "no vertex lies in every edge obstruction");
    return holds(v, fibers_connected(0), "shared vertices " + ctx.labels.format(common));
}

// One complex L that all obstructions up to some level must equal.
CriterionVerdict fixed_obstruction(const CriterionContext& ctx, CriterionVerdict v, const Complex& l,
                                   const std::string& l_name) {
    const int l_conn = certified_connectivity(l);
    const Item* witness = nullptr;
    int n = connectivity_level(
        ctx,
        [&](const Item& it, int level) {
            if (!same_complex(it.obstruction, l))
                return false;
            return level == 0 ? l_conn >= 0 : l_conn >= kAllDegrees;
        },
        &witness);
    if (n < 0) {
        if (witness && !same_complex(witness->obstruction, l))
            return fails(v, describe(ctx, *witness) + " differs from " + l_name);
        return fails(v, l_name + " is " + connectivity_text(l_conn));
    }
    return holds(v, fibers_connected(n), l_name + " " + connectivity_text(l_conn) + "; holds for " + level_text(n));
}

CriterionVerdict constant_obstruction(const CriterionContext& ctx) {
    auto v = verdict("constant-obstruction",
                     "an n-connected L equals St(σ,A) for every σ in (sk_{n+1} K) \\ P");
    if (ctx.items.empty())
        return not_applicable(v, "K \\ P is empty");
    const Item& first = ctx.items.front();
    return fixed_obstruction(ctx, v, first.obstruction, describe(ctx, first));
}

CriterionVerdict restriction_obstruction(const CriterionContext& ctx) {
    auto v = verdict("restriction-obstruction",
                     "K_A is n-connected and equals St(σ,A) for every σ in (sk_{n+1} K) \\ P");
    if (ctx.items.empty())
        return not_applicable(v, "K \\ P is empty");
    try {
        return fixed_obstruction(ctx, v, full_restriction(ctx.k, ctx.cover.a), "K_A");
    } catch (const EnumerationRefused& e) {
        return inconclusive(v, e.what());
    }
}

// σ ∪ A ∈ K for σ in the skeleton; L = Δ[A] is contractible.
CriterionVerdict whole_intersection_level(const CriterionContext& ctx, CriterionVerdict v) {
    const Item* witness = nullptr;
    int n = connectivity_level(
        ctx, [&](const Item& it, int) { return contains_set(ctx.k, with_vertices(it.simplex, ctx.cover.a)); },
        &witness);
    if (n < 0)
        return fails(v, ctx.labels.format(witness->simplex) + " ∪ A is not a simplex");
    return holds(v, fibers_connected(n), "holds for " + level_text(n));
}

CriterionVerdict full_intersection_join(const CriterionContext& ctx) {
    auto v = verdict("full-intersection-join",
                     "A is nonempty and σ ∪ μ ∈ K for every σ in (sk_{n+1} K) \\ P and every μ ⊆ A");
    if (ctx.items.empty())
        return not_applicable(v, "K \\ P is empty");
    if (ctx.cover.a.empty())
        return fails(v, "A is empty");
    return whole_intersection_level(ctx, v);
}

CriterionVerdict single_intersection_vertex(const CriterionContext& ctx) {
    auto v = verdict("single-intersection-vertex", "A = {v} and σ ∪ {v} ∈ K for every σ in (sk_{n+1} K) \\ P");
    if (ctx.items.empty())
        return not_applicable(v, "K \\ P is empty");
    if (ctx.cover.a.size() != 1)
        return not_applicable(v, "A has " + std::to_string(ctx.cover.a.size()) + " vertices");
    return whole_intersection_level(ctx, v);
}

// Whether K has a simplex in dimension d; false means K is listed in full below it.
bool has_simplices_at(const Complex& k, int d) {
    if (!k.is_flag())
        return k.dim_cap() >= d;
    return !k.with_dim_cap(d).simplices(d).empty();
}

CriterionVerdict one_entry_point(const CriterionContext& ctx) {
    auto v = verdict("one-entry-point",
                     "some v in A has τ ∪ {v} ∈ K for every τ in K meeting X\\A and Y\\A with |τ \\ A| <= n + 2");
    if (ctx.items.empty())
        return not_applicable(v, "K \\ P is empty");
    if (ctx.cover.a.empty())
        return fails(v, "A is empty");
    const VertexSet x_only = ctx.cover.x_only();
    const VertexSet y_only = ctx.cover.y_only();
    std::vector<Simplex> crossing;
    for (const Simplex& t : ctx.k.simplices_up_to(ctx.dim_cap)) {
        if (intersects(t.span(), x_only) && intersects(t.span(), y_only))
            crossing.push_back(t);
    }
    // Simplices with |τ \ A| = m can carry all of A, so the listing decides
    // levels with m - 1 + |A| <= dim_cap unless K stops below dim_cap + 1.
    const int a_size = static_cast<int>(ctx.cover.a.size());
    const bool complete = !has_simplices_at(ctx.k, ctx.dim_cap + 1);
    const int listing_bound = complete ? kAllDegrees : ctx.dim_cap - 1 - a_size;

    int best = -1;
    Vertex best_v = ctx.cover.a.front();
    std::optional<Simplex> best_witness;
    for (Vertex a : ctx.cover.a) {
        int level = listing_bound;
        std::optional<Simplex> witness;
        for (const Simplex& t : crossing) {
            if (ctx.k.contains(t.with(a).span()))
                continue;
            const int m = static_cast<int>(set_difference(t.span(), ctx.cover.a).size());
            if (m - 3 < level) {
                level = m - 3;
                witness = t;
            }
        }
        if (level > best) {
            best = level;
            best_v = a;
            best_witness = witness;
        }
    }
    if (best < 0) {
        if (listing_bound < 0)
            return inconclusive(v, "dimension cap too small to decide any level with |A| = " +
                                       std::to_string(a_size));
        return fails(v, "every v in A misses some τ with |τ \\ A| = 2");
    }
    // The corollary makes v a central vertex of every St(σ,A), σ in (sk_{n+1} K) \ P.
    for (const Item& it : ctx.items) {
        if (it.simplex.dim() > best + 1)
            continue;
        if (!it.obstruction.has_vertex(best_v) || !is_central(it.obstruction, Simplex{best_v}))
            flag_discrepancy(ctx, v.id,
                             ctx.labels.name(best_v) + " is not central in " + describe(ctx, it));
    }
    std::string detail = "v = " + ctx.labels.name(best_v) + ", holds for " + level_text(best);
    if (best_witness)
        detail += "; " + ctx.labels.format(*best_witness) + " ∪ {v} is not a simplex";
    return holds(v, fibers_connected(best), detail);
}

// ---------------------------------------------------------------------------
// Clique complexes. Edge conditions decide the whole of K \ P here.

CriterionVerdict clique_standard_simplex(const CriterionContext& ctx) {
    auto v = verdict("clique-standard-simplex",
                     "each edge obstruction is a standard simplex and St(σ,A) ≠ ∅ for σ in (sk_{n+1} K) \\ P");
    auto edges = edges_of(ctx.items);
    if (edges.empty())
        return not_applicable(v, "K \\ P is empty");
    for (const Item* e : edges) {
        const VertexSet& vs = e->obstruction.vertices();
        if (!vs.empty() && !e->obstruction.contains(std::span<const Vertex>(vs)))
            return fails(v, describe(ctx, *e) + " is not a standard simplex");
    }
    const Item* witness = nullptr;
    int n = connectivity_level(
        ctx, [](const Item& it, int) { return !it.obstruction.empty(); }, &witness);
    if (n < 0)
        return fails(v, describe(ctx, *witness) + " is empty");
    std::string detail = "holds for " + level_text(n);
    if (witness)
        detail += "; " + describe(ctx, *witness) + " is empty";
    return holds(v, fibers_connected(n), detail);
}

CriterionVerdict clique_constant_obstruction(const CriterionContext& ctx) {
    auto v = verdict("clique-constant-obstruction", "all edges τ in K \\ P share one n-connected St(τ,A)");
    auto edges = edges_of(ctx.items);
    if (edges.empty())
        return not_applicable(v, "K \\ P is empty");
    for (const Item* e : edges) {
        if (!same_complex(e->obstruction, edges.front()->obstruction))
            return fails(v, describe(ctx, *e) + " differs from " + describe(ctx, *edges.front()));
    }
    const int n = certified_connectivity(edges.front()->obstruction);
    if (n < 0)
        return fails(v, describe(ctx, *edges.front()) + " is not connected");
    return holds(v, fibers_connected(n), "common obstruction " + connectivity_text(n));
}

CriterionVerdict clique_restriction_join(const CriterionContext& ctx) {
    auto v = verdict("clique-restriction-join",
                     "K_A is n-connected and τ ∪ {v} ∈ K for every edge τ in K \\ P and every v in A");
    auto edges = edges_of(ctx.items);
    if (edges.empty())
        return not_applicable(v, "K \\ P is empty");
    for (const Item* e : edges) {
        for (Vertex a : ctx.cover.a) {
            if (!ctx.k.contains(e->simplex.with(a)))
                return fails(v, ctx.labels.format(e->simplex.with(a)) + " is not a simplex");
        }
    }
    int n = -1;
    try {
        n = certified_connectivity(full_restriction(ctx.k, ctx.cover.a));
    } catch (const EnumerationRefused& e) {
        return inconclusive(v, e.what());
    }
    if (n < 0)
        return fails(v, "K_A is not connected");
    return holds(v, fibers_connected(n), "K_A " + connectivity_text(n));
}

CriterionVerdict clique_pairs(const CriterionContext& ctx) {
    auto v = verdict("clique-pairs",
                     "A is nonempty and τ ∪ μ ∈ K for every edge τ in K \\ P and every μ ⊆ A with |μ| <= 2");
    auto edges = edges_of(ctx.items);
    if (edges.empty())
        return not_applicable(v, "K \\ P is empty");
    if (ctx.cover.a.empty())
        return fails(v, "A is empty");
    const VertexSet& a = ctx.cover.a;
    for (const Item* e : edges) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = i; j < a.size(); ++j) {
                Simplex s = e->simplex.with(a[i]).with(a[j]);
                if (!ctx.k.contains(s))
                    return fails(v, ctx.labels.format(s) + " is not a simplex");
            }
        }
    }
    return holds(v, weak_equivalence(), "checked " + std::to_string(edges.size()) + " edges");
}

CriterionVerdict clique_single_vertex(const CriterionContext& ctx) {
    auto v = verdict("clique-single-vertex", "A = {v} and τ ∪ {v} ∈ K for every edge τ in K \\ P");
    auto edges = edges_of(ctx.items);
    if (edges.empty())
        return not_applicable(v, "K \\ P is empty");
    if (ctx.cover.a.size() != 1)
        return not_applicable(v, "A has " + std::to_string(ctx.cover.a.size()) + " vertices");
    for (const Item* e : edges) {
        Simplex s = e->simplex.with(ctx.cover.a.front());
        if (!ctx.k.contains(s))
            return fails(v, ctx.labels.format(s) + " is not a simplex");
    }
    return holds(v, weak_equivalence(), "v = " + ctx.labels.name(ctx.cover.a.front()));
}

// A weak equivalence through a central simplex of every obstruction.
void expect_central(const CriterionContext& ctx, const std::string& id, const VertexSet& centre) {
    const Simplex tau = Simplex::from_sorted(centre);
    for (const Item& it : ctx.items) {
        if (!it.obstruction.contains(tau) || !is_central(it.obstruction, tau))
            flag_discrepancy(ctx, id, ctx.labels.format(tau) + " is not central in " + describe(ctx, it));
    }
}

VertexSet edge_common_vertices(const std::vector<const Item*>& edges) {
    VertexSet common = edges.front()->obstruction.vertices();
    for (const Item* e : edges)
        common = set_intersection(common, e->obstruction.vertices());
    return common;
}

CriterionVerdict clique_entry_neighbours(const CriterionContext& ctx) {
    auto v = verdict("clique-entry-neighbours",
                     "some v in every edge obstruction is adjacent to every vertex of every edge obstruction");
    auto edges = edges_of(ctx.items);
    if (edges.empty())
        return not_applicable(v, "K \\ P is empty");
    VertexSet common = edge_common_vertices(edges);
    if (common.empty())
        return fails(v, "the edge obstructions share no vertex");
    for (Vertex c : common) {
        bool ok = true;
        for (const Item* e : edges) {
            for (Vertex w : e->obstruction.vertices()) {
                if (w != c && !ctx.k.adjacent(c, w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                break;
        }
        if (ok) {
            expect_central(ctx, v.id, {c});
            return holds(v, weak_equivalence(), "v = " + ctx.labels.name(c));
        }
    }
    return fails(v, "each shared vertex misses a neighbour in some edge obstruction");
}

CriterionVerdict clique_entry_central(const CriterionContext& ctx) {
    auto v = verdict("clique-entry-central", "some v is a central vertex of every edge obstruction");
    auto edges = edges_of(ctx.items);
    if (edges.empty())
        return not_applicable(v, "K \\ P is empty");
    for (Vertex c : edge_common_vertices(edges)) {
        bool ok = std::all_of(edges.begin(), edges.end(),
                              [&](const Item* e) { return is_central(e->obstruction, Simplex{c}); });
        if (ok) {
            expect_central(ctx, v.id, {c});
            return holds(v, weak_equivalence(), "v = " + ctx.labels.name(c));
        }
    }
    return fails(v, "no vertex is central in every edge obstruction");
}

CriterionVerdict clique_entry_point(const CriterionContext& ctx) {
    auto v = verdict("clique-entry-point",
                     "some v in A has τ ∪ {v} ∈ K for every τ in K with one vertex in X\\A, one in Y\\A and at "
                     "most one in A");
    auto edges = edges_of(ctx.items);
    if (edges.empty())
        return not_applicable(v, "K \\ P is empty");
    if (ctx.cover.a.empty())
        return fails(v, "A is empty");
    std::optional<Simplex> last_witness;
    for (Vertex c : ctx.cover.a) {
        std::optional<Simplex> witness;
        for (const Item* e : edges) {
            if (!ctx.k.contains(e->simplex.with(c))) {
                witness = e->simplex;
                break;
            }
            for (Vertex a : ctx.cover.a) {
                Simplex t = e->simplex.with(a);
                if (ctx.k.contains(t) && !ctx.k.contains(t.with(c))) {
                    witness = t;
                    break;
                }
            }
            if (witness)
                break;
        }
        if (!witness) {
            expect_central(ctx, v.id, {c});
            return holds(v, weak_equivalence(), "v = " + ctx.labels.name(c));
        }
        last_witness = witness;
    }
    return fails(v, "no v works; e.g. " + ctx.labels.format(*last_witness) + " ∪ {" +
                        ctx.labels.name(ctx.cover.a.back()) + "} is not a simplex");
}

CriterionVerdict clique_two_entry_points(const CriterionContext& ctx) {
    auto v = verdict("clique-two-entry-points",
                     "some a_X, a_Y in A absorb the edges from A into X\\A and Y\\A respectively, and every edge "
                     "τ in K \\ P has τ ∪ {a_X, a_Y} ∈ K");
    auto edges = edges_of(ctx.items);
    if (edges.empty())
        return not_applicable(v, "K \\ P is empty");
    if (ctx.cover.a.empty())
        return fails(v, "A is empty");
    const VertexSet x_only = ctx.cover.x_only();
    const VertexSet y_only = ctx.cover.y_only();
    auto absorbs = [&](Vertex entry, const VertexSet& side) {
        for (Vertex a : ctx.cover.a) {
            for (Vertex s : side) {
                if (ctx.k.adjacent(a, s) && !ctx.k.contains(Simplex{a, s}.with(entry)))
                    return false;
            }
        }
        return true;
    };
    for (Vertex ax : ctx.cover.a) {
        if (!absorbs(ax, x_only))
            continue;
        for (Vertex ay : ctx.cover.a) {
            if (!absorbs(ay, y_only))
                continue;
            bool ok = std::all_of(edges.begin(), edges.end(),
                                  [&](const Item* e) { return ctx.k.contains(e->simplex.with(ax).with(ay)); });
            if (ok) {
                expect_central(ctx, v.id, make_vertex_set({ax, ay}));
                return holds(v, weak_equivalence(),
                             "a_X = " + ctx.labels.name(ax) + ", a_Y = " + ctx.labels.name(ay));
            }
        }
    }
    return fails(v, "no pair of entry points satisfies all three conditions");
}

// ---------------------------------------------------------------------------
// Distance spaces

std::string pair_text(const MetricCover& mc, Vertex x, Vertex y) {
    return "(" + mc.space.labels().name(x) + "," + mc.space.labels().name(y) + ")";
}

std::string triple_text(const MetricCover& mc, const std::array<Vertex, 3>& w) {
    const auto& l = mc.space.labels();
    return "(" + l.name(w[0]) + "," + l.name(w[1]) + "," + l.name(w[2]) + ")";
}

CriterionVerdict shared_neighbour_set(const CriterionContext& ctx) {
    auto v = verdict("shared-neighbour-set",
                     "every cross pair within r has the same set L of common neighbours in A, and VR_r(L) is "
                     "n-connected");
    auto edges = edges_of(ctx.items);
    if (edges.empty())
        return not_applicable(v, "no cross pair within r");
    for (const Item* e : edges) {
        if (!same_complex(e->obstruction, edges.front()->obstruction))
            return fails(v, describe(ctx, *e) + " differs from " + describe(ctx, *edges.front()));
    }
    const Complex& l = edges.front()->obstruction;
    const int n = certified_connectivity(l);
    if (n < 0)
        return fails(v, "VR_r(L) with L = " + ctx.labels.format(l.vertices()) + " is not connected");
    return holds(v, fibers_connected(n), "L = " + ctx.labels.format(l.vertices()) + ", " + connectivity_text(n));
}

CriterionVerdict shared_neighbour_all(const CriterionContext& ctx, const MetricCover& mc) {
    auto v = verdict("shared-neighbour-all",
                     "VR_r(A) is n-connected and every v in A is within r of both ends of every cross pair within r");
    auto cross = mc.cross_edges();
    if (cross.empty())
        return not_applicable(v, "no cross pair within r");
    for (auto [x, y] : cross) {
        for (Vertex a : mc.a) {
            if (!mc.space.within(x, a, mc.r) || !mc.space.within(y, a, mc.r))
                return fails(v, mc.space.labels().name(a) + " is not within r of both ends of " +
                                    pair_text(mc, x, y));
        }
    }
    int n = -1;
    try {
        n = certified_connectivity(full_restriction(ctx.k, mc.a));
    } catch (const EnumerationRefused& e) {
        return inconclusive(v, e.what());
    }
    if (n < 0)
        return fails(v, "VR_r(A) is not connected");
    return holds(v, fibers_connected(n), "VR_r(A) " + connectivity_text(n));
}

CriterionVerdict assumption_one(const MetricCover& mc, const SharedNeighbourResult& ai) {
    auto v = verdict("shared-neighbour",
                     "some v in A is within r of both ends of every cross pair within r");
    if (!ai.holds)
        return fails(v, ai.reason);
    std::vector<Vertex> ws(ai.witnesses.begin(), ai.witnesses.end());
    return holds(v, fibers_connected(0), "shared neighbours " + mc.space.labels().format(ws));
}

CriterionVerdict assumption_one_close(const CriterionContext& ctx, const MetricCover& mc,
                                      const SharedNeighbourResult& ai) {
    auto v = verdict("shared-neighbour-close",
                     "a shared neighbour v is within r of every w in A that is within r of both ends of a cross "
                     "pair within r");
    if (!ai.holds)
        return fails(v, "no shared neighbour: " + ai.reason);
    auto cross = mc.cross_edges();
    for (Vertex c : ai.witnesses) {
        bool ok = true;
        for (auto [x, y] : cross) {
            for (Vertex w : mc.a) {
                if (mc.space.within(x, w, mc.r) && mc.space.within(y, w, mc.r) && !mc.space.within(c, w, mc.r)) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                break;
        }
        if (ok) {
            expect_central(ctx, v.id, {c});
            return holds(v, weak_equivalence(), "v = " + mc.space.labels().name(c));
        }
    }
    return fails(v, "every shared neighbour is farther than r from some other common neighbour");
}

CriterionVerdict assumption_one_small(const CriterionContext& ctx, const MetricCover& mc,
                                      const SharedNeighbourResult& ai) {
    auto v = verdict("shared-neighbour-small-intersection", "a shared neighbour exists and diam(A) <= r");
    if (!ai.holds)
        return fails(v, "no shared neighbour: " + ai.reason);
    Distance da = diam(mc.space, mc.a);
    if (!mc.space.leq(da, mc.r))
        return fails(v, "diam(A) = " + da.to_string() + " > r");
    expect_central(ctx, v.id, {ai.witnesses.front()});
    return holds(v, weak_equivalence(), "diam(A) = " + da.to_string());
}

CriterionVerdict assumption_one_single(const MetricCover& mc, const SharedNeighbourResult& ai) {
    auto v = verdict("shared-neighbour-singleton", "A = {v} and v is a shared neighbour");
    if (mc.a.size() != 1)
        return not_applicable(v, "A has " + std::to_string(mc.a.size()) + " points");
    if (!ai.holds)
        return fails(v, ai.reason);
    return holds(v, weak_equivalence(), "v = " + mc.space.labels().name(mc.a.front()));
}

CriterionVerdict sixty_degree(const MetricCover& mc, const PredicateResult& aii) {
    auto v = verdict("sixty-degree", "A is nonempty and d(x,y) >= max(d(x,v), d(y,v)) for x in X\\A, y in Y\\A, v in A");
    if (!aii.holds)
        return fails(v, aii.witness ? "witness (x,y,v) = " + triple_text(mc, *aii.witness) : aii.reason);
    return holds(v, fibers_connected(0), "holds at every radius");
}

CriterionVerdict sixty_degree_diameter(const MetricCover& mc, const PredicateResult& aii) {
    auto v = verdict("sixty-degree-diameter", "the sixty-degree condition holds and d(x,y) >= diam(A) for every "
                                              "x in X\\A, y in Y\\A");
    if (!aii.holds)
        return fails(v, aii.witness ? "sixty-degree witness " + triple_text(mc, *aii.witness) : aii.reason);
    PredicateResult db = check_diameter_bound(mc);
    if (!db.holds)
        return fails(v, db.witness ? "d" + pair_text(mc, (*db.witness)[0], (*db.witness)[1]) + " < diam(A)"
                                   : db.reason);
    return holds(v, weak_equivalence(), "weak equivalence at every radius");
}

struct GluingFacts {
    bool pseudometric = false;
    std::string pseudometric_witness;
    bool gluing = false;
    std::string gluing_witness;
};

GluingFacts gluing_facts(const MetricCover& mc) {
    GluingFacts g;
    if (auto t = triangle_violation(mc.space))
        g.pseudometric_witness = "triangle inequality fails at " + triple_text(mc, *t);
    else
        g.pseudometric = true;
    if (auto p = metric_gluing_violation(mc.space, mc.x, mc.y))
        g.gluing_witness = "d" + pair_text(mc, p->first, p->second) + " is not realized through A";
    else
        g.gluing = true;
    return g;
}

CriterionVerdict gluing_simplex(const CriterionContext& ctx, const MetricCover& mc, const GluingFacts& g) {
    auto v = verdict("gluing-simplex", "Z is a metric gluing of X and Y along a finite A and the simplex "
                                       "assumption holds");
    if (!g.pseudometric)
        return fails(v, g.pseudometric_witness);
    if (!g.gluing)
        return fails(v, g.gluing_witness);
    PredicateResult s = check_simplex_assumption(mc);
    if (!s.holds)
        return fails(v, s.witness ? "simplex assumption witness (v,a,b) = " + triple_text(mc, *s.witness) : s.reason);
    for (const Item* e : edges_of(ctx.items)) {
        if (!e->contractible())
            flag_discrepancy(ctx, v.id, describe(ctx, *e) + " is not certified contractible");
    }
    Conclusion c{"isomorphism on π0 and surjection on π1", 0, 1, 0};
    return holds(v, c, "metric gluing, simplex assumption holds");
}

CriterionVerdict gluing_strong_simplex(const CriterionContext& ctx, const MetricCover& mc, const GluingFacts& g) {
    auto v = verdict("gluing-strong-simplex", "Z is a metric gluing of X and Y along a finite A and the strong "
                                              "simplex assumption holds");
    if (!g.pseudometric)
        return fails(v, g.pseudometric_witness);
    if (!g.gluing)
        return fails(v, g.gluing_witness);
    PredicateResult s = check_strong_simplex_assumption(mc);
    if (!s.holds)
        return fails(v, s.witness ? "strong simplex witness (v,a,b) = " + triple_text(mc, *s.witness) : s.reason);
    // Intermediate claim: one-sided simplices of K \ P have nonempty obstructions.
    std::size_t checked = 0;
    for (const Item& it : ctx.items) {
        const auto in_x = set_intersection(it.simplex.span(), mc.x).size();
        const auto in_y = set_intersection(it.simplex.span(), mc.y).size();
        if (in_x != 1 && in_y != 1)
            continue;
        ++checked;
        if (!it.contractible())
            flag_discrepancy(ctx, v.id, describe(ctx, it) + " should be a nonempty simplex");
    }
    Conclusion c{"homotopy fibers simply connected: isomorphism on π0 and π1, surjection on π2", 1, 2, 0};
    return holds(v, c, "strong simplex assumption holds; " + std::to_string(checked) +
                           " one-sided obstructions checked nonempty");
}

}  // namespace

Complex full_restriction(const Complex& k, const VertexSet& s) {
    Complex r = restriction(k, s);
    if (!r.is_flag())
        return r;
    const int n = static_cast<int>(r.num_vertices());
    if (n > kObstructionVertexLimit)
        throw EnumerationRefused("restriction has too many vertices to list in full");
    return r.with_dim_cap(std::max(n - 1, 0)).materialize();
}

std::vector<CriterionVerdict> general_criteria(const CriterionContext& ctx) {
    return {
        no_cross_simplices(ctx),       contractible_obstructions(ctx), skeletal_connectivity(ctx),
        torsion_obstructions(ctx),     acyclic_obstructions(ctx),      common_obstruction_vertex(ctx),
        constant_obstruction(ctx),     restriction_obstruction(ctx),   full_intersection_join(ctx),
        single_intersection_vertex(ctx), one_entry_point(ctx),
    };
}

std::vector<CriterionVerdict> clique_criteria(const CriterionContext& ctx) {
    std::vector<CriterionVerdict> out;
    if (!ctx.k.is_flag()) {
        for (const char* id : {"clique-standard-simplex", "clique-constant-obstruction", "clique-restriction-join",
                               "clique-pairs", "clique-single-vertex", "clique-entry-neighbours",
                               "clique-entry-central", "clique-entry-point", "clique-two-entry-points"})
            out.push_back(not_applicable(verdict(id, "clique complexes only"), "K is not a clique complex"));
        return out;
    }
    out.push_back(clique_standard_simplex(ctx));
    out.push_back(clique_constant_obstruction(ctx));
    out.push_back(clique_restriction_join(ctx));
    out.push_back(clique_pairs(ctx));
    out.push_back(clique_single_vertex(ctx));
    out.push_back(clique_entry_neighbours(ctx));
    out.push_back(clique_entry_central(ctx));
    out.push_back(clique_entry_point(ctx));
    out.push_back(clique_two_entry_points(ctx));
    return out;
}

std::vector<CriterionVerdict> metric_criteria(const CriterionContext& ctx, const MetricCover& mc) {
    const SharedNeighbourResult ai = check_assumption_I(mc);
    const PredicateResult aii = check_assumption_II(mc);
    const GluingFacts g = gluing_facts(mc);
    return {
        shared_neighbour_set(ctx),
        shared_neighbour_all(ctx, mc),
        assumption_one(mc, ai),
        assumption_one_close(ctx, mc, ai),
        assumption_one_small(ctx, mc, ai),
        assumption_one_single(mc, ai),
        sixty_degree(mc, aii),
        sixty_degree_diameter(mc, aii),
        gluing_simplex(ctx, mc, g),
        gluing_strong_simplex(ctx, mc, g),
    };
}

}  // namespace obstruct
