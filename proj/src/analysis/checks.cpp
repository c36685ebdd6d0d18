#include "obstruct/analysis/checks.hpp"

#include <algorithm>

#include "obstruct/analysis/p_complement.hpp"
#include "obstruct/core/error.hpp"

namespace obstruct {

namespace {

std::string group_text(const HomologyGroup& g) {
    std::string s = "rank " + std::to_string(g.betti);
    for (auto q : g.torsion)
        s += " + Z/" + std::to_string(q);
    return s;
}

void compare(CheckResult& r, const std::string& what, const HomologyGroup& lhs, const HomologyGroup& rhs) {
    ++r.checked;
    if (lhs == rhs)
        return;
    r.ok = false;
    r.problems.push_back(what + ": " + group_text(lhs) + " vs " + group_text(rhs));
}

}  // namespace

CheckResult check_cofiber_shift(const Complex& k, const Simplex& sigma, Coefficients coeffs, int max_deg) {
    if (!k.contains(sigma))
        throw NotASimplex("cofiber check needs σ in K");
    if (max_deg < 0)
        throw InvalidInput("maximum degree must be nonnegative");
    const int n = sigma.dim();
    const int cap = max_deg + 1;
    const Complex kk = k.is_flag() ? k.with_dim_cap(cap) : k;

    Complex l;
    for (Vertex v : sigma) {
        VertexSet rest = set_difference(kk.vertices(), std::vector<Vertex>{v});
        l = union_of(l, restriction(kk, rest), cap);
    }
    const Complex ob = obstruction_complex(kk, sigma, set_difference(kk.vertices(), sigma.span()));
    const HomologyProfile h_ob = homology(ob, coeffs, std::max(max_deg, 0), true);

    CheckResult r;
    const HomologyProfile rel = relative_homology(kk, l, coeffs, max_deg);
    for (int i = 0; i <= max_deg; ++i)
        compare(r, "H_" + std::to_string(i) + "(K,L)", rel.group(i), h_ob.group(i - n - 1));

    const Complex meet = intersection_of(l, star(kk, sigma), cap);
    const HomologyProfile h_meet = homology(meet, coeffs, max_deg, true);
    for (int i = -1; i <= max_deg; ++i)
        compare(r, "H~_" + std::to_string(i) + "(L∩St σ)", h_meet.group(i), h_ob.group(i - n));
    return r;
}

CheckResult mv_check(const Complex& k, const VertexSet& x, const VertexSet& y, Coefficients field, int max_deg) {
    if (!field.is_field())
        throw InvalidInput("Mayer-Vietoris rank accounting needs field coefficients");
    if (max_deg < 0)
        throw InvalidInput("maximum degree must be nonnegative");
    const Complex kx = restriction(k, x);
    const Complex ky = restriction(k, y);
    const Complex ka = restriction(k, set_intersection(x, y));
    const Complex u = restriction_union(k, x, y);

    const int top = max_deg + 1;
    const auto hx = homology(kx, field, top, false);
    const auto hy = homology(ky, field, top, false);
    const auto ha = homology(ka, field, top, false);
    const auto hu = homology(u, field, top, false);
    std::vector<long long> rj;
    for (int d = 0; d <= top; ++d)
        rj.push_back(static_cast<long long>(image_rank({kx, ky}, u, d, field)));

    CheckResult r;
    auto fail = [&](const std::string& what) {
        r.ok = false;
        r.problems.push_back(what);
    };
    auto b = [](const HomologyProfile& p, int d) { return static_cast<long long>(p.betti(d)); };
    ++r.checked;
    if (rj[0] != b(hu, 0))
        fail("H_0 of the union is not covered by H_0(K_X) ⊕ H_0(K_Y)");
    for (int d = 0; d <= max_deg; ++d) {
        ++r.checked;
        const long long rank_i = b(hx, d) + b(hy, d) - rj[static_cast<std::size_t>(d)];
        const long long rank_delta = b(hu, d + 1) - rj[static_cast<std::size_t>(d + 1)];
        if (rank_i < 0 || rank_i > b(ha, d))
            fail("degree " + std::to_string(d) + ": implied rank of H(K_A) → H(K_X) ⊕ H(K_Y) is " +
                 std::to_string(rank_i));
        else if (b(ha, d) != rank_i + rank_delta)
            fail("degree " + std::to_string(d) + ": h(K_A) = " + std::to_string(b(ha, d)) + " but exactness needs " +
                 std::to_string(rank_i + rank_delta));
    }
    return r;
}

CheckResult clique_identity_check(const Complex& k, const VertexSet& a, int dim_cap) {
    if (!k.is_flag())
        throw InvalidInput("the vertexwise obstruction identity is for clique complexes");
    CheckResult r;
    const int a_cap = std::max(static_cast<int>(a.size()) - 1, 0);
    auto listed = [](const Complex& c) { return c.all_simplices(); };
    auto meet = [&](const Complex& p, const Complex& q) {
        return intersection_of(p, q, a_cap);
    };
    for (const Simplex& s : k.simplices_up_to(dim_cap)) {
        const auto expected = listed(obstruction_by_definition(k, s, a, a_cap));
        Complex vertexwise;
        bool first = true;
        for (Vertex x : s) {
            Complex ox = obstruction_complex(k, Simplex{x}, a);
            vertexwise = first ? ox : meet(vertexwise, ox);
            first = false;
        }
        ++r.checked;
        if (listed(vertexwise) != expected) {
            r.ok = false;
            r.problems.push_back("vertexwise intersection differs at a simplex of dimension " +
                                 std::to_string(s.dim()));
        }
        if (s.size() >= 2) {
            Complex pair = meet(obstruction_complex(k, s.facet(0), a), obstruction_complex(k, s.facet(s.size() - 1), a));
            ++r.checked;
            if (listed(pair) != expected) {
                r.ok = false;
                r.problems.push_back("two-facet intersection differs at a simplex of dimension " +
                                     std::to_string(s.dim()));
            }
        }
    }
    return r;
}

}  // namespace obstruct
