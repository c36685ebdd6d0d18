#include "obstruct/homology/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "obstruct/core/error.hpp"
#include "obstruct/homology/field.hpp"

namespace obstruct {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2)
        return false;
    for (std::uint64_t q = 2; q * q <= p; ++q) {
        if (p % q == 0)
            return false;
    }
    return true;
}

template <typename F>
SparseVec<F> column_vector(const F& f, const BoundaryMatrix& m, std::size_t j) {
    SparseVec<F> v;
    for (auto [i, x] : m.columns[j])
        v.emplace_back(i, f.from_int(x));
    return v;
}

template <typename F>
std::size_t rank_over(const F& f, const BoundaryMatrix* m) {
    if (!m)
        return 0;
    EchelonBasis<F> e(f);
    for (std::size_t j = 0; j < m->cols; ++j)
        e.insert(column_vector(f, *m, j));
    return e.rank();
}

template <typename Fn>
auto with_field(Coefficients c, Fn&& fn) {
    if (c.kind == Coefficients::Kind::Rationals)
        return fn(RationalField{});
    if (c.kind == Coefficients::Kind::Prime)
        return fn(PrimeField{c.p});
    throw InvalidInput("a field is required here, not the integers");
}

std::size_t integer_rank(const BoundaryMatrix* m, std::vector<BigInt>* invariants) {
    if (!m || m->rows == 0 || m->cols == 0)
        return 0;
    SmithResult s = smith_normal_form(m->dense());
    if (invariants)
        *invariants = s.invariants;
    return s.rank;
}

// Basis of ker ∂_d as chains in degree d; ∂_0 is taken to be zero.
template <typename F>
std::vector<SparseVec<F>> cycle_basis(const F& f, const ChainData& c, int d) {
    std::vector<SparseVec<F>> out;
    const std::size_t n = c.dim(d);
    const BoundaryMatrix* m = d > 0 ? c.boundary(d) : nullptr;
    if (!m) {
        for (std::size_t j = 0; j < n; ++j)
            out.push_back({{j, f.from_int(1)}});
        return out;
    }
    EchelonBasis<F> e(f);
    for (std::size_t j = 0; j < n; ++j) {
        SparseVec<F> dep;
        if (!e.insert(column_vector(f, *m, j), {{j, f.from_int(1)}}, &dep))
            out.push_back(std::move(dep));
    }
    return out;
}

template <typename F>
void insert_boundaries(const F& f, EchelonBasis<F>& e, const ChainData& c, int d) {
    if (const BoundaryMatrix* m = c.boundary(d + 1)) {
        for (std::size_t j = 0; j < m->cols; ++j)
            e.insert(column_vector(f, *m, j));
    }
}

template <typename F>
InducedMap induced_map_over(const F& f, const Complex& l, const Complex& k, int deg, Coefficients coeffs) {
    ChainData cl = simplicial_chains(l, deg + 1, false);
    ChainData ck = simplicial_chains(k, deg + 1, false);

    // Homology representatives of L: cycles independent modulo boundaries.
    EchelonBasis<F> el(f);
    insert_boundaries(f, el, cl, deg);
    std::vector<SparseVec<F>> reps_l;
    for (auto& z : cycle_basis(f, cl, deg)) {
        if (el.insert(z))
            reps_l.push_back(std::move(z));
    }

    // Same for K, tagging each representative so that images can be written in that basis.
    EchelonBasis<F> ek(f);
    insert_boundaries(f, ek, ck, deg);
    std::size_t target_dim = 0;
    for (auto& z : cycle_basis(f, ck, deg)) {
        if (ek.insert(z, {{target_dim, f.from_int(1)}}))
            ++target_dim;
    }

    std::unordered_map<Simplex, std::size_t> k_index;
    const auto& kb = ck.basis[static_cast<std::size_t>(deg)];
    for (std::size_t i = 0; i < kb.size(); ++i)
        k_index.emplace(kb[i], i);
    const auto& lb = cl.basis[static_cast<std::size_t>(deg)];

    InducedMap out;
    out.degree = deg;
    out.coeffs = coeffs;
    out.source_dim = reps_l.size();
    out.target_dim = target_dim;
    out.matrix.assign(target_dim, std::vector<std::string>(reps_l.size(), f.str(f.zero())));
    EchelonBasis<F> image(f);
    for (std::size_t j = 0; j < reps_l.size(); ++j) {
        SparseVec<F> v;
        for (auto& [i, x] : reps_l[j])
            v.emplace_back(k_index.at(lb[i]), x);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        auto r = ek.reduce(std::move(v));
        if (!r.remainder.empty())
            throw std::logic_error("image of a cycle is not a cycle");
        SparseVec<F> coords;
        for (auto& [i, x] : r.tag) {
            auto c = f.sub(f.zero(), x);
            out.matrix[i][j] = f.str(c);
            coords.emplace_back(i, c);
        }
        image.insert(std::move(coords));
    }
    out.rank = image.rank();
    out.injective = out.rank == out.source_dim;
    out.surjective = out.rank == out.target_dim;
    return out;
}

template <typename F>
std::size_t image_rank_over(const F& f, const std::vector<Complex>& sources, const Complex& k, int deg) {
    ChainData ck = simplicial_chains(k, deg + 1, false);
    std::unordered_map<Simplex, std::size_t> k_index;
    const auto& kb = ck.basis[static_cast<std::size_t>(deg)];
    for (std::size_t i = 0; i < kb.size(); ++i)
        k_index.emplace(kb[i], i);

    EchelonBasis<F> e(f);
    insert_boundaries(f, e, ck, deg);
    const std::size_t boundaries = e.rank();
    for (const Complex& l : sources) {
        ChainData cl = simplicial_chains(l, deg, false);
        const auto& lb = cl.basis[static_cast<std::size_t>(deg)];
        for (auto& z : cycle_basis(f, cl, deg)) {
            SparseVec<F> v;
            for (auto& [i, x] : z)
                v.emplace_back(k_index.at(lb[i]), x);
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            e.insert(std::move(v));
        }
    }
    return e.rank() - boundaries;
}

}  // namespace

Coefficients Coefficients::prime(std::uint64_t p) {
    if (!is_prime(p) || p >= (1ull << 31))
        throw InvalidInput("coefficient field needs a prime below 2^31, got " + std::to_string(p));
    return {Kind::Prime, p};
}

Coefficients Coefficients::parse(const std::string& text) {
    if (text == "z" || text == "Z")
        return integers();
    if (text == "q" || text == "Q")
        return rationals();
    std::string digits;
    if (text.rfind("zp:", 0) == 0)
        digits = text.substr(3);
    else if (text.size() > 1 && (text[0] == 'F' || text[0] == 'f'))
        digits = text.substr(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
        throw InvalidInput("unknown coefficients '" + text + "' (use q, z or zp:<prime>)");
    return prime(std::stoull(digits));
}

std::string Coefficients::name() const {
    switch (kind) {
    case Kind::Integers:
        return "Z";
    case Kind::Rationals:
        return "Q";
    case Kind::Prime:
        return "F" + std::to_string(p);
    }
    return "?";
}

const HomologyGroup& HomologyProfile::group(int degree) const {
    static const HomologyGroup zero;
    if (degree < min_degree || degree > max_degree())
        return zero;
    return groups[static_cast<std::size_t>(degree - min_degree)];
}

std::vector<std::size_t> HomologyProfile::bettis(int from) const {
    std::vector<std::size_t> out;
    for (int d = from; d <= max_degree(); ++d)
        out.push_back(betti(d));
    return out;
}

std::size_t HomologyProfile::p_torsion_count(int degree, std::uint64_t p) const {
    std::size_t n = 0;
    for (std::uint64_t q : torsion(degree)) {
        while (q % p == 0)
            q /= p;
        n += q == 1;
    }
    return n;
}

bool HomologyProfile::trivial() const {
    for (const auto& g : groups) {
        if (!g.trivial())
            return false;
    }
    return true;
}

HomologyProfile chain_homology(const ChainData& c, Coefficients coeffs, int max_deg, bool reduced) {
    HomologyProfile out;
    out.coeffs = coeffs;
    out.reduced = reduced;
    out.min_degree = c.min_degree;
    if (c.top_degree() < max_deg + 1)
        throw InvalidInput("chain data must reach one degree above the requested one");

    // rank ∂_d for every degree that matters, plus invariants for torsion.
    std::vector<std::size_t> ranks;
    std::vector<std::vector<BigInt>> invariants;
    for (int d = c.min_degree; d <= max_deg + 1; ++d) {
        const BoundaryMatrix* m = c.boundary(d);
        std::vector<BigInt> inv;
        if (coeffs.kind == Coefficients::Kind::Integers)
            ranks.push_back(integer_rank(m, &inv));
        else
            ranks.push_back(with_field(coeffs, [&](const auto& f) { return rank_over(f, m); }));
        invariants.push_back(std::move(inv));
    }
    for (int d = c.min_degree; d <= max_deg; ++d) {
        auto at = static_cast<std::size_t>(d - c.min_degree);
        HomologyGroup g;
        g.betti = c.dim(d) - ranks[at] - ranks[at + 1];
        for (const BigInt& x : invariants[at + 1]) {
            for (std::uint64_t q : prime_power_factors(x))
                g.torsion.push_back(q);
        }
        std::sort(g.torsion.begin(), g.torsion.end());
        out.groups.push_back(std::move(g));
    }
    return out;
}

HomologyProfile homology(const Complex& k, Coefficients coeffs, int max_deg, bool reduced) {
    if (max_deg < 0)
        throw InvalidInput("maximum degree must be nonnegative");
    return chain_homology(simplicial_chains(k, max_deg + 1, reduced), coeffs, max_deg, reduced);
}

HomologyProfile relative_homology(const Complex& k, const Complex& l, Coefficients coeffs, int max_deg) {
    if (max_deg < 0)
        throw InvalidInput("maximum degree must be nonnegative");
    if (!is_subcomplex(l, k, max_deg + 1))
        throw NotASubcomplex("relative homology needs L inside K");
    return chain_homology(relative_chains(k, l, max_deg + 1), coeffs, max_deg, false);
}

InducedMap induced_map(const Complex& l, const Complex& k, int degree, Coefficients field) {
    if (degree < 0)
        throw InvalidInput("degree must be nonnegative");
    if (!field.is_field())
        throw InvalidInput("induced maps are computed over fields only");
    if (!is_subcomplex(l, k, degree + 1))
        throw NotASubcomplex("induced map needs L inside K");
    return with_field(field, [&](const auto& f) { return induced_map_over(f, l, k, degree, field); });
}

std::size_t field_rank(const BoundaryMatrix& m, Coefficients field) {
    if (!field.is_field())
        return integer_rank(&m, nullptr);
    return with_field(field, [&](const auto& f) { return rank_over(f, &m); });
}

std::size_t image_rank(const std::vector<Complex>& sources, const Complex& k, int degree, Coefficients field) {
    if (degree < 0)
        throw InvalidInput("degree must be nonnegative");
    for (const Complex& l : sources) {
        if (!is_subcomplex(l, k, degree + 1))
            throw NotASubcomplex("image rank needs every source inside K");
    }
    return with_field(field, [&](const auto& f) { return image_rank_over(f, sources, k, degree); });
}

}  // namespace obstruct
