#include "obstruct/homology/certificate.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "obstruct/core/error.hpp"

namespace obstruct {

namespace {

// Whole simplex list of K, or nothing when a flag complex extends past its ceiling.
std::optional<std::vector<Simplex>> full_listing(const Complex& k) {
    if (k.is_flag() && k.with_dim_cap(k.dim_cap() + 1).count(k.dim_cap() + 1) > 0)
        return std::nullopt;
    return k.all_simplices();
}

struct CollapseState {
    std::set<Simplex, DimLexLess> alive;
    std::unordered_map<Simplex, std::size_t> cofaces;  // codimension-one cofaces still alive

    explicit CollapseState(const std::vector<Simplex>& simplices) : alive(simplices.begin(), simplices.end()) {
        for (const Simplex& s : simplices) {
            cofaces.emplace(s, 0);
            if (s.size() > 1) {
                for (std::size_t i = 0; i < s.size(); ++i)
                    ++cofaces[s.facet(i)];
            }
        }
    }

    std::optional<Simplex> unique_coface(const Simplex& face) const {
        // Candidates are face ∪ {v}; scan the next dimension.
        std::vector<Vertex> smallest(face.size() + 1);
        for (std::size_t i = 0; i < smallest.size(); ++i)
            smallest[i] = static_cast<Vertex>(i);
        auto lo = alive.lower_bound(Simplex::from_sorted(std::move(smallest)));
        for (auto it = lo; it != alive.end() && it->size() == face.size() + 1; ++it) {
            if (face.is_face_of(*it))
                return *it;
        }
        return std::nullopt;
    }

    bool remove(const Simplex& s) {
        if (!alive.erase(s))
            return false;
        if (s.size() > 1) {
            for (std::size_t i = 0; i < s.size(); ++i)
                --cofaces[s.facet(i)];
        }
        return true;
    }

    bool free_pair(const Simplex& face, const Simplex& coface) const {
        if (!alive.count(face) || !alive.count(coface) || coface.size() != face.size() + 1 || !face.is_face_of(coface))
            return false;
        return cofaces.at(face) == 1 && cofaces.at(coface) == 0;
    }
};

std::optional<std::vector<Collapse>> greedy_collapse(const std::vector<Simplex>& simplices) {
    CollapseState st(simplices);
    std::vector<Collapse> out;
    bool progress = true;
    while (st.alive.size() > 1 && progress) {
        progress = false;
        // Highest dimension first keeps the search short and the order fixed.
        for (auto it = st.alive.rbegin(); it != st.alive.rend(); ++it) {
            const Simplex& face = *it;
            if (st.cofaces.at(face) != 1)
                continue;
            auto coface = st.unique_coface(face);
            if (!coface || st.cofaces.at(*coface) != 0)
                continue;
            Collapse c{face, *coface};
            st.remove(c.coface);
            st.remove(c.face);
            out.push_back(std::move(c));
            progress = true;
            break;
        }
    }
    if (st.alive.size() != 1)
        return std::nullopt;
    return out;
}

}  // namespace

ContractibilityCertificate contractibility_certificate(const Complex& k) {
    if (k.empty())
        throw EmptyComplex("the empty complex is not contractible");
    ContractibilityCertificate cert;
    VertexSet center = central_vertices(k);
    if (!center.empty()) {
        cert.kind = ContractibilityCertificate::Kind::CentralSimplex;
        cert.central = Simplex::from_sorted(std::move(center));
        return cert;
    }
    auto listing = full_listing(k);
    if (!listing)
        return cert;
    if (auto seq = greedy_collapse(*listing)) {
        cert.kind = ContractibilityCertificate::Kind::CollapseSequence;
        cert.collapses = std::move(*seq);
    }
    return cert;
}

bool collapses_to_point(const Complex& k, const std::vector<Collapse>& collapses) {
    auto listing = full_listing(k);
    if (!listing)
        return false;
    CollapseState st(*listing);
    for (const Collapse& c : collapses) {
        if (!st.free_pair(c.face, c.coface))
            return false;
        st.remove(c.coface);
        st.remove(c.face);
    }
    return st.alive.size() == 1;
}

bool verify_certificate(const Complex& k, const ContractibilityCertificate& cert) {
    switch (cert.kind) {
    case ContractibilityCertificate::Kind::CentralSimplex:
        return cert.central && k.contains(*cert.central) && is_central(k, *cert.central);
    case ContractibilityCertificate::Kind::CollapseSequence:
        return collapses_to_point(k, cert.collapses);
    case ContractibilityCertificate::Kind::None:
        return false;
    }
    return false;
}

}  // namespace obstruct
