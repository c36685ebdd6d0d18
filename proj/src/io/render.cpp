#include "obstruct/io/render.hpp"

#include <algorithm>
#include <sstream>

namespace obstruct {

namespace {

std::string set_text(const std::vector<std::string>& names) {
    std::string s = "{";
    for (std::size_t i = 0; i < names.size(); ++i)
        s += (i ? "," : "") + names[i];
    return s + "}";
}

std::string pad(const std::string& s, std::size_t width) {
    // Width in code points, so that ∪ and ~ line up.
    std::size_t cps = 0;
    for (unsigned char c : s)
        cps += (c & 0xC0) != 0x80;
    return cps >= width ? s + " " : s + std::string(width - cps, ' ');
}

std::string upper_status(HypothesisStatus s) {
    switch (s) {
    case HypothesisStatus::Holds:
        return "HOLDS";
    case HypothesisStatus::Fails:
        return "FAILS";
    case HypothesisStatus::NotApplicable:
        return "N/A";
    case HypothesisStatus::Inconclusive:
        return "INCONCLUSIVE";
    }
    return "?";
}

std::string betti_vector(const HomologyProfile& p) {
    std::string s = "(";
    auto b = p.bettis(0);
    for (std::size_t i = 0; i < b.size(); ++i)
        s += (i ? "," : "") + std::to_string(b[i]);
    return s + ")";
}

std::string profile_cell(const HomologyProfile& p) {
    std::string s = betti_vector(p);
    for (int d = 0; d <= p.max_degree(); ++d) {
        for (auto q : p.torsion(d))
            s += " Z/" + std::to_string(q) + "@" + std::to_string(d);
    }
    if (p.min_degree < 0 && p.betti(-1))
        s += " empty";
    return s;
}

}  // namespace

std::vector<std::size_t> simplex_counts(const Complex& k, int max_dim) {
    std::vector<std::size_t> out;
    for (int d = 0; d <= max_dim; ++d)
        out.push_back(k.count(d));
    return out;
}

std::string render_counts_text(const std::vector<std::size_t>& counts) {
    std::ostringstream out;
    out << "dim  simplices\n";
    for (std::size_t d = 0; d < counts.size(); ++d)
        out << pad(std::to_string(d), 5) << counts[d] << "\n";
    if (counts.size() >= 2)
        out << counts[0] << " vertices, " << counts[1] << " edges\n";
    return out.str();
}

std::string group_text(const HomologyGroup& g, const Coefficients& c) {
    if (g.trivial())
        return "0";
    std::string ring = c.name();
    std::vector<std::string> parts;
    if (g.betti == 1)
        parts.push_back(ring);
    else if (g.betti > 1)
        parts.push_back(ring + "^" + std::to_string(g.betti));
    for (auto q : g.torsion)
        parts.push_back("Z/" + std::to_string(q));
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i)
        s += (i ? " ⊕ " : "") + parts[i];
    return s;
}

std::string render_profile_text(const HomologyProfile& p) {
    std::ostringstream out;
    const std::string h = p.reduced ? "H~_" : "H_";
    out << (p.reduced ? "reduced " : "") << "homology over " << p.coeffs.name() << "\n";
    for (int d = p.min_degree; d <= p.max_degree(); ++d) {
        // H~_{-1} is only nonzero for the empty complex.
        if (d < 0 && p.group(d).trivial())
            continue;
        out << "  " << pad(h + std::to_string(d), 7) << group_text(p.group(d), p.coeffs) << "\n";
    }
    out << "  betti " << betti_vector(p) << "\n";
    return out.str();
}

std::string render_report_text(const DecompositionReport& r) {
    std::ostringstream out;
    out << "cover    X = " << set_text(r.x) << "  Y = " << set_text(r.y) << "  A = " << set_text(r.a) << "\n";
    out << "complex  " << (r.flag ? "clique complex" : "explicit complex");
    if (!r.radius.empty())
        out << ", r = " << r.radius;
    out << ", dimension cap " << r.dim_cap << "\n\n";

    std::size_t total = 0;
    for (const auto& c : r.census)
        total += c.count;
    out << "K \\ P    " << total << " simplices up to dimension " << r.dim_cap
        << (r.exhausted ? " (complete)" : " (continues above the cap)") << "\n";
    if (!r.census.empty()) {
        out << "  dim  count  empty  cone  collapsible  homology-only\n";
        for (const auto& c : r.census)
            out << "  " << pad(std::to_string(c.dim), 5) << pad(std::to_string(c.count), 7)
                << pad(std::to_string(c.empty), 7) << pad(std::to_string(c.cone), 6)
                << pad(std::to_string(c.collapsible), 13) << c.homology_only << "\n";
    }
    const std::size_t shown = std::min<std::size_t>(r.obstructions.size(), 40);
    if (shown) {
        out << "\nobstructions\n";
        for (std::size_t i = 0; i < shown; ++i) {
            const auto& o = r.obstructions[i];
            std::string facets;
            for (const auto& f : o.facets)
                facets += (facets.empty() ? "" : " ∪ ") + ("Δ" + set_text(f));
            out << "  " << pad("St(" + set_text(o.simplex) + ",A)", 24) << pad(o.status, 15)
                << (facets.empty() ? "∅" : facets);
            if (!o.apex.empty())
                out << "  apex " << set_text(o.apex);
            out << "\n";
        }
        if (shown < r.obstructions.size())
            out << "  ... " << r.obstructions.size() - shown << " more\n";
    }

    out << "\nverdicts\n";
    for (const auto& v : r.verdicts) {
        out << "  " << pad(upper_status(v.status), 13) << v.id << "\n";
        out << "      " << v.hypothesis << "\n";
        if (!v.detail.empty())
            out << "      " << v.detail << "\n";
        if (v.status == HypothesisStatus::Holds) {
            out << "      => " << v.conclusion.claim << "\n";
            if (v.agreement != Agreement::Unchecked)
                out << "      verification " << agreement_name(v.agreement) << ": " << v.verification << "\n";
        }
    }

    if (r.verification) {
        const auto& ver = *r.verification;
        out << "\nverification, reduced Betti numbers in degrees 0.." << ver.max_degree << "\n";
        std::vector<std::string> complexes;
        for (const auto& p : ver.profiles) {
            if (std::find(complexes.begin(), complexes.end(), p.complex) == complexes.end())
                complexes.push_back(p.complex);
        }
        for (const auto& name : complexes) {
            out << "  " << pad(name, 10);
            for (const auto& p : ver.profiles) {
                if (p.complex == name)
                    out << pad(p.profile.coeffs.name() + " " + profile_cell(p.profile), 22);
            }
            out << "\n";
        }
        out << "  maps H_d(K_X∪K_Y) -> H_d(K)\n";
        for (const auto& m : ver.maps) {
            out << "    " << pad("H_" + std::to_string(m.degree), 5) << pad(m.coeffs.name(), 4) << "rank " << m.rank
                << " of " << m.source_dim << " -> " << m.target_dim
                << (m.iso() ? "  iso" : std::string(m.injective ? "  injective" : "") +
                                            (m.surjective ? "  surjective" : "") +
                                            (!m.injective && !m.surjective ? "  neither" : ""))
                << "\n";
        }
    }
    if (!r.notes.empty()) {
        out << "\nnotes\n";
        for (const auto& n : r.notes)
            out << "  " << n << "\n";
    }
    out << "\n";
    if (r.discrepancies.empty()) {
        out << "sound: no discrepancies\n";
    } else {
        out << "DISCREPANCIES\n";
        for (const auto& d : r.discrepancies)
            out << "  " << d << "\n";
    }
    return out.str();
}

}  // namespace obstruct
