#include "obstruct/analysis/analyzer.hpp"

#include <algorithm>
#include <map>

#include "obstruct/analysis/criteria.hpp"
#include "obstruct/analysis/p_complement.hpp"
#include "obstruct/core/error.hpp"

namespace obstruct {

namespace {

const char* const kUnion = "K_X∪K_Y";

std::vector<std::string> names(const LabelTable& labels, std::span<const Vertex> vs) {
    return labels.names_of(vs);
}

std::vector<std::vector<std::string>> facet_names(const LabelTable& labels, const Complex& c) {
    std::vector<std::vector<std::string>> out;
    const auto all = c.all_simplices();
    for (const Simplex& s : all) {
        bool maximal = true;
        for (Vertex v : c.vertices()) {
            if (!s.contains(v) && c.contains(s.with(v))) {
                maximal = false;
                break;
            }
        }
        if (maximal)
            out.push_back(names(labels, s.span()));
    }
    return out;
}

ObstructionSummary summarize(const LabelTable& labels, const PComplementItem& it) {
    ObstructionSummary s;
    s.simplex = names(labels, it.simplex.span());
    s.status = status_name(it.status);
    s.facets = facet_names(labels, it.obstruction);
    if (it.certificate.central)
        s.apex = names(labels, it.certificate.central->span());
    s.collapses = it.certificate.collapses.size();
    s.homology = it.profile;
    return s;
}

std::vector<CensusRow> census(const std::vector<PComplementItem>& items) {
    std::map<int, CensusRow> rows;
    for (const auto& it : items) {
        CensusRow& r = rows[it.simplex.dim()];
        r.dim = it.simplex.dim();
        ++r.count;
        switch (it.status) {
        case ObstructionStatus::Empty:
            ++r.empty;
            break;
        case ObstructionStatus::ConeCertified:
            ++r.cone;
            break;
        case ObstructionStatus::CollapseCertified:
            ++r.collapsible;
            break;
        case ObstructionStatus::HomologyOnly:
            ++r.homology_only;
            break;
        }
    }
    std::vector<CensusRow> out;
    for (auto& [d, r] : rows)
        out.push_back(r);
    return out;
}

// The flag shortcut St(σ,A) = ⋂_{x∈σ} St({x},A) against the listed obstructions.
void check_clique_shortcut(const Complex& k, const Cover& cover, const std::vector<PComplementItem>& items,
                           const LabelTable& labels, DecompositionReport& report) {
    std::map<Vertex, Complex> per_vertex;
    for (const auto& it : items) {
        Complex meet;
        bool first = true;
        for (Vertex x : it.simplex) {
            auto found = per_vertex.find(x);
            if (found == per_vertex.end())
                found = per_vertex.emplace(x, obstruction_complex(k, Simplex{x}, cover.a)).first;
            meet = first ? found->second : intersection_of(meet, found->second);
            first = false;
        }
        if (meet.all_simplices() != it.obstruction.all_simplices())
            report.discrepancies.push_back("clique shortcut: vertexwise intersection differs from St(" +
                                           labels.format(it.simplex) + ",A)");
    }
    report.notes.push_back("clique shortcut St(σ,A) = ⋂ St({x},A) matched on " + std::to_string(items.size()) +
                           " simplices");
}

Verification verify(const Complex& k, const Cover& cover, const AnalyzeOptions& opts) {
    Verification v;
    v.max_degree = opts.dim_cap;
    const Complex kx = restriction(k, cover.x);
    const Complex ky = restriction(k, cover.y);
    const Complex ka = restriction(k, cover.a);
    const Complex u = restriction_union(k, cover.x, cover.y);
    const std::vector<std::pair<std::string, const Complex*>> parts = {
        {"K_X", &kx}, {"K_Y", &ky}, {"K_A", &ka}, {kUnion, &u}, {"K", &k}};
    for (const Coefficients& c : opts.fields) {
        for (const auto& [name, cx] : parts)
            v.profiles.push_back({name, homology(*cx, c, opts.dim_cap, true)});
    }
    for (const Coefficients& c : opts.fields) {
        if (!c.is_field())
            continue;
        for (int d = 0; d <= opts.dim_cap; ++d)
            v.maps.push_back(induced_map(u, k, d, c));
    }
    return v;
}

std::string degree_range(int hi) {
    return hi == 0 ? "H_0" : "H_0..H_" + std::to_string(hi);
}

/// Compares one verdict's conclusion with the verification data.
void judge(CriterionVerdict& verdict, const Verification& ver, std::vector<std::string>& discrepancies) {
    const Conclusion& c = verdict.conclusion;
    const int iso_hi = std::min(c.iso_through, ver.max_degree);
    std::vector<std::string> problems;
    std::vector<std::string> used;
    for (const auto& m : ver.maps) {
        if (c.excluded_prime != 0 && m.coeffs.kind == Coefficients::Kind::Prime && m.coeffs.p == c.excluded_prime)
            continue;
        if (std::find(used.begin(), used.end(), m.coeffs.name()) == used.end())
            used.push_back(m.coeffs.name());
        if (m.degree <= iso_hi && !m.iso())
            problems.push_back("H_" + std::to_string(m.degree) + " over " + m.coeffs.name() + " is not an isomorphism");
        if (m.degree == c.surjective_at && !m.surjective)
            problems.push_back("H_" + std::to_string(m.degree) + " over " + m.coeffs.name() + " is not onto");
    }
    // Integral groups have no map here, but an isomorphism forces equal groups.
    if (c.excluded_prime == 0) {
        const HomologyProfile* pu = nullptr;
        const HomologyProfile* pk = nullptr;
        for (const auto& p : ver.profiles) {
            if (p.profile.coeffs.kind != Coefficients::Kind::Integers)
                continue;
            if (p.complex == kUnion)
                pu = &p.profile;
            else if (p.complex == "K")
                pk = &p.profile;
        }
        if (pu && pk) {
            used.push_back("Z (groups)");
            for (int d = 0; d <= iso_hi; ++d) {
                if (pu->group(d) != pk->group(d))
                    problems.push_back("integral H_" + std::to_string(d) + " differs");
            }
        }
    }
    std::string over;
    for (const auto& u : used)
        over += (over.empty() ? "" : ", ") + u;
    if (problems.empty()) {
        verdict.agreement = Agreement::Consistent;
        std::string what;
        if (iso_hi >= 0)
            what = "iso on " + degree_range(iso_hi);
        if (c.surjective_at >= 0 && c.surjective_at <= ver.max_degree)
            what += std::string(what.empty() ? "" : ", ") + "onto H_" + std::to_string(c.surjective_at);
        verdict.verification = "confirmed " + what + " over " + over;
        return;
    }
    verdict.agreement = Agreement::Discrepancy;
    verdict.verification.clear();
    for (const auto& p : problems) {
        verdict.verification += (verdict.verification.empty() ? "" : "; ") + p;
        discrepancies.push_back(verdict.id + ": " + p);
    }
}

DecompositionReport run(const Complex& k, const Cover& cover_in, const AnalyzeOptions& opts, const LabelTable& labels,
                        const MetricCover* mc) {
    if (opts.dim_cap < 1)
        throw InvalidInput("dimension cap must be at least 1");
    const Cover cover = Cover::make(k, cover_in.x, cover_in.y);

    DecompositionReport report;
    report.x = names(labels, cover.x);
    report.y = names(labels, cover.y);
    report.a = names(labels, cover.a);
    if (mc)
        report.radius = mc->r.to_string();
    report.dim_cap = opts.dim_cap;
    report.flag = k.is_flag();

    const auto items = enumerate_p_complement(k, cover, opts.dim_cap);
    report.exhausted = p_complement_exhausted(k, cover, opts.dim_cap);
    report.census = census(items);
    for (const auto& it : items)
        report.obstructions.push_back(summarize(labels, it));
    if (k.is_flag())
        check_clique_shortcut(k, cover, items, labels, report);

    CriterionContext ctx{k, cover, opts.dim_cap, items, report.exhausted, labels, &report.discrepancies};
    report.verdicts = general_criteria(ctx);
    for (auto& v : clique_criteria(ctx))
        report.verdicts.push_back(std::move(v));
    if (mc) {
        for (auto& v : metric_criteria(ctx, *mc))
            report.verdicts.push_back(std::move(v));
    }

    bool homotopy_claim = false;
    for (const auto& v : report.verdicts) {
        if (v.status == HypothesisStatus::Holds && v.conclusion.iso_through < kAllDegrees)
            homotopy_claim = true;
    }
    if (homotopy_claim)
        report.notes.push_back("connectivity conclusions are checked through homology only; π1 is not machine-verified");

    if (opts.verify) {
        report.verification = verify(k, cover, opts);
        check_agreement(report);
    }
    return report;
}

}  // namespace

std::vector<std::string> check_agreement(DecompositionReport& report) {
    std::vector<std::string> found;
    if (!report.verification)
        return found;
    for (auto& v : report.verdicts) {
        if (v.status != HypothesisStatus::Holds) {
            v.agreement = Agreement::Unchecked;
            v.verification.clear();
            continue;
        }
        judge(v, *report.verification, found);
    }
    for (const auto& f : found) {
        if (std::find(report.discrepancies.begin(), report.discrepancies.end(), f) == report.discrepancies.end())
            report.discrepancies.push_back(f);
    }
    return found;
}

DecompositionReport analyze(const Complex& k, const Cover& cover, const AnalyzeOptions& options,
                            const LabelTable& labels) {
    return run(k, cover, options, labels, nullptr);
}

DecompositionReport analyze(const Complex& k, const Cover& cover, const AnalyzeOptions& options) {
    Vertex top = 0;
    for (Vertex v : k.vertices())
        top = std::max(top, v);
    return analyze(k, cover, options, numeric_labels(k.empty() ? 0 : top + 1));
}

DecompositionReport analyze_metric(const MetricCover& mc, const AnalyzeOptions& options) {
    const Complex k = vietoris_rips(mc.space, mc.r, options.dim_cap);
    return run(k, mc.cover(), options, mc.space.labels(), &mc);
}

}  // namespace obstruct
