#include "obstruct/io/cli.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "obstruct/analysis/analyzer.hpp"
#include "obstruct/core/error.hpp"
#include "obstruct/io/corpus.hpp"
#include "obstruct/io/input.hpp"
#include "obstruct/io/render.hpp"
#include "obstruct/io/report_json.hpp"

namespace obstruct {

namespace {

using nlohmann::json;

struct Common {
    std::string input;
    std::string radius;
    std::string tolerance;
    int max_dim = 4;
    std::vector<std::string> fields;
    std::string format = "text";
};

void add_input(CLI::App* cmd, Common& c) {
    cmd->add_option("input", c.input, "distance matrix (JSON or CSV) or facet list (JSON); - for stdin")->required();
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

void add_radius(CLI::App* cmd, Common& c) {
    cmd->add_option("-r,--radius", c.radius, "Vietoris-Rips radius, e.g. 3, 5/2, 0.75");
    cmd->add_option("--tolerance", c.tolerance, "slack ε in distance comparisons d <= r + ε (default 0)");
}

void add_fields(CLI::App* cmd, Common& c) {
    cmd->add_option("--field", c.fields, "coefficients: q, z or zp:<p>; repeatable (default q and z)");
}

std::string slurp(const std::string& path) {
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return read_file(path);
}

std::vector<Coefficients> coefficient_list(const Common& c) {
    if (c.fields.empty())
        return {Coefficients::rationals(), Coefficients::integers()};
    std::vector<Coefficients> out;
    for (const auto& f : c.fields) {
        const Coefficients k = Coefficients::parse(f);
        if (std::find(out.begin(), out.end(), k) == out.end())
            out.push_back(k);
    }
    return out;
}

struct Loaded {
    InputDocument doc;
    Complex k;
    std::optional<Distance> r;
};

/// Parses the input and builds the complex; a distance matrix needs a radius.
Loaded load(const Common& c, int dim_cap) {
    if (c.max_dim < 0)
        throw InvalidInput("--max-dim must be nonnegative");
    Loaded out{parse_input(slurp(c.input)), Complex(), std::nullopt};
    if (!c.radius.empty())
        out.r = Distance::parse(c.radius);
    else
        out.r = out.doc.radius;
    if (out.doc.space) {
        if (!c.tolerance.empty())
            out.doc.space = out.doc.space->with_tolerance(Distance::parse(c.tolerance));
        if (!out.r)
            throw InvalidInput("a distance matrix needs a radius (--radius)");
        if (out.r->is_infinite())
            throw InvalidInput("the radius must be finite");
        out.k = vietoris_rips(*out.doc.space, *out.r, dim_cap);
    } else {
        if (!c.radius.empty() || !c.tolerance.empty())
            throw InvalidInput("--radius and --tolerance apply to distance input only");
        out.k = *out.doc.complex;
    }
    return out;
}

int cmd_vr(const Common& c, std::ostream& out) {
    Loaded in = load(c, c.max_dim);
    if (!in.doc.space)
        throw InvalidInput("vr needs a distance matrix");
    const auto counts = simplex_counts(in.k, c.max_dim);
    if (c.format == "json") {
        out << json{{"radius", in.r->to_string()}, {"max_dim", c.max_dim}, {"counts", counts}}.dump(2) << "\n";
    } else {
        out << "VR_r with r = " << in.r->to_string() << " on " << in.doc.space->size() << " points\n";
        out << render_counts_text(counts);
    }
    return kExitOk;
}

int cmd_homology(const Common& c, bool unreduced, std::ostream& out) {
    Loaded in = load(c, c.max_dim + 1);
    json profiles = json::array();
    for (const auto& f : coefficient_list(c)) {
        const HomologyProfile p = homology(in.k, f, c.max_dim, !unreduced);
        if (c.format == "json")
            profiles.push_back(to_json(p));
        else
            out << render_profile_text(p);
    }
    if (c.format == "json")
        out << json{{"profiles", profiles}}.dump(2) << "\n";
    return kExitOk;
}

int cmd_decompose(const Common& c, const std::string& cover_path, bool verify, std::ostream& out,
                  std::ostream& err) {
    Loaded in = load(c, c.max_dim);
    CoverSpec cover;
    if (!cover_path.empty())
        cover = parse_cover_json(read_file(cover_path));
    else if (in.doc.cover)
        cover = *in.doc.cover;
    else
        throw InvalidInput("decompose needs a cover (--cover)");

    AnalyzeOptions opts;
    opts.dim_cap = c.max_dim;
    opts.fields = coefficient_list(c);
    opts.verify = verify;
    const auto [x, y] = resolve_cover(in.doc.labels(), cover);
    DecompositionReport report;
    if (in.doc.space)
        report = analyze_metric(MetricCover::make(*in.doc.space, x, y, *in.r), opts);
    else
        report = analyze(in.k, Cover::make(in.k, x, y), opts, in.doc.labels());

    if (c.format == "json")
        out << to_json(report).dump(2) << "\n";
    else
        out << render_report_text(report);
    if (!report.sound()) {
        err << "soundness discrepancy: " << report.discrepancies.front() << "\n";
        return kExitDiscrepancy;
    }
    return kExitOk;
}

int cmd_corpus(const std::string& action, const std::string& only, const std::string& format, std::ostream& out) {
    const auto& cases = corpus_cases();
    if (action == "list") {
        if (format == "json") {
            json names = json::array();
            for (const auto& c : cases)
                names.push_back({{"name", c.name}, {"description", c.description}});
            out << names.dump(2) << "\n";
        } else {
            for (const auto& c : cases)
                out << c.name << "  " << c.description << "\n";
        }
        return kExitOk;
    }
    if (!only.empty())
        corpus_case(only);
    bool all = true;
    json results = json::array();
    for (const auto& c : cases) {
        if (!only.empty() && c.name != only)
            continue;
        const CaseResult r = run_case(c);
        all = all && r.passed();
        if (format == "json") {
            results.push_back({{"name", r.name},
                               {"passed", r.passed()},
                               {"checked", r.checked},
                               {"mismatches", r.mismatches},
                               {"discrepancies", r.discrepancies},
                               {"seconds", r.seconds}});
            continue;
        }
        out << (r.passed() ? "PASS  " : "FAIL  ") << r.name << "  (" << r.checked << " expectations, "
            << static_cast<long long>(r.seconds * 1000) << " ms)\n";
        for (const auto& m : r.mismatches)
            out << "      " << m << "\n";
        for (const auto& d : r.discrepancies)
            out << "      discrepancy: " << d << "\n";
    }
    if (format == "json")
        out << json{{"passed", all}, {"cases", results}}.dump(2) << "\n";
    return all ? kExitOk : kExitDiscrepancy;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Obstruction analysis of covers of simplicial and Vietoris-Rips complexes"};
    app.require_subcommand(1);

    Common vr_opts;
    auto* vr = app.add_subcommand("vr", "simplex counts of VR_r per dimension");
    add_input(vr, vr_opts);
    add_radius(vr, vr_opts);
    vr->add_option("--max-dim", vr_opts.max_dim, "largest dimension to count")->capture_default_str();

    Common h_opts;
    bool unreduced = false;
    auto* hom = app.add_subcommand("homology", "homology of a complex or of VR_r");
    add_input(hom, h_opts);
    add_radius(hom, h_opts);
    add_fields(hom, h_opts);
    hom->add_option("--max-dim", h_opts.max_dim, "largest homology degree")->capture_default_str();
    hom->add_flag("--unreduced", unreduced, "unreduced homology");

    Common d_opts;
    std::string cover_path;
    bool verify = true;
    auto* dec = app.add_subcommand("decompose", "evaluate every criterion for a cover X ∪ Y");
    add_input(dec, d_opts);
    add_radius(dec, d_opts);
    add_fields(dec, d_opts);
    dec->add_option("--max-dim", d_opts.max_dim, "listing dimension of K \\ P and largest homology degree")
        ->capture_default_str();
    dec->add_option("--cover", cover_path, "cover file {\"X\": [...], \"Y\": [...]}");
    dec->add_flag("--verify,!--no-verify", verify, "compute homology and check every conclusion (default on)");

    std::string action;
    std::string only;
    std::string corpus_format = "text";
    auto* corpus = app.add_subcommand("corpus", "the worked examples with their expected outcomes");
    corpus->add_option("action", action, "run or list")->required()->check(CLI::IsMember({"run", "list"}));
    corpus->add_option("--case", only, "run a single case");
    corpus->add_option("--format", corpus_format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*vr)
            return cmd_vr(vr_opts, out);
        if (*hom)
            return cmd_homology(h_opts, unreduced, out);
        if (*dec)
            return cmd_decompose(d_opts, cover_path, verify, out, err);
        return cmd_corpus(action, only, corpus_format, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace obstruct
