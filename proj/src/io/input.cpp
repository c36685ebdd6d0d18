#include "obstruct/io/input.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "obstruct/core/error.hpp"

namespace obstruct {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

std::string label_of(const json& v, const std::string& where) {
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return v.dump();
    throw InvalidInput(where + ": labels must be strings or integers");
}

std::vector<std::string> label_list(const json& v, const std::string& where) {
    if (!v.is_array())
        throw InvalidInput(where + " must be an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(label_of(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

// Numbers go through their shortest decimal form so 0.1 stays exactly 1/10.
Distance distance_of(const json& v, const std::string& where) {
    try {
        if (v.is_string())
            return Distance::parse(v.get<std::string>());
        if (v.is_number())
            return Distance::parse(v.dump());
    } catch (const InvalidInput& e) {
        throw InvalidInput(where + ": " + e.what());
    }
    throw InvalidInput(where + ": expected a number or a string");
}

CoverSpec cover_of(const json& j) {
    if (!j.is_object() || !j.contains("X") || !j.contains("Y"))
        throw InvalidInput("cover must be an object with \"X\" and \"Y\"");
    return {label_list(j["X"], "X"), label_list(j["Y"], "Y")};
}

void read_extras(const json& j, InputDocument& doc) {
    if (j.contains("cover"))
        doc.cover = cover_of(j["cover"]);
    for (const char* key : {"r", "radius"}) {
        if (j.contains(key))
            doc.radius = distance_of(j[key], key);
    }
}

void check_space(const DistanceSpace& space) {
    const auto problems = validate(space);
    if (problems.empty())
        return;
    const Violation& v = problems.front();
    const auto& l = space.labels();
    if (v.kind == Violation::Kind::Symmetry)
        throw InvalidInput("distance matrix is not symmetric at (" + l.name(v.i) + "," + l.name(v.j) + ")");
    throw InvalidInput("nonzero self-distance at " + l.name(v.i));
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
        out.push_back(trim(cell));
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    while (!out.empty() && out.back().empty())
        out.pop_back();
    return out;
}

bool parses_as_distance(const std::string& s) {
    try {
        Distance::parse(s);
        return true;
    } catch (const InvalidInput&) {
        return false;
    }
}

}  // namespace

InputDocument parse_distance_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("points") || !j.contains("distances"))
        throw InvalidInput("distance input needs \"points\" and \"distances\"");
    if (j.contains("facets"))
        throw InvalidInput("give either a distance matrix or a facet list, not both");
    auto labels = label_list(j["points"], "points");
    const json& rows = j["distances"];
    if (!rows.is_array() || rows.size() != labels.size())
        throw InvalidInput("\"distances\" needs one row per point");
    std::vector<std::vector<Distance>> m;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != labels.size())
            throw InvalidInput("distances row " + std::to_string(i) + " needs " + std::to_string(labels.size()) +
                               " entries");
        std::vector<Distance> row;
        for (std::size_t k = 0; k < rows[i].size(); ++k)
            row.push_back(distance_of(rows[i][k], "distances[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
        m.push_back(std::move(row));
    }
    InputDocument doc;
    doc.space = DistanceSpace(std::move(labels), std::move(m));
    check_space(*doc.space);
    read_extras(j, doc);
    return doc;
}

InputDocument parse_distance_csv(const std::string& text) {
    std::stringstream in(text);
    std::string line;
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> line_no;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        if (labels.empty()) {
            labels = split_csv(t);
            // A leading empty corner cell is common in tables with row labels.
            if (!labels.empty() && labels.front().empty())
                labels.erase(labels.begin());
            if (labels.empty())
                throw InvalidInput("line " + std::to_string(n) + ": empty header");
            continue;
        }
        rows.push_back(split_csv(t));
        line_no.push_back(n);
    }
    if (labels.empty())
        throw InvalidInput("CSV input has no header row");
    const std::size_t n = labels.size();
    // The first point has no earlier neighbours, so its row may be omitted.
    if (rows.size() == n - 1) {
        rows.insert(rows.begin(), std::vector<std::string>{});
        line_no.insert(line_no.begin(), 0);
    }
    if (rows.size() != n)
        throw InvalidInput("expected " + std::to_string(n) + " distance rows, found " + std::to_string(rows.size()));

    std::vector<std::vector<Distance>> m(n, std::vector<Distance>(n, Distance(0)));
    std::vector<std::vector<bool>> set(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        auto cells = rows[i];
        const std::string where = "line " + std::to_string(line_no[i]);
        // A row label is only recognised when it cannot be read as a distance.
        if (!cells.empty() && cells.front() == labels[i] && !parses_as_distance(cells.front()))
            cells.erase(cells.begin());
        if (cells.size() != i && cells.size() != i + 1 && cells.size() != n)
            throw InvalidInput(where + ": row for " + labels[i] + " has " + std::to_string(cells.size()) +
                               " entries, expected " + std::to_string(i) + ", " + std::to_string(i + 1) + " or " +
                               std::to_string(n));
        for (std::size_t k = 0; k < cells.size(); ++k) {
            Distance d;
            try {
                d = Distance::parse(cells[k]);
            } catch (const InvalidInput& e) {
                throw InvalidInput(where + ", entry " + std::to_string(k + 1) + ": " + e.what());
            }
            if (k == i) {
                if (d != Distance(0))
                    throw InvalidInput(where + ": nonzero self-distance at " + labels[i]);
                continue;
            }
            // Full rows set both triangles; a mismatch is caught below.
            m[i][k] = d;
            if (!set[k][i])
                m[k][i] = d;
            set[i][k] = true;
        }
    }
    InputDocument doc;
    doc.space = DistanceSpace(labels, std::move(m));
    check_space(*doc.space);
    return doc;
}

InputDocument parse_facets_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("facets"))
        throw InvalidInput("facet input needs \"facets\"");
    if (j.contains("distances") || j.contains("points"))
        throw InvalidInput("give either a distance matrix or a facet list, not both");
    const json& fs = j["facets"];
    if (!fs.is_array())
        throw InvalidInput("\"facets\" must be an array");
    std::vector<std::vector<std::string>> named;
    std::vector<std::string> all;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        auto f = label_list(fs[i], "facets[" + std::to_string(i) + "]");
        if (f.empty())
            throw InvalidInput("facets[" + std::to_string(i) + "] is empty");
        all.insert(all.end(), f.begin(), f.end());
        named.push_back(std::move(f));
    }
    InputDocument doc;
    doc.complex_labels = LabelTable::sorted_from(all);
    std::vector<std::vector<Vertex>> facets;
    for (const auto& f : named) {
        std::vector<Vertex> ids;
        for (const auto& l : f)
            ids.push_back(doc.complex_labels.id(l));
        facets.push_back(std::move(ids));
    }
    doc.complex = Complex::from_facets(facets);
    read_extras(j, doc);
    return doc;
}

InputDocument parse_input(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty())
        throw InvalidInput("empty input");
    if (t.front() != '{')
        return parse_distance_csv(text);
    const json j = parse_json(text);
    if (j.is_object() && j.contains("facets"))
        return parse_facets_json(text);
    return parse_distance_json(text);
}

CoverSpec parse_cover_json(const std::string& text) {
    return cover_of(parse_json(text));
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw InvalidInput("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::pair<VertexSet, VertexSet> resolve_cover(const LabelTable& labels, const CoverSpec& cover) {
    return {labels.ids(cover.x), labels.ids(cover.y)};
}

}  // namespace obstruct
