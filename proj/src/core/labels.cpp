#include "obstruct/core/labels.hpp"

#include <algorithm>
#include <charconv>

#include "obstruct/core/error.hpp"

namespace obstruct {

namespace {

std::optional<long long> as_integer(const std::string& s) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        return std::nullopt;
    return value;
}

}  // namespace

LabelTable::LabelTable(const std::vector<std::string>& names) {
    for (const auto& n : names) {
        if (ids_.count(n))
            throw InvalidInput("duplicate label '" + n + "'");
        intern(n);
    }
}

Vertex LabelTable::intern(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end())
        return it->second;
    auto v = static_cast<Vertex>(names_.size());
    names_.push_back(name);
    ids_.emplace(name, v);
    return v;
}

std::optional<Vertex> LabelTable::find(const std::string& name) const {
    auto it = ids_.find(name);
    if (it == ids_.end())
        return std::nullopt;
    return it->second;
}

Vertex LabelTable::id(const std::string& name) const {
    auto v = find(name);
    if (!v)
        throw InvalidInput("unknown label '" + name + "'");
    return *v;
}

const std::string& LabelTable::name(Vertex v) const {
    if (v >= names_.size())
        throw InvalidInput("vertex id out of range");
    return names_[v];
}

VertexSet LabelTable::ids(const std::vector<std::string>& names) const {
    std::vector<Vertex> out;
    out.reserve(names.size());
    for (const auto& n : names)
        out.push_back(id(n));
    return make_vertex_set(std::move(out));
}

std::vector<std::string> LabelTable::names_of(std::span<const Vertex> vs) const {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (Vertex v : vs)
        out.push_back(name(v));
    return out;
}

std::string LabelTable::format(std::span<const Vertex> vs) const {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i)
            out += ',';
        out += vs[i] < names_.size() ? names_[vs[i]] : std::to_string(vs[i]);
    }
    out += '}';
    return out;
}

LabelTable LabelTable::sorted_from(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    bool numeric = std::all_of(names.begin(), names.end(), [](const std::string& s) { return as_integer(s).has_value(); });
    if (numeric) {
        std::stable_sort(names.begin(), names.end(),
                         [](const std::string& a, const std::string& b) { return *as_integer(a) < *as_integer(b); });
    }
    LabelTable t;
    for (const auto& n : names)
        t.intern(n);
    return t;
}

LabelTable numeric_labels(std::size_t n) {
    LabelTable t;
    for (std::size_t i = 0; i < n; ++i)
        t.intern(std::to_string(i));
    return t;
}

}  // namespace obstruct
