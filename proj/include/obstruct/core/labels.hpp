#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "obstruct/core/simplex.hpp"

namespace obstruct {

/// Bidirectional map between user labels and dense vertex ids.
class LabelTable {
public:
    LabelTable() = default;
    explicit LabelTable(const std::vector<std::string>& names);

    /// Returns the existing id or appends a new one.
    Vertex intern(const std::string& name);
    std::optional<Vertex> find(const std::string& name) const;
    /// Throws InvalidInput for unknown labels.
    Vertex id(const std::string& name) const;
    const std::string& name(Vertex v) const;
    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }

    VertexSet ids(const std::vector<std::string>& names) const;
    std::vector<std::string> names_of(std::span<const Vertex> vs) const;

    /// "{a,b,c}"; the empty set prints as "{}".
    std::string format(std::span<const Vertex> vs) const;
    std::string format(const Simplex& s) const { return format(s.span()); }

    /// Table whose id order follows the sorted labels: numerically when every
    /// label is an integer, otherwise by string comparison.
    static LabelTable sorted_from(std::vector<std::string> names);

    friend bool operator==(const LabelTable& a, const LabelTable& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Vertex> ids_;
};

/// Labels are plain ids, "0", "1", ... .
LabelTable numeric_labels(std::size_t n);

}  // namespace obstruct
