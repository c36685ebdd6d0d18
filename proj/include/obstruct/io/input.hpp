#pragma once

#include <optional>
#include <string>
#include <vector>

#include "obstruct/core/complex.hpp"
#include "obstruct/core/labels.hpp"
#include "obstruct/metric/distance_space.hpp"

namespace obstruct {

/// Cover as given by the user, by label.
struct CoverSpec {
    std::vector<std::string> x;
    std::vector<std::string> y;
    friend bool operator==(const CoverSpec&, const CoverSpec&) = default;
};

/// A parsed input file: exactly one of `space` or `complex`.
struct InputDocument {
    std::optional<DistanceSpace> space;
    std::optional<Complex> complex;
    /// Labels of `complex`; for a distance space they live in the space.
    LabelTable complex_labels;
    std::optional<CoverSpec> cover;
    std::optional<Distance> radius;

    const LabelTable& labels() const { return space ? space->labels() : complex_labels; }
};

// Every parser throws InvalidInput with a line or entry position on malformed text.

/// {"points": [...], "distances": [[...]]}, full symmetric matrix. Entries are
/// numbers or strings such as "3/2" or "inf". Optional "cover" and "r".
InputDocument parse_distance_json(const std::string& text);

/**
 * Header row of labels, then one row per point holding the distances to the
 * earlier points. A row may also carry its diagonal zero, the whole matrix
 * row, and a leading copy of its own label when that label is not itself a
 * number. Blank lines and lines starting with '#' are skipped.
 */
InputDocument parse_distance_csv(const std::string& text);

/// {"facets": [[...], ...]} with string or integer vertex labels. Optional "cover".
InputDocument parse_facets_json(const std::string& text);

/// JSON text: dispatches on "facets" versus "points"; anything else is CSV.
InputDocument parse_input(const std::string& text);

/// {"X": [...], "Y": [...]}
CoverSpec parse_cover_json(const std::string& text);

/// Reads a whole file; throws InvalidInput when it cannot be opened.
std::string read_file(const std::string& path);

/// Resolves cover labels; throws InvalidInput for unknown labels.
std::pair<VertexSet, VertexSet> resolve_cover(const LabelTable& labels, const CoverSpec& cover);

}  // namespace obstruct
