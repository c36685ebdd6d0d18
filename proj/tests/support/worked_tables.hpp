#pragma once

// Distance tables of the worked examples, transcribed by hand for the tests.
// The corpus carries its own copy; a test checks the two agree.

#include <string>
#include <tuple>
#include <vector>

#include "obstruct/metric/assumptions.hpp"

namespace tables {

struct Table {
    std::vector<std::string> labels;
    std::vector<std::tuple<std::string, std::string, long long>> pairs;
    std::vector<std::string> x;
    std::vector<std::string> y;
    long long r;

    obstruct::DistanceSpace space() const {
        obstruct::LabelTable t(labels);
        const auto n = labels.size();
        std::vector<std::vector<obstruct::Distance>> m(n, std::vector<obstruct::Distance>(n));
        for (const auto& [a, b, d] : pairs) {
            m[t.id(a)][t.id(b)] = d;
            m[t.id(b)][t.id(a)] = d;
        }
        return obstruct::DistanceSpace(labels, m);
    }

    obstruct::MetricCover cover() const {
        auto s = space();
        auto xs = s.labels().ids(x);
        auto ys = s.labels().ids(y);
        return obstruct::MetricCover::make(s, xs, ys, r);
    }

    obstruct::Vertex id(const std::string& name) const { return space().labels().id(name); }
};

inline Table square() {
    return {{"x", "a", "b", "y"},
            {{"x", "a", 1}, {"x", "b", 1}, {"x", "y", 1}, {"a", "y", 1}, {"b", "y", 1}, {"a", "b", 2}},
            {"x", "a", "b"},
            {"a", "b", "y"},
            1};
}

inline Table six_point() {
    return {{"x", "a1", "a2", "a3", "a4", "y"},
            {{"x", "a1", 1}, {"x", "a2", 2}, {"x", "a3", 1}, {"x", "a4", 1}, {"x", "y", 1},
             {"a1", "a2", 1}, {"a1", "a3", 1}, {"a1", "a4", 2}, {"a1", "y", 1},
             {"a2", "a3", 2}, {"a2", "a4", 1}, {"a2", "y", 2},
             {"a3", "a4", 1}, {"a3", "y", 1},
             {"a4", "y", 1}},
            {"x", "a1", "a2", "a3", "a4"},
            {"a1", "a2", "a3", "a4", "y"},
            1};
}

inline Table seven_point() {
    return {{"x1", "x2", "a1", "a2", "a3", "a4", "y"},
            {{"x1", "x2", 1}, {"x1", "a1", 1}, {"x1", "a2", 1}, {"x1", "a3", 2}, {"x1", "a4", 1}, {"x1", "y", 1},
             {"x2", "a1", 2}, {"x2", "a2", 1}, {"x2", "a3", 1}, {"x2", "a4", 1}, {"x2", "y", 1},
             {"a1", "a2", 1}, {"a1", "a3", 1}, {"a1", "a4", 2}, {"a1", "y", 1},
             {"a2", "a3", 2}, {"a2", "a4", 1}, {"a2", "y", 1},
             {"a3", "a4", 1}, {"a3", "y", 2},
             {"a4", "y", 1}},
            {"x1", "x2", "a1", "a2", "a3", "a4"},
            {"a1", "a2", "a3", "a4", "y"},
            1};
}

inline Table five_point() {
    return {{"x1", "x2", "a1", "a2", "y"},
            {{"x1", "x2", 3}, {"x1", "a1", 1}, {"x1", "a2", 4}, {"x1", "y", 3},
             {"x2", "a1", 4}, {"x2", "a2", 1}, {"x2", "y", 3},
             {"a1", "a2", 3}, {"a1", "y", 2},
             {"a2", "y", 2}},
            {"x1", "x2", "a1", "a2"},
            {"a1", "a2", "y"},
            3};
}

inline Table eight_point() {
    return {{"x1", "x2", "a11", "a12", "a21", "a22", "y1", "y2"},
            {{"x1", "x2", 6}, {"x1", "a11", 3}, {"x1", "a12", 5}, {"x1", "a21", 7}, {"x1", "a22", 9},
             {"x1", "y1", 8}, {"x1", "y2", 8},
             {"x2", "a11", 9}, {"x2", "a12", 7}, {"x2", "a21", 5}, {"x2", "a22", 3}, {"x2", "y1", 8}, {"x2", "y2", 8},
             {"a11", "a12", 4}, {"a11", "a21", 4}, {"a11", "a22", 6}, {"a11", "y1", 5}, {"a11", "y2", 7},
             {"a12", "a21", 6}, {"a12", "a22", 4}, {"a12", "y1", 9}, {"a12", "y2", 3},
             {"a21", "a22", 4}, {"a21", "y1", 3}, {"a21", "y2", 9},
             {"a22", "y1", 7}, {"a22", "y2", 5},
             {"y1", "y2", 6}},
            {"x1", "x2", "a11", "a12", "a21", "a22"},
            {"y1", "y2", "a11", "a12", "a21", "a22"},
            8};
}

inline Table nine_point() {
    Table t;
    for (int i = 1; i <= 9; ++i)
        t.labels.push_back("z" + std::to_string(i));
    for (int i = 1; i <= 9; ++i) {
        for (int j = i + 1; j <= 9; ++j)
            t.pairs.emplace_back("z" + std::to_string(i), "z" + std::to_string(j), std::min(j - i, 9 - (j - i)));
    }
    t.x = {"z1", "z2", "z4", "z5", "z7", "z8"};
    t.y = {"z1", "z3", "z4", "z6", "z7", "z9"};
    t.r = 3;
    return t;
}

/// Six-vertex triangulation of the real projective plane.
inline std::vector<std::vector<obstruct::Vertex>> rp2_facets() {
    return {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
            {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};
}

}  // namespace tables
