#pragma once

// Named example arrangements.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrlie/graphic.hpp"
#include "arrlie/lattice.hpp"

namespace arrlie {

struct Builtin {
    Arrangement arrangement;
    std::optional<Graph> graph;  // set for graphic examples
};

namespace detail {

// Normals (2x, 2y, 2) of the lines dual to points (x, y) in the plane.
inline Arrangement from_points(const std::vector<std::pair<int, int>>& doubled, std::string label) {
    std::vector<IntVector> normals;
    for (const auto& [x, y] : doubled) normals.push_back({x, y, 2});
    return arrangement_from_normals(normals, std::move(label));
}

inline bool parse_suffix(const std::string& name, const std::string& prefix, int& value) {
    if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return false;
    const std::string rest = name.substr(prefix.size());
    if (rest.size() > 6 || rest.find_first_not_of("0123456789") != std::string::npos) return false;
    value = std::stoi(rest);
    return true;
}

}  // namespace detail

/// Seven points, five 3-point lines {0,1,4},{0,2,5},{0,3,6},{1,2,3},{4,5,6}.
inline Arrangement x2_arrangement() {
    return detail::from_points({{6, 6}, {3, 3}, {6, 3}, {9, 3}, {0, 0}, {6, 0}, {12, 0}}, "x2");
}

/// Six points, three 3-point lines {0,1,2},{0,3,4},{2,4,5}.
inline Arrangement x3_arrangement() {
    return detail::from_points({{6, 6}, {3, 3}, {0, 0}, {9, 3}, {12, 0}, {6, 0}}, "x3");
}

/// M lines through the origin of the plane.
inline Arrangement pencil_arrangement(int m) {
    if (m < 2) throw std::invalid_argument("pencil needs at least two hyperplanes");
    std::vector<IntVector> normals;
    for (int k = 0; k < m; ++k) normals.push_back({1, k});
    return arrangement_from_normals(normals, "pencil" + std::to_string(m));
}

inline const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names{"x2",      "x3",      "braid3",  "braid4",  "braid5", "braid6",
                                                "pencil2", "pencil3", "pencil4", "pencil5", "pencil6", "wheel",
                                                "gfam-0",  "gfam-1",  "gfam-2",  "gfam-3"};
    return names;
}

inline std::string builtin_description(const std::string& name) {
    if (name == "x2") return "7 hyperplanes, five triple points (X2 matroid)";
    if (name == "x3") return "6 hyperplanes, three triple points (X3 matroid)";
    int k = 0;
    if (detail::parse_suffix(name, "braid", k)) return "braid arrangement, graphic of K" + std::to_string(k);
    if (detail::parse_suffix(name, "pencil", k)) return "pencil of " + std::to_string(k) + " lines";
    if (name == "wheel") return "graphic arrangement of the wheel W4";
    if (detail::parse_suffix(name, "gfam-", k)) return "graphic arrangement of W4 coned " + std::to_string(k) + " times";
    return {};
}

/// x2, x3, braidL (L >= 3), pencilM (M >= 2), wheel, gfam-i (i >= 0).
inline Builtin builtin(const std::string& name) {
    int k = 0;
    auto graphic = [&](Graph g) {
        Builtin b{graphic_arrangement(g), g};
        b.arrangement.label = name;
        return b;
    };
    if (name == "x2") return {x2_arrangement(), std::nullopt};
    if (name == "x3") return {x3_arrangement(), std::nullopt};
    if (name == "wheel") return graphic(wheel_graph());
    if (detail::parse_suffix(name, "braid", k) && k >= 3 && k <= 12) return graphic(complete_graph(k));
    if (detail::parse_suffix(name, "pencil", k) && k >= 2 && k <= 64) return {pencil_arrangement(k), std::nullopt};
    if (detail::parse_suffix(name, "gfam-", k) && k <= 50) return graphic(family_g_i(k));
    throw std::invalid_argument("unknown builtin: " + name);
}

}  // namespace arrlie
