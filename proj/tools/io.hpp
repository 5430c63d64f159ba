#pragma once

// JSON input documents for the command-line tool.
//
// Exactly one of
//   {"normals": [[1,0,0], [0,1,0], ...]}
//   {"flats": {"n": 6, "multi_flats": [[0,1,2], ...]}}      size-2 flats implied
//   {"graph": {"vertices": 4, "edges": [[1,2], [2,3], ...]}}  1-based vertices
//   {"builtin": "x2"}
// Other keys are ignored. An optional "label" names the arrangement.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "arrlie/builtins.hpp"
#include "arrlie/graphic.hpp"
#include "arrlie/lattice.hpp"

namespace arrlie::io {

using nlohmann::json;

class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline Integer to_integer(const json& v) {
    if (v.is_number_integer()) return Integer(v.get<long long>());
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        const std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos) return Integer(s);
    }
    throw InputError("expected an integer, got " + v.dump());
}

inline int to_index(const json& v, const char* what) {
    if (!v.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    const long long x = v.get<long long>();
    if (x < 0 || x > 1'000'000) throw InputError(std::string(what) + " out of range");
    return static_cast<int>(x);
}

inline Graph graph_from_json(const json& g) {
    if (!g.is_object() || !g.contains("vertices") || !g.contains("edges"))
        throw InputError("graph needs \"vertices\" and \"edges\"");
    const int n = to_index(g["vertices"], "graph.vertices");
    if (!g["edges"].is_array()) throw InputError("graph.edges must be a list");
    std::vector<Edge> edges;
    for (const auto& e : g["edges"]) {
        if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair");
        const int u = to_index(e[0], "edge endpoint"), v = to_index(e[1], "edge endpoint");
        if (u < 1 || v < 1 || u > n || v > n) throw InputError("edge endpoint out of range 1..vertices");
        edges.emplace_back(u - 1, v - 1);
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw InputError(ex.what());
    }
}

inline json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u + 1, v + 1});
    return {{"graph", {{"vertices", g.vertices}, {"edges", edges}}}};
}

/// Flats variant of the input document; re-reading it gives the same flats.
inline json flats_to_json(const Arrangement& a) {
    json multi = json::array();
    for (const auto& f : a.flats)
        if (f.members.size() >= 3) multi.push_back(f.members);
    json doc = {{"flats", {{"n", a.size()}, {"multi_flats", multi}}}};
    if (!a.label.empty()) doc["label"] = a.label;
    return doc;
}

inline Builtin from_json(const json& doc) {
    if (!doc.is_object()) throw InputError("input document must be a JSON object");
    int variants = 0;
    for (const char* k : {"normals", "flats", "graph", "builtin"}) variants += doc.contains(k) ? 1 : 0;
    if (variants != 1) throw InputError("input needs exactly one of normals, flats, graph, builtin");
    const std::string label = doc.contains("label") && doc["label"].is_string() ? doc["label"].get<std::string>() : "";
    try {
        if (doc.contains("builtin")) {
            if (!doc["builtin"].is_string()) throw InputError("builtin must be a string");
            return builtin(doc["builtin"].get<std::string>());
        }
        if (doc.contains("graph")) {
            Graph g = graph_from_json(doc["graph"]);
            Builtin b{graphic_arrangement(g), g};
            b.arrangement.label = label;
            return b;
        }
        if (doc.contains("normals")) {
            const json& ns = doc["normals"];
            if (!ns.is_array() || ns.empty()) throw InputError("normals must be a nonempty list");
            std::vector<IntVector> normals;
            for (const auto& n : ns) {
                if (!n.is_array()) throw InputError("each normal must be a list of integers");
                IntVector v;
                for (const auto& x : n) v.push_back(to_integer(x));
                normals.push_back(std::move(v));
            }
            return {arrangement_from_normals(normals, label), std::nullopt};
        }
        const json& f = doc["flats"];
        if (!f.is_object() || !f.contains("n")) throw InputError("flats needs \"n\"");
        const int n = to_index(f["n"], "flats.n");
        std::vector<std::vector<int>> multi;
        if (f.contains("multi_flats")) {
            if (!f["multi_flats"].is_array()) throw InputError("multi_flats must be a list");
            for (const auto& m : f["multi_flats"]) {
                if (!m.is_array()) throw InputError("each flat must be a list of ids");
                std::vector<int> ids;
                for (const auto& x : m) ids.push_back(to_index(x, "flat member"));
                multi.push_back(std::move(ids));
            }
        }
        return {arrangement_from_flats(n, multi, label), std::nullopt};
    } catch (const InputError&) {
        throw;
    } catch (const std::invalid_argument& ex) {
        throw InputError(ex.what());
    }
}

inline json parse_json(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& ex) {
        throw InputError(source + ": " + ex.what());
    }
}

/// "builtin:NAME", "-" for standard input, or a file path.
inline Builtin read_input(const std::string& spec, std::istream& stdin_stream = std::cin) {
    if (spec.rfind("builtin:", 0) == 0) {
        try {
            return builtin(spec.substr(8));
        } catch (const std::invalid_argument& ex) {
            throw InputError(ex.what());
        }
    }
    std::string text;
    if (spec == "-") {
        text.assign(std::istreambuf_iterator<char>(stdin_stream), {});
    } else {
        std::ifstream in(spec);
        if (!in) throw InputError("cannot open " + spec);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return from_json(parse_json(text, spec));
}

}  // namespace arrlie::io
