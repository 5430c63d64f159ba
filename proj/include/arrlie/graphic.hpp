#pragma once

// Graphic arrangements: one hyperplane z_i - z_j = 0 per edge.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arrlie/lattice.hpp"
#include "arrlie/series.hpp"

namespace arrlie {

using Edge = std::pair<int, int>;

/// Simple graph on vertices 0..vertices-1 (the JSON format is 1-based).
/// Edges are stored with first < second, sorted.
struct Graph {
    int vertices = 0;
    std::vector<Edge> edges;

    Graph() = default;
    Graph(int n, std::vector<Edge> e) : vertices(n), edges(std::move(e)) {
        if (n < 0 || n > 64) throw std::invalid_argument("Graph: vertex count must be in [0, 64]");
        for (auto& [u, v] : edges) {
            if (u == v) throw std::invalid_argument("Graph: loop");
            if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("Graph: vertex out of range");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("Graph: repeated edge");
    }

    int edge_index(Edge e) const {
        if (e.first > e.second) std::swap(e.first, e.second);
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        return it != edges.end() && *it == e ? static_cast<int>(it - edges.begin()) : -1;
    }
    std::vector<std::uint64_t> adjacency() const {
        std::vector<std::uint64_t> adj(vertices, 0);
        for (const auto& [u, v] : edges) {
            adj[u] |= std::uint64_t{1} << v;
            adj[v] |= std::uint64_t{1} << u;
        }
        return adj;
    }
    bool operator==(const Graph&) const = default;
};

inline Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

inline Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

/// The wheel W4: 4-cycle A-B-E-D with hub C, vertices A..E = 0..4.
inline Graph wheel_graph() {
    return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

/// Triangles as sorted vertex triples.
inline std::vector<std::vector<int>> triangles(const Graph& g) {
    const auto adj = g.adjacency();
    std::vector<std::vector<int>> out;
    for (const auto& [u, v] : g.edges) {
        std::uint64_t common = adj[u] & adj[v];
        common &= ~((std::uint64_t{2} << v) - 1);  // w > v
        while (common) {
            const int w = std::countr_zero(common);
            common &= common - 1;
            out.push_back({u, v, w});
        }
    }
    return out;
}

/// Hyperplane k is edge k; each triangle is a flat of size 3.
inline Arrangement graphic_arrangement(const Graph& g) {
    if (g.edges.empty()) throw std::invalid_argument("graphic_arrangement: graph has no edges");
    std::vector<std::vector<int>> multi;
    for (const auto& t : triangles(g))
        multi.push_back({g.edge_index({t[0], t[1]}), g.edge_index({t[0], t[2]}), g.edge_index({t[1], t[2]})});
    Arrangement a = arrangement_from_flats(static_cast<int>(g.edges.size()), multi, "graphic");
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        IntVector n(g.vertices, 0);
        n[g.edges[k].first] = 1;
        n[g.edges[k].second] = -1;
        a.hyperplanes[k].normal = std::move(n);
    }
    validate(a);
    return a;
}

/// Number of complete subgraphs on s + 1 vertices.
inline long long kappa(const Graph& g, int s) {
    if (s < 0) throw std::invalid_argument("kappa: s must be >= 0");
    if (s == 0) return g.vertices;
    if (s == 1) return static_cast<long long>(g.edges.size());
    const auto adj = g.adjacency();
    long long count = 0;
    // cliques listed with increasing vertices; cand = common later neighbours
    auto grow = [&](auto&& self, std::uint64_t cand, int size) -> void {
        if (size == s + 1) {
            ++count;
            return;
        }
        while (cand) {
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            self(self, cand & adj[v], size + 1);
        }
    };
    for (int v = 0; v < g.vertices; ++v) {
        const std::uint64_t later = v + 1 >= 64 ? 0 : adj[v] & ~((std::uint64_t{2} << v) - 1);
        grow(grow, later, 1);
    }
    return count;
}

inline bool is_decomposable_graph(const Graph& g) { return kappa(g, 3) == 0; }

/// Adds vertex w = vertices joined to both ends of e.
inline Graph cone_edge(const Graph& g, Edge e) {
    if (g.edge_index(e) < 0) throw std::invalid_argument("cone_edge: edge not in graph");
    std::vector<Edge> edges = g.edges;
    const int w = g.vertices;
    edges.emplace_back(e.first, w);
    edges.emplace_back(e.second, w);
    return Graph(g.vertices + 1, std::move(edges));
}

/// G^0 = W4; G^i cones edge CD, the smallest edge of each new triangle
/// {C, D, w}, which stays CD since w is the largest vertex.
inline Graph family_g_i(int i) {
    if (i < 0) throw std::invalid_argument("family_g_i: i must be >= 0");
    Graph g = wheel_graph();
    Edge e{2, 3};
    for (int k = 0; k < i; ++k) {
        g = cone_edge(g, e);
        const int w = g.vertices - 1;
        std::vector<Edge> tri{{e.first, e.second}, {e.first, w}, {e.second, w}};
        e = *std::min_element(tri.begin(), tri.end());
    }
    return g;
}

/// (1 - t)^{kappa_1 - 2 kappa_2} (1 - 2t)^{kappa_2}, truncated at r_max.
inline PowerSeries graphic_lcs_series(const Graph& g, int r_max) {
    if (kappa(g, 3) != 0) throw std::invalid_argument("graphic_lcs_series: graph contains K4");
    const long long k1 = kappa(g, 1), k2 = kappa(g, 2);
    return PowerSeries::binomial_term(-1, 1, r_max).pow(k1 - 2 * k2) * PowerSeries::binomial_term(-2, 1, r_max).pow(k2);
}

inline bool nonhypersolvable_cert(const Graph& g) { return kappa(g, 1) <= 2 * kappa(g, 2) && kappa(g, 3) == 0; }

/// Maximum cardinality search, then a perfect elimination ordering check.
inline bool is_chordal(const Graph& g) {
    const int n = g.vertices;
    const auto adj = g.adjacency();
    std::vector<int> weight(n, 0), order;  // order: visit order
    std::vector<int> pos(n, -1);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (pos[v] < 0 && (best < 0 || weight[v] > weight[best])) best = v;
        pos[best] = step;
        order.push_back(best);
        for (int u = 0; u < n; ++u)
            if (pos[u] < 0 && (adj[best] >> u & 1)) ++weight[u];
    }
    // Reverse visit order is a perfect elimination ordering iff chordal: the
    // earlier-visited neighbours of each v must form a clique.
    for (int v : order) {
        std::uint64_t earlier = 0;
        int parent = -1;
        for (int u = 0; u < n; ++u)
            if ((adj[v] >> u & 1) && pos[u] < pos[v]) {
                earlier |= std::uint64_t{1} << u;
                if (parent < 0 || pos[u] > pos[parent]) parent = u;
            }
        if (parent < 0) continue;
        const std::uint64_t rest = earlier & ~(std::uint64_t{1} << parent);
        if ((rest & ~adj[parent]) != 0) return false;
    }
    return true;
}

}  // namespace arrlie
