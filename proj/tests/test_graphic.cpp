#include <random>

#include <gtest/gtest.h>

#include "arrlie/builtins.hpp"
#include "arrlie/decomp.hpp"
#include "arrlie/graphic.hpp"

using namespace arrlie;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph(n, e);
}

long long brute_cliques(const Graph& g, int k) {
    const auto adj = g.adjacency();
    long long count = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.vertices); ++s) {
        if (std::popcount(s) != k) continue;
        bool clique = true;
        for (int v = 0; v < g.vertices && clique; ++v)
            if (s >> v & 1) clique = ((adj[v] | std::uint64_t{1} << v) & s) == s;
        count += clique ? 1 : 0;
    }
    return count;
}

}  // namespace

TEST(GraphicArrangement, Census) {
    auto k3 = graphic_arrangement(complete_graph(3));
    ASSERT_EQ(k3.flats.size(), 1u);
    EXPECT_EQ(k3.flats[0].mu, 2);
    auto k4 = graphic_arrangement(complete_graph(4));
    int triples = 0, doubles = 0;
    for (const auto& f : k4.flats) (f.mu == 2 ? triples : doubles)++;
    EXPECT_EQ(triples, 4);
    EXPECT_EQ(doubles, 3);
    auto w = graphic_arrangement(wheel_graph());
    triples = doubles = 0;
    for (const auto& f : w.flats) (f.mu == 2 ? triples : doubles)++;
    EXPECT_EQ(triples, 4);
    EXPECT_EQ(doubles, 16);
    EXPECT_EQ(w.b1(), 8);
    EXPECT_THROW(graphic_arrangement(Graph(3, {})), std::invalid_argument);
}

TEST(GraphicArrangement, FlatsMatchNormals) {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(rng, 3 + trial % 6, 0.5);
        if (g.edges.empty()) continue;
        auto a = graphic_arrangement(g);
        std::vector<IntVector> normals;
        for (const auto& h : a.hyperplanes) normals.push_back(*h.normal);
        EXPECT_EQ(compute_rank2_flats(normals), a.flats);
    }
}

TEST(Kappa, Values) {
    EXPECT_EQ(kappa(complete_graph(4), 3), 1);
    EXPECT_EQ(kappa(complete_graph(5), 2), 10);
    auto w = wheel_graph();
    EXPECT_EQ(kappa(w, 0), 5);
    EXPECT_EQ(kappa(w, 1), 8);
    EXPECT_EQ(kappa(w, 2), 4);
    EXPECT_EQ(kappa(w, 3), 0);
    std::mt19937 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(rng, 7, 0.6);
        for (int s = 2; s <= 4; ++s) EXPECT_EQ(kappa(g, s), brute_cliques(g, s + 1));
    }
}

TEST(Decomposable, GraphCriterion) {
    EXPECT_FALSE(is_decomposable_graph(complete_graph(4)));
    EXPECT_TRUE(is_decomposable_graph(wheel_graph()));
    EXPECT_TRUE(is_decomposable_graph(cycle_graph(6)));
    std::mt19937 rng(8);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(rng, 6, 0.55);
        if (g.edges.empty()) continue;
        EXPECT_EQ(is_decomposable_graph(g), is_decomposable(graphic_arrangement(g)).overall);
    }
}

TEST(Cone, KappaUpdates) {
    auto c = cone_edge(complete_graph(3), {0, 1});
    EXPECT_EQ(c.vertices, 4);
    EXPECT_EQ(c.edges.size(), 5u);
    EXPECT_EQ(kappa(c, 2), 2);
    EXPECT_THROW(cone_edge(path_graph(3), {0, 2}), std::invalid_argument);
    std::mt19937 rng(50);
    int done = 0;
    while (done < 50) {
        Graph g = random_graph(rng, 4 + done % 4, 0.5);
        if (g.edges.empty() || kappa(g, 3) != 0) continue;
        Edge e = g.edges[rng() % g.edges.size()];
        Graph h = cone_edge(g, e);
        EXPECT_EQ(kappa(h, 1), kappa(g, 1) + 2);
        EXPECT_EQ(brute_cliques(h, 3), kappa(g, 2) + 1);
        EXPECT_EQ(brute_cliques(h, 4), 0);
        ++done;
    }
}

TEST(Family, WheelCones) {
    for (int i = 0; i <= 5; ++i) {
        Graph g = family_g_i(i);
        EXPECT_EQ(kappa(g, 1) - 2 * kappa(g, 2), 0);
        EXPECT_EQ(kappa(g, 3), 0);
        EXPECT_TRUE(nonhypersolvable_cert(g));
        EXPECT_EQ(graphic_lcs_series(g, 6), PowerSeries::binomial_term(-2, 1, 6).pow(i + 4));
    }
    EXPECT_EQ(family_g_i(0), wheel_graph());
    EXPECT_EQ(kappa(family_g_i(2), 1), 12);
    EXPECT_EQ(kappa(family_g_i(2), 2), 6);
    // coned edge stays CD
    EXPECT_EQ(family_g_i(2).edges.back(), (Edge{3, 6}));
}

TEST(Series, GraphicMatchesClosedForm) {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(rng, 6, 0.5);
        if (g.edges.empty() || kappa(g, 3) != 0) continue;
        EXPECT_EQ(graphic_lcs_series(g, 6), lcs_closed_form(graphic_arrangement(g), 6));
    }
    EXPECT_THROW(graphic_lcs_series(complete_graph(4), 4), std::invalid_argument);
}

TEST(Chordal, Basics) {
    for (int n = 1; n <= 6; ++n) EXPECT_TRUE(is_chordal(complete_graph(n)));
    EXPECT_FALSE(is_chordal(cycle_graph(4)));
    EXPECT_FALSE(is_chordal(wheel_graph()));
    EXPECT_TRUE(is_chordal(path_graph(5)));
    EXPECT_TRUE(is_chordal(cone_edge(complete_graph(3), {0, 1})));
}

TEST(Chordal, ConsistentWithCertificate) {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(rng, 6, 0.5);
        if (is_chordal(g) && kappa(g, 3) == 0) {
            EXPECT_FALSE(nonhypersolvable_cert(g));
        }
    }
    EXPECT_FALSE(nonhypersolvable_cert(complete_graph(3)));
    EXPECT_FALSE(nonhypersolvable_cert(cycle_graph(4)));
    EXPECT_TRUE(nonhypersolvable_cert(wheel_graph()));
}

TEST(Graph, Validation) {
    EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
}
