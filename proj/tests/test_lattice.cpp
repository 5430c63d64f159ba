#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "arrlie/builtins.hpp"
#include "arrlie/lattice.hpp"

using namespace arrlie;

namespace {

std::vector<IntVector> braid_normals(int n) {
    std::vector<IntVector> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            IntVector v(n, 0);
            v[i] = 1;
            v[j] = -1;
            out.push_back(v);
        }
    return out;
}

std::vector<int> sizes(const Arrangement& a) {
    std::vector<int> s;
    for (const auto& f : a.flats) s.push_back(static_cast<int>(f.members.size()));
    return s;
}

// Pairwise brute force: i, j, k share a flat iff the three normals have rank 2.
bool rank_two(const IntVector& a, const IntVector& b, const IntVector& c) {
    const std::size_t n = a.size();
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
            for (std::size_t r = q + 1; r < n; ++r) {
                Integer det = a[p] * (b[q] * c[r] - b[r] * c[q]) - a[q] * (b[p] * c[r] - b[r] * c[p]) +
                              a[r] * (b[p] * c[q] - b[q] * c[p]);
                if (det != 0) return false;
            }
    return true;
}

}  // namespace

TEST(Flats, GenericTriple) {
    auto a = arrangement_from_normals({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    EXPECT_EQ(sizes(a), (std::vector<int>{2, 2, 2}));
    EXPECT_EQ(a.b2(), 3);
}

TEST(Flats, CentralPencil) {
    auto a = arrangement_from_normals({{1, 0}, {0, 1}, {1, 1}});
    ASSERT_EQ(a.flats.size(), 1u);
    EXPECT_EQ(a.flats[0].members, (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(a.flats[0].mu, 2);
}

TEST(Flats, BraidK4) {
    auto a = arrangement_from_normals(braid_normals(4));
    EXPECT_EQ(sizes(a), (std::vector<int>{3, 3, 3, 3, 2, 2, 2}));
}

TEST(Flats, Errors) {
    EXPECT_THROW(arrangement_from_normals({{1, 0}, {0, 0}}), ArrangementError);
    EXPECT_THROW(arrangement_from_normals({{1, 2}, {-2, -4}}), ArrangementError);
    EXPECT_THROW(arrangement_from_normals({{1, 2}, {1, 2, 3}}), ArrangementError);
}

TEST(Flats, NormalsStoredPrimitive) {
    auto a = arrangement_from_normals({{-2, 4, 0}, {0, 3, 0}, {0, 0, 1}});
    EXPECT_EQ(*a.hyperplanes[0].normal, (IntVector{1, -2, 0}));
    EXPECT_EQ(*a.hyperplanes[1].normal, (IntVector{0, 1, 0}));
}

TEST(Flats, InvariantUnderScalingAndPermutation) {
    std::mt19937 rng(5);
    auto normals = braid_normals(5);
    auto base = arrangement_from_normals(normals);
    std::vector<int> perm(normals.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<IntVector> permuted;
    for (int p : perm) {
        IntVector v = normals[p];
        for (auto& x : v) x *= -3;
        permuted.push_back(v);
    }
    auto other = arrangement_from_normals(permuted);
    std::vector<std::vector<int>> mapped;
    for (const auto& f : other.flats) {
        std::vector<int> m;
        for (int x : f.members) m.push_back(perm[x]);
        std::sort(m.begin(), m.end());
        mapped.push_back(m);
    }
    std::vector<std::vector<int>> expect;
    for (const auto& f : base.flats) expect.push_back(f.members);
    std::sort(mapped.begin(), mapped.end());
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(mapped, expect);
}

TEST(Flats, PairCountIdentity) {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<IntVector> normals;
        while (normals.size() < 7) {
            IntVector v{d(rng), d(rng), d(rng)};
            if (v == IntVector{0, 0, 0}) continue;
            if (std::any_of(normals.begin(), normals.end(), [&](const IntVector& w) { return !pair_span_key(v, w); }))
                continue;
            normals.push_back(v);
        }
        auto a = arrangement_from_normals(normals);
        long long pairs = 0;
        for (const auto& f : a.flats) pairs += static_cast<long long>(f.members.size()) * (f.members.size() - 1) / 2;
        EXPECT_EQ(pairs, 21);
        // brute force triples
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j)
                for (int k = j + 1; k < 7; ++k) {
                    const int fij = a.flat_of(i, j);
                    const bool same = fij == a.flat_of(i, k);
                    EXPECT_EQ(same, rank_two(normals[i], normals[j], normals[k]));
                }
    }
}

TEST(Validate, DetectsProblems) {
    auto a = arrangement_from_flats(3, {{0, 1, 2}});
    EXPECT_TRUE(is_valid(a));
    auto twice = a;
    twice.flats.push_back(make_flat({0, 1}));
    EXPECT_FALSE(is_valid(twice));
    auto missing = arrangement_from_flats(3, {});
    missing.flats.pop_back();
    EXPECT_FALSE(is_valid(missing));
    auto bad_mu = a;
    bad_mu.flats[0].mu = 1;
    EXPECT_FALSE(is_valid(bad_mu));
    auto wrong_normals = arrangement_from_normals({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    wrong_normals.flats = a.flats;
    EXPECT_FALSE(is_valid(wrong_normals));
    EXPECT_THROW(arrangement_from_flats(4, {{0, 1, 2}, {0, 1, 3}}), ArrangementError);
}

TEST(Localization, PencilsAndDoubles) {
    auto b = arrangement_from_normals(braid_normals(4));
    auto loc = localization(b, b.flats[0]);
    ASSERT_EQ(loc.flats.size(), 1u);
    EXPECT_EQ(loc.flats[0].mu, 2);
    auto dbl = localization(b, b.flats.back());
    EXPECT_EQ(dbl.size(), 2);
    EXPECT_EQ(dbl.flats[0].mu, 1);
    for (const auto& x : x2_arrangement().flats)
        if (x.members.size() == 3) EXPECT_EQ(localization(x2_arrangement(), x).flats.size(), 1u);
    EXPECT_THROW(localization(b, make_flat({0, 1})), ArrangementError);
}

TEST(Restrict, IdentityAndComposition) {
    auto x2 = x2_arrangement();
    auto all = restrict(x2, {0, 1, 2, 3, 4, 5, 6});
    EXPECT_EQ(all.flats, x2.flats);
    auto b = restrict(x2, {0, 1, 3, 4, 5, 6});
    auto c = restrict(b, {0, 2, 3});         // ids 0, 3, 4 of x2
    EXPECT_EQ(restrict(x2, {0, 3, 4}).flats, c.flats);
    EXPECT_THROW(restrict(x2, {9}), ArrangementError);
    EXPECT_THROW(restrict(x2, {}), ArrangementError);
}

TEST(Restrict, DropCenterMatchesNormals) {
    // drop the centre point of X2 and recompute from the remaining normals
    auto x2 = x2_arrangement();
    std::vector<int> keep{0, 1, 3, 4, 5, 6};
    std::vector<IntVector> normals;
    for (int k : keep) normals.push_back(*x2.hyperplanes[k].normal);
    EXPECT_EQ(restrict(x2, keep).flats, arrangement_from_normals(normals).flats);
}

TEST(Figures, TranscribedFlats) {
    std::vector<std::vector<int>> x2_multi, x3_multi;
    for (const auto& f : x2_arrangement().flats)
        if (f.mu == 2) x2_multi.push_back(f.members);
    for (const auto& f : x3_arrangement().flats)
        if (f.mu == 2) x3_multi.push_back(f.members);
    EXPECT_EQ(x2_multi, (std::vector<std::vector<int>>{{0, 1, 4}, {0, 2, 5}, {0, 3, 6}, {1, 2, 3}, {4, 5, 6}}));
    EXPECT_EQ(x3_multi, (std::vector<std::vector<int>>{{0, 1, 2}, {0, 3, 4}, {2, 4, 5}}));
    EXPECT_EQ(x2_arrangement().flats.size(), 5u + 6u);
}
