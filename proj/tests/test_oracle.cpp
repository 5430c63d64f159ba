#include <gtest/gtest.h>

#include "arrlie/builtins.hpp"
#include "arrlie/oracle.hpp"

using namespace arrlie;
using namespace arrlie::oracle;

TEST(Oracle, PolynomialRing) {
    EXPECT_EQ(quadratic_algebra_dims(pencil_arrangement(2), 5), (std::vector<long long>{1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(holonomy_dims_from_hilbert({1, 3, 6, 10, 15}), (std::vector<long long>{3, 0, 0, 0}));
}

TEST(Oracle, FreeAlgebra) {
    for (long long n = 1; n <= 4; ++n) {
        std::vector<long long> dims{1};
        for (int r = 1; r <= 7; ++r) dims.push_back(dims.back() * n);
        auto h = holonomy_dims_from_hilbert(dims);
        for (int r = 1; r <= 7; ++r) EXPECT_EQ(h[r - 1], witt_rank(static_cast<int>(n), r));
    }
}

TEST(Oracle, PencilOfThree) {
    auto dims = quadratic_algebra_dims(pencil_arrangement(3), 4);
    EXPECT_EQ(dims, (std::vector<long long>{1, 3, 7, 15, 31}));
    EXPECT_EQ(holonomy_dims_from_hilbert(dims), (std::vector<long long>{3, 1, 2, 3}));
}

TEST(Oracle, MatchesHolonomy) {
    for (const char* name : {"braid3", "braid4", "x3", "x2", "pencil5"}) {
        auto a = builtin(name).arrangement;
        auto h = holonomy_dims_from_hilbert(quadratic_algebra_dims(a, 4));
        Holonomy hol(a, 4);
        for (int r = 1; r <= 4; ++r) EXPECT_EQ(h[r - 1], hol.rank_q(r)) << name << " " << r;
    }
}

TEST(Oracle, Submultiplicative) {
    auto dims = quadratic_algebra_dims(builtin("braid4").arrangement, 4);
    for (int r = 1; r <= 4; ++r)
        for (int s = 1; r + s <= 4; ++s) EXPECT_LE(dims[r + s], dims[r] * dims[s]);
}

TEST(Oracle, Errors) {
    EXPECT_THROW(holonomy_dims_from_hilbert({2, 1}), std::invalid_argument);
    EXPECT_THROW(holonomy_dims_from_hilbert({1, 2, 1}), std::domain_error);
    EXPECT_THROW(quadratic_algebra_dims(x2_arrangement(), 4, Limits{1000}), ResourceLimitError);
}
