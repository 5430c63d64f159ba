#include <gtest/gtest.h>

#include "arrlie/builtins.hpp"
#include "arrlie/decomp.hpp"

using namespace arrlie;

TEST(FalkBound, Values) {
    EXPECT_EQ(falk_lower_bound(builtin("braid4").arrangement, 3), 8);
    EXPECT_EQ(falk_lower_bound(x2_arrangement(), 3), 10);
    for (const auto& name : builtin_names()) {
        auto a = builtin(name).arrangement;
        EXPECT_EQ(falk_lower_bound(a, 2), Holonomy(a, 2).rank_q(2)) << name;
    }
}

TEST(KDecomposable, Examples) {
    auto b4 = builtin("braid4").arrangement;
    EXPECT_FALSE(is_k_decomposable(b4, 3, Field::rationals()));
    for (long long p : {2, 3, 5, 7}) EXPECT_FALSE(is_k_decomposable(b4, 3, Field::prime(p)));
    EXPECT_TRUE(is_k_decomposable(x3_arrangement(), 3, Field::rationals()));
    for (int m = 2; m <= 6; ++m)
        for (int r = 2; r <= 5; ++r)
            for (long long p : {0, 2, 3}) EXPECT_TRUE(is_k_decomposable(pencil_arrangement(m), r, {p}));
}

TEST(KDecomposable, FieldValidation) {
    EXPECT_THROW(Field::prime(4), std::invalid_argument);
    EXPECT_THROW(Field::prime(1), std::invalid_argument);
    EXPECT_EQ(Field::prime(13).characteristic, 13);
}

TEST(Decomposable, Reports) {
    auto x2 = is_decomposable(x2_arrangement());
    EXPECT_TRUE(x2.overall);
    EXPECT_EQ(x2.rank_q, 10);
    EXPECT_EQ(x2.falk_bound, 10);
    EXPECT_TRUE(x2.bad_primes.empty());
    EXPECT_TRUE(is_decomposable(x3_arrangement()).overall);
    for (int l = 4; l <= 6; ++l) {
        auto rep = is_decomposable(builtin("braid" + std::to_string(l)).arrangement);
        EXPECT_FALSE(rep.overall) << l;
        EXPECT_GT(rep.rank_q, rep.falk_bound);
    }
    EXPECT_TRUE(is_decomposable(builtin("braid3").arrangement).overall);
}

TEST(Decomposable, ReportInvariant) {
    for (const auto& name : builtin_names()) {
        auto rep = is_decomposable(builtin(name).arrangement);
        EXPECT_GE(rep.rank_q, rep.falk_bound);
        EXPECT_EQ(rep.overall, rep.rank_q == rep.falk_bound && rep.bad_primes.empty());
        EXPECT_EQ(rep.verdict(Field::rationals()), rep.rational_equal);
    }
}

TEST(Decomposable, DegreeThreeImpliesDegreeFour) {
    for (const auto& name : builtin_names()) {
        auto a = builtin(name).arrangement;
        Holonomy h(a, 4);
        for (long long p : {0, 2, 3, 5})
            if (is_k_decomposable(h, a, 3, {p})) EXPECT_TRUE(is_k_decomposable(h, a, 4, {p})) << name << " p=" << p;
    }
}

TEST(Decomposable, AllDegreesForDecomposable) {
    for (const auto& name : builtin_names()) {
        auto a = builtin(name).arrangement;
        if (!is_decomposable(a).overall) continue;
        Holonomy h(a, 5);
        for (int r = 2; r <= 5; ++r) {
            EXPECT_EQ(h.rank_q(r), falk_lower_bound(a, r)) << name << " " << r;
            EXPECT_TRUE(h.piece(r).torsion.empty());
        }
    }
}

TEST(Decomposable, PrimeDivisors) {
    EXPECT_EQ(prime_divisors(360), (std::vector<Integer>{2, 3, 5}));
    EXPECT_EQ(prime_divisors(97), (std::vector<Integer>{97}));
    GradedPiece p{3, 4, {Integer(2), Integer(6)}};
    EXPECT_EQ(bad_primes(p), (std::vector<Integer>{2, 3}));
    EXPECT_EQ(p.dim_mod(2), 6);
    EXPECT_EQ(p.dim_mod(3), 5);
    EXPECT_EQ(p.dim_mod(5), 4);
}

TEST(Heredity, X2Deletions) {
    std::vector<HeredityCase> checked;
    auto failures = heredity_suite(x2_arrangement(), 20, 1, &checked);
    EXPECT_TRUE(failures.empty());
    EXPECT_EQ(checked.size(), 7u + 20u);
    for (int m = 3; m <= 6; ++m) EXPECT_TRUE(heredity_suite(pencil_arrangement(m), 5).empty());
}

TEST(Heredity, NonDecomposableHasFailures) {
    // deletions of braid5 still contain a K4, so the suite reports them
    std::vector<HeredityCase> checked;
    auto failures = heredity_suite(builtin("braid5").arrangement, 5, 2, &checked);
    EXPECT_FALSE(failures.empty());
}
