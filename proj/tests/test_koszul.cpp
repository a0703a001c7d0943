#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmstab/koszul.hpp"

using namespace gms;

TEST_CASE("model dimensions and differential shape") {
    KoszulModel m({1, 1});
    CHECK(m.r() == 2);
    CHECK(m.m_top() == 4);
    // pieces: m=0 {1}, m=1 {t1,t2}, m=2 {a12, t1 t2}, m=3 {a12 t1, a12 t2},
    // m=4 {a12 t1 t2}
    CHECK(m.dim(0) == 1);
    CHECK(m.dim(1) == 2);
    CHECK(m.dim(2) == 2);
    CHECK(m.dim(3) == 2);
    CHECK(m.dim(4) == 1);
    CHECK(m.dim(5) == 0);
    for (int k = 0; k < 4; ++k) {
        CHECK(m.differential(k).nrows() == m.dim(k + 1));
        CHECK(m.differential(k).ncols() == m.dim(k));
    }
}

TEST_CASE("single weight gives a circle") {
    for (long k : {1L, 2L, 7L}) {
        GradedBettiTable b = koszul_cohomology({k});
        CHECK(b == GradedBettiTable({1, 1}));
    }
}

TEST_CASE("empty weight tuple gives a point") {
    CHECK(koszul_cohomology({}) == GradedBettiTable({1}));
}

TEST_CASE("two unit weights") {
    GradedBettiTable b = koszul_cohomology({1, 1});
    CHECK(b == GradedBettiTable({1, 1, 0, 1, 1}));
    // the swap symmetry acts trivially on cohomology here
    GradedBettiTable inv =
        koszul_cohomology({1, 1}, FieldSpec::rationals(), SubgroupSpec::full(2));
    CHECK(inv == GradedBettiTable({1, 1, 0, 1, 1}));
}

TEST_CASE("euler characteristic vanishes whenever some weight is present") {
    for (std::vector<long> lambda : {std::vector<long>{1}, {1, 1}, {2, 3}, {1, 1, 1}}) {
        GradedBettiTable b = koszul_cohomology(lambda);
        long chi = 0;
        for (int m2 = 0; m2 <= b.top(); ++m2) chi += (m2 % 2 ? -1 : 1) * b.dim(m2);
        CHECK(chi == 0);
        CHECK(b.dim(0) == 1);  // connected
    }
}

TEST_CASE("invariant betti are bounded by plain betti") {
    std::vector<long> lambda{2, 2, 3};
    GradedBettiTable plain = koszul_cohomology(lambda);
    GradedBettiTable inv =
        koszul_cohomology(lambda, FieldSpec::rationals(), lambda_group(lambda));
    for (int m = 0; m <= plain.top(); ++m) {
        CHECK(inv.dim(m) <= plain.dim(m));
        CHECK(inv.dim(m) >= 0);
    }
    CHECK(inv.dim(0) == 1);
}

TEST_CASE("betti range matches the full computation") {
    std::vector<long> lambda{1, 1, 1};
    GradedBettiTable full = koszul_cohomology(lambda);
    std::vector<int> ranged =
        koszul_betti_range(lambda, 3, FieldSpec::rationals(), std::nullopt);
    REQUIRE(ranged.size() == 4);
    for (int m = 0; m <= 3; ++m) CHECK(ranged[m] == full.dim(m));
}

TEST_CASE("weight symmetry group") {
    SubgroupSpec g = lambda_group({3, 1, 3, 1, 2});
    CHECK(g.n == 5);
    CHECK(g.order() == 4);  // swap the 3s, swap the 1s
    CHECK(g.contains(Perm({2, 1, 0, 3, 4})));
    CHECK_FALSE(g.contains(Perm::transposition(5, 0, 1)));
    CHECK(extend_weights({2, 3}, 1, 3) == std::vector<long>{2, 3, 1, 1, 1});
}

TEST_CASE("positive characteristic is refused") {
    CHECK_THROWS_AS(koszul_cohomology({1, 1}, FieldSpec::prime(2), std::nullopt),
                    std::invalid_argument);
}

TEST_CASE("differential squares to zero on larger models") {
    KoszulModel m({1, 2, 3});
    for (int k = 0; k + 2 <= m.m_top(); ++k) {
        QMat dd = m.differential(k + 1) * m.differential(k);
        CHECK(dd.is_zero());
    }
}

TEST_CASE("action commutes with the differential for equal weights") {
    KoszulModel m({1, 1, 1});
    Perm s({1, 2, 0});
    for (int k = 0; k + 1 <= m.m_top(); ++k) {
        QMat lhs = m.action(s, k + 1) * m.differential(k);
        QMat rhs = m.differential(k) * m.action(s, k);
        CHECK(lhs == rhs);
    }
}
