#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gmstab/linalg.hpp"
#include "gmstab/matrix.hpp"

using namespace gms;

namespace {

ZMat random_zmat(std::mt19937& rng, int nr, int nc) {
    ZMat a(nr, nc);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<int> keep(0, 3);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j)
            if (keep(rng) == 0) a.set(i, j, entry(rng));
    return a;
}

bool is_unimodular(const ZMat& u) {
    mpq_class det = determinant(u.to_qmat());
    return det == 1 || det == -1;
}

}  // namespace

TEST_CASE("smith normal form of a worked example") {
    ZMat a = ZMat::from_dense({{2, 4}, {6, 8}});
    SmithResult s = smith_normal_form(a);
    REQUIRE(s.diagonal.size() == 2);
    CHECK(s.diagonal[0] == 2);
    CHECK(s.diagonal[1] == 4);
    CHECK(s.u * a * s.v == s.d);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
}

TEST_CASE("smith diagonal is a divisibility chain on random matrices") {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<int> size(0, 6);
    for (int trial = 0; trial < 60; ++trial) {
        ZMat a = random_zmat(rng, size(rng), size(rng));
        SmithResult s = smith_normal_form(a);
        CHECK(s.u * a * s.v == s.d);
        CHECK(is_unimodular(s.u));
        CHECK(is_unimodular(s.v));
        for (size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
            CHECK(s.diagonal[i] >= 0);
            if (s.diagonal[i] == 0)
                CHECK(s.diagonal[i + 1] == 0);
            else
                CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
        }
        int nonzero = 0;
        for (const auto& d : s.diagonal)
            if (d != 0) ++nonzero;
        CHECK(nonzero == rank_over(a.to_qmat(), FieldSpec::rationals()));
    }
}

TEST_CASE("rank and kernel over Q and F_p") {
    QMat a(3, 4);
    a.set(0, 0, 1);
    a.set(0, 1, 2);
    a.set(1, 2, 3);
    a.set(2, 0, 2);
    a.set(2, 1, 4);  // row 2 = 2 * row 0
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
        CHECK(rank_over(a, f) == 2);
        QMat k = kernel_basis(a, f);
        CHECK(k.ncols() == 2);
        CHECK((a * k).is_zero());
    }
    // mod 2 the third row still doubles the first, but 2 = 0 kills more
    CHECK(rank_over(a, FieldSpec::prime(2)) == 2);
    CHECK(rank_over(a, FieldSpec::prime(3)) == 1);  // 3 = 0 clears the middle row
}

TEST_CASE("rref reproduces pivots and idempotence") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        ZMat az = random_zmat(rng, 5, 7);
        QMat a = az.to_qmat();
        std::vector<int> pivots;
        QMat r = rref(a, FieldSpec::rationals(), &pivots);
        CHECK(static_cast<int>(pivots.size()) == rank_over(a, FieldSpec::rationals()));
        for (size_t i = 0; i < pivots.size(); ++i) {
            CHECK(r.get(static_cast<int>(i), pivots[i]) == 1);
            for (size_t i2 = 0; i2 < pivots.size(); ++i2)
                if (i2 != i) CHECK(r.get(static_cast<int>(i2), pivots[i]) == 0);
        }
        CHECK(rref(r, FieldSpec::rationals()) == r);
    }
}

TEST_CASE("kernel basis spans the full kernel") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        ZMat az = random_zmat(rng, 4, 6);
        QMat a = az.to_qmat();
        for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(7)}) {
            QMat k = kernel_basis(a, f);
            CHECK(k.ncols() == a.ncols() - rank_over(a, f));
            if (f.is_rationals()) CHECK((a * k).is_zero());
            CHECK(rank_over(k, f) == k.ncols());
        }
    }
}

TEST_CASE("rank_added measures the new column span") {
    QMat b(3, 1);
    b.set(0, 0, 1);
    QMat a(3, 2);
    a.set(0, 0, 2);            // inside span(b)
    a.set(1, 1, 1);            // new direction
    CHECK(rank_added(a, b, FieldSpec::rationals()) == 1);
    QMat zero(3, 0);
    CHECK(rank_added(a, zero, FieldSpec::rationals()) == 2);
}

TEST_CASE("cokernel maps present the quotient") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        ZMat az = random_zmat(rng, 5, 4);
        QMat a = az.to_qmat();
        FieldSpec f = FieldSpec::rationals();
        CokernelMaps c = cokernel_maps(a, f);
        int rk = rank_over(a, f);
        CHECK(c.proj.nrows() == 5 - rk);
        CHECK(c.proj.ncols() == 5);
        CHECK((c.proj * a).is_zero());
        CHECK(c.proj * c.section == QMat::identity(5 - rk));
        CHECK(rank_over(c.proj, f) == 5 - rk);
    }
}

TEST_CASE("determinant on a known matrix") {
    ZMat a = ZMat::from_dense({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
    CHECK(determinant(a.to_qmat()) == -3);
    ZMat b = ZMat::from_dense({{1, 2}, {2, 4}});
    CHECK(determinant(b.to_qmat()) == 0);
}
