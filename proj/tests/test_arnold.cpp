#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmstab/arnold.hpp"
#include "gmstab/linalg.hpp"

using namespace gms;

TEST_CASE("generators normalize and square to zero") {
    ArnoldClass a12 = ArnoldClass::generator(3, 1, 2);
    ArnoldClass a21 = ArnoldClass::generator(3, 2, 1);
    CHECK(a21 == a12.scaled(-1));
    CHECK((a12 * a12).is_zero());
    CHECK(a12.degree() == 2);
    CHECK(ArnoldClass::one(3).degree() == 0);
    CHECK(ArnoldClass(3).degree() == -1);
}

TEST_CASE("three-term relation straightens repeated second index") {
    // a_13 a_23 = a_12 a_23 - a_12 a_13 after straightening; equivalently the
    // cyclic sum a_12 a_23 + a_23 a_31 + a_31 a_12 vanishes
    ArnoldClass a12 = ArnoldClass::generator(3, 1, 2);
    ArnoldClass a23 = ArnoldClass::generator(3, 2, 3);
    ArnoldClass a31 = ArnoldClass::generator(3, 3, 1);
    ArnoldClass cyclic = a12 * a23 + a23 * a31 + a31 * a12;
    CHECK(cyclic.is_zero());

    ArnoldClass lhs = ArnoldClass::generator(3, 1, 3) * a23;
    ArnoldClass rhs = a12 * a23 - a12 * ArnoldClass::generator(3, 1, 3);
    CHECK(lhs == rhs);
}

TEST_CASE("admissible monomial counts match the poincare polynomial") {
    // number of k-factor monomials on r points = [t^k] prod_{i=1}^{r-1} (1 + i t)
    for (int r = 1; r <= 6; ++r) {
        std::vector<long> poly{1};
        for (int i = 1; i < r; ++i) {
            std::vector<long> next(poly.size() + 1, 0);
            for (size_t k = 0; k < poly.size(); ++k) {
                next[k] += poly[k];
                next[k + 1] += poly[k] * i;
            }
            poly = next;
        }
        for (size_t k = 0; k < poly.size(); ++k)
            CHECK(static_cast<long>(admissible_monomials(r, static_cast<int>(k)).size()) ==
                  poly[k]);
        CHECK(admissible_monomials(r, r).empty());
    }
    CHECK(admissible_monomials(4, 2).size() == 11);
    CHECK(admissible_monomials(6, 2).size() == 85);
}

TEST_CASE("permutation action is an anti-homomorphic ring action") {
    ArnoldClass a12 = ArnoldClass::generator(4, 1, 2);
    ArnoldClass a34 = ArnoldClass::generator(4, 3, 4);
    for (const Perm& s : all_permutations(4)) {
        CHECK(perm_action(s, a12 * a34) == perm_action(s, a12) * perm_action(s, a34));
        for (const Perm& t : all_permutations(4))
            CHECK(perm_action(s * t, a12) == perm_action(t, perm_action(s, a12)));
    }
    // substitution by the inverse: sigma = (0 1) sends a_12 -> a_21 = -a_12
    CHECK(perm_action(Perm::transposition(4, 0, 1), a12) == a12.scaled(-1));
}

TEST_CASE("action matrices are signed permutations in one factor") {
    Perm s({1, 2, 0});
    QMat m = perm_action_matrix(s, 3, 1);
    CHECK(m.nrows() == 3);
    CHECK(rank_over(m, FieldSpec::rationals()) == 3);
    CHECK(perm_action_matrix(s.inverse(), 3, 1) * m == QMat::identity(3));
}

TEST_CASE("invariant dimensions for the full group") {
    // symmetric classes in degree 2: none for r >= 2 (a_ij is alternating in a
    // suitable sense only pointwise; the full average vanishes)
    CHECK(arnold_invariants_dim(SubgroupSpec::full(3), 3, 0) == 1);
    CHECK(arnold_invariants_dim(SubgroupSpec::trivial(3), 3, 1) == 3);
    CHECK(arnold_invariants_dim(SubgroupSpec::full(3), 3, 1) == 0);
    CHECK(arnold_invariants_dim(SubgroupSpec::full(4), 4, 1) == 0);
}

TEST_CASE("restriction kills classes touching the forgotten point") {
    ArnoldClass c = ArnoldClass::generator(3, 1, 2) + ArnoldClass::generator(3, 1, 3);
    ArnoldClass res = stab_pullback(c);
    CHECK(res.points() == 2);
    CHECK(res == ArnoldClass::generator(2, 1, 2));
    ArnoldClass top = ArnoldClass::generator(3, 1, 3) * ArnoldClass::generator(3, 2, 3);
    CHECK(stab_pullback(top).is_zero());
}

TEST_CASE("circle factor classes") {
    // weights (2,3,5), factor 1: sum_{i != 1} k_i a_{i1} = -3 a_12 - 5 a_13
    EulerClass e = gm_euler_class({2, 3, 5}, 1);
    ArnoldClass want =
        ArnoldClass::generator(3, 1, 2, -3) + ArnoldClass::generator(3, 1, 3, -5);
    CHECK(e.cls == want);
    CHECK(e.cls.degree() == 2);

    EulerClass e3 = gm_euler_class({2, 3, 5}, 3);
    ArnoldClass want3 =
        ArnoldClass::generator(3, 1, 3, 2) + ArnoldClass::generator(3, 2, 3, 3);
    CHECK(e3.cls == want3);

    CHECK_THROWS_AS(gm_euler_class({2, 3}, 3), std::invalid_argument);
}

TEST_CASE("pullback lemma holds for assorted weight tuples") {
    for (std::vector<long> lambda :
         {std::vector<long>{1}, {1, 1}, {2, 3, 5}, {1, 1, 1, 1}, {7, 7, 2, 9, 4}}) {
        PullbackVerdicts v = verify_pullback_lemma(lambda);
        CHECK(v.all_hold);
        CHECK(v.per_j.size() == lambda.size());
        for (bool b : v.per_j) CHECK(b);
    }
}

TEST_CASE("forgetful obstruction witness") {
    // dropping the third unit weight: factor 1 changes by -a_13 restricted, so
    // the difference of euler classes is nonzero
    ForgetfulWitness w = verify_forgetful_obstruction({1, 1, 1}, 2);
    CHECK(w.found);
    CHECK(w.j >= 1);
    CHECK_FALSE(w.witness.is_zero());

    // every positive tuple obstructs
    for (std::vector<long> lambda : {std::vector<long>{1, 1}, {2, 3, 5}, {4, 4, 4, 4}}) {
        for (int r = 1; r < static_cast<int>(lambda.size()); ++r)
            CHECK(verify_forgetful_obstruction(lambda, r).found);
    }

    // r must actually forget something
    CHECK_THROWS_AS(verify_forgetful_obstruction({2, 3}, 2), std::invalid_argument);
    CHECK_THROWS_AS(verify_forgetful_obstruction({2, 3}, 0), std::invalid_argument);
}
