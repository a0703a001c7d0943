#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmstab/fi_sharp.hpp"

using namespace gms;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

}

TEST_CASE("product sequence dimensions and relations") {
    FISharpModule t = make_TZYq(GradedBettiTable({1, 1}), GradedBettiTable({1}), 1, kQ, 5);
    t.validate();
    CHECK(t.n_max() == 5);
    for (int n = 0; n <= 5; ++n) CHECK(t.dim(n) == n);  // one odd class in one of n slots

    FISharpModule t2 = make_TZYq(GradedBettiTable({1, 1}), GradedBettiTable({1}), 2, kQ, 5);
    t2.validate();
    for (int n = 0; n <= 5; ++n) CHECK(t2.dim(n) == n * (n - 1) / 2);

    FISharpModule ty = make_TZYq(GradedBettiTable({1, 1}), GradedBettiTable({1, 2}), 1, kQ, 4);
    ty.validate();
    for (int n = 0; n <= 4; ++n) CHECK(ty.dim(n) == n + 2);
}

TEST_CASE("degree zero for constant sequences") {
    FISharpModule t = make_TZYq(GradedBettiTable({1, 1}), GradedBettiTable({1}), 0, kQ, 6);
    for (int n = 0; n <= 6; ++n) CHECK(t.dim(n) == 1);
    DegreeCertificate c = degree_bound(t, 0);
    CHECK(c.status == DegreeCertificate::Status::Verified);
    CHECK(c.verified_range >= 4);
}

TEST_CASE("zero sequence has degree minus one") {
    // points have no first homology
    FISharpModule z = make_TZYq(GradedBettiTable({1}), GradedBettiTable({1}), 1, kQ, 6);
    CHECK(z.is_zero());
    CHECK(degree_bound(z, -1).status == DegreeCertificate::Status::Verified);
}

TEST_CASE("linear sequence: degree one verified, degree zero refuted") {
    FISharpModule t = make_TZYq(GradedBettiTable({1, 1}), GradedBettiTable({1}), 1, kQ, 8);
    CHECK(degree_bound(t, 1).status == DegreeCertificate::Status::Verified);

    DegreeCertificate bad = degree_bound(t, 0);
    CHECK(bad.status == DegreeCertificate::Status::Refuted);
    CHECK(bad.witness_n >= 0);
    CHECK(bad.witness_dim > 0);
}

TEST_CASE("degree bounds for higher q") {
    for (int q = 0; q <= 3; ++q) {
        FISharpModule t = make_TZYq(GradedBettiTable({1, 1}), GradedBettiTable({1}), q, kQ, 8);
        CHECK(degree_bound(t, q).status == DegreeCertificate::Status::Verified);
        if (q >= 1) CHECK(degree_bound(t, q - 1).status == DegreeCertificate::Status::Refuted);
    }
}

TEST_CASE("truncation too short is inconclusive") {
    FISharpModule t = make_TZYq(GradedBettiTable({1, 1}), GradedBettiTable({1}), 1, kQ, 1);
    DegreeCertificate c = degree_bound(t, 2);
    CHECK(c.status == DegreeCertificate::Status::Inconclusive);
    CHECK(c.status_name() == "inconclusive");
}

TEST_CASE("shifted cokernel drops dimensions as expected") {
    FISharpModule t = make_TZYq(GradedBettiTable({1, 1}), GradedBettiTable({1}), 1, kQ, 5);
    FISharpModule d = delta(t);
    d.validate();
    CHECK(d.n_max() == 4);
    for (int n = 0; n <= 4; ++n) CHECK(d.dim(n) == 1);  // (n+1) - n, insertion is injective
    FISharpModule dd = delta(d);
    CHECK(dd.is_zero());
}

TEST_CASE("permutation action on the sequence respects composition") {
    FISharpModule t = make_TZYq(GradedBettiTable({1, 1}), GradedBettiTable({1}), 1, kQ, 4);
    Perm a({1, 2, 0});
    Perm b = Perm::transposition(3, 0, 1);
    CHECK(t.act(3, a) * t.act(3, b) == t.act(3, a * b));
    CHECK(t.act(3, a.inverse()) * t.act(3, a) == QMat::identity(3));
    // degree-1 classes sit in single slots, so the action permutes basis
    // vectors without signs
    QMat m = t.act(3, a);
    for (int j = 0; j < 3; ++j) {
        int hits = 0;
        for (int i = 0; i < 3; ++i)
            if (m.get(i, j) != 0) {
                CHECK(m.get(i, j) == 1);
                ++hits;
            }
        CHECK(hits == 1);
    }
}
