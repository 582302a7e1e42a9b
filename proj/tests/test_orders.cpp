#include <doctest.h>

#include "opmean/linalg.hpp"
#include "opmean/means.hpp"
#include "opmean/orders.hpp"
#include "opmean/verify.hpp"

using namespace opmean;

namespace {

const Matrix kI2 = Matrix::identity(2);

}  // namespace

TEST_CASE("loewner comparison") {
    Matrix a{{1.0, 0.0}, {0.0, 1.0}};
    Matrix b{{2.0, 0.5}, {0.5, 3.0}};
    CHECK(loewner_cmp(a, b).verdict == Verdict::holds);
    CHECK(loewner_cmp(b, a).verdict == Verdict::fails);
    // reflexivity with zero margin
    const OrderVerdict self = loewner_cmp(b, b);
    CHECK(self.verdict == Verdict::holds);
    CHECK(self.margin == 0.0);
}

TEST_CASE("near order basics") {
    // scaling: A near cA iff c >= 1
    Matrix a{{3.0, 1.0}, {1.0, 2.0}};
    CHECK(near_cmp(a, 4.0 * a).verdict == Verdict::holds);
    CHECK(near_cmp(4.0 * a, a).verdict == Verdict::fails);
    CHECK(near_cmp(a, a).verdict == Verdict::holds);
    CHECK(near_cmp(a, a).margin == 0.0);

    // margin is lambda_min(A^{-1} # B) - 1
    Matrix b = 9.0 * a;
    CHECK(near_cmp(a, b).margin == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("near order is weaker than loewner") {
    Matrix a{{2.0, 0.3}, {0.3, 1.0}};
    Matrix p{{0.5, 0.1}, {0.1, 0.7}};
    Matrix b = (a + p).symmetrized();
    REQUIRE(loewner_cmp(a, b).verdict == Verdict::holds);
    CHECK(near_cmp(a, b).verdict == Verdict::holds);
    CHECK(eig_entrywise_cmp(a, b).verdict == Verdict::holds);
    CHECK(weak_log_majorize_cmp(a, b).verdict == Verdict::holds);
}

TEST_CASE("near holds where loewner fails") {
    // the natural and Wasserstein means of this pair are near-ordered but
    // their difference is indefinite
    const Matrix a{{50.0, 0.0}, {0.0, 10.0}};
    const Matrix b{{57.8906, 19.8885}, {19.8885, 62.1094}};
    const Matrix nt = natural(a, b, 0.5);
    const Matrix ws = wasserstein(a, b, 0.5);
    CHECK(near_cmp(nt, ws).verdict == Verdict::holds);
    CHECK(loewner_cmp(nt, ws).verdict == Verdict::fails);
}

TEST_CASE("near order is not transitive") {
    const Matrix& a = non_transitive_a();
    const Matrix& b = non_transitive_b();
    const Matrix& c = non_transitive_c();
    const OrderVerdict ab = near_cmp(a, b);
    const OrderVerdict bc = near_cmp(b, c);
    const OrderVerdict ac = near_cmp(a, c);
    CHECK(ab.verdict == Verdict::holds);
    CHECK(bc.verdict == Verdict::holds);
    CHECK(ac.verdict == Verdict::fails);
    CHECK(ab.margin > 1e-6);
    CHECK(bc.margin > 1e-6);
    CHECK(ac.margin < -1e-6);
}

TEST_CASE("eigenvalue entrywise order reports a witness") {
    Matrix a{{3.0, 0.0}, {0.0, 1.0}};
    Matrix b{{2.0, 0.0}, {0.0, 5.0}};
    const OrderVerdict v = eig_entrywise_cmp(b, a);  // 5 > 3 at index 0
    CHECK(v.verdict == Verdict::fails);
    CHECK(v.witness == 0);
}

TEST_CASE("weak log-majorization and determinant equality") {
    Matrix a{{4.0, 0.0}, {0.0, 0.25}};  // det 1, top eigenvalue 4
    Matrix b{{5.0, 0.0}, {0.0, 0.2}};   // det 1, top eigenvalue 5
    CHECK(weak_log_majorize_cmp(a, b).verdict == Verdict::holds);
    CHECK(log_majorize_cmp(a, b).verdict == Verdict::holds);

    Matrix c{{5.0, 0.0}, {0.0, 0.5}};  // det 2.5
    CHECK(weak_log_majorize_cmp(a, c).verdict == Verdict::holds);
    CHECK(log_majorize_cmp(a, c).verdict == Verdict::fails);
}

TEST_CASE("implication chain on random-ish instances") {
    // Loewner => near => entrywise => weak log-majorization
    const Matrix a{{2.0, 0.4, 0.1}, {0.4, 1.5, 0.2}, {0.1, 0.2, 1.0}};
    const Matrix p{{0.6, 0.1, 0.0}, {0.1, 0.4, 0.1}, {0.0, 0.1, 0.5}};
    const Matrix b = (a + p).symmetrized();
    REQUIRE(loewner_cmp(a, b).verdict == Verdict::holds);
    CHECK(near_cmp(a, b).verdict == Verdict::holds);
    CHECK(eig_entrywise_cmp(a, b).verdict == Verdict::holds);
    CHECK(weak_log_majorize_cmp(a, b).verdict == Verdict::holds);
}

TEST_CASE("inversion antisymmetry") {
    Matrix a{{2.0, 0.3}, {0.3, 1.0}};
    Matrix b = 3.0 * a;
    // A near B iff B^{-1} near A^{-1}
    CHECK(near_cmp(a, b).verdict == Verdict::holds);
    CHECK(near_cmp(spd_inverse(b), spd_inverse(a)).verdict == Verdict::holds);
    CHECK(loewner_cmp(spd_inverse(b), spd_inverse(a)).verdict == Verdict::holds);
}

TEST_CASE("classify ascends to the strongest relation") {
    Matrix a{{1.0, 0.0}, {0.0, 1.0}};

    Classification c1 = classify(a, 2.0 * a);
    CHECK(c1.strongest == OrderRelationKind::Loewner);

    // near without loewner
    const Matrix na{{50.0, 0.0}, {0.0, 10.0}};
    const Matrix nb{{57.8906, 19.8885}, {19.8885, 62.1094}};
    Classification c2 =
        classify(natural(na, nb, 0.5), wasserstein(na, nb, 0.5));
    CHECK(c2.strongest == OrderRelationKind::Near);

    // weak log-majorization without entrywise order
    Classification c3 = classify(sharp(Matrix{{39.1195, 42.1116}, {42.1116, 61.1568}},
                                       Matrix{{26.3279, 13.3485}, {13.3485, 12.2727}},
                                       0.25),
                                 wasserstein(Matrix{{39.1195, 42.1116},
                                                    {42.1116, 61.1568}},
                                             Matrix{{26.3279, 13.3485},
                                                    {13.3485, 12.2727}},
                                             0.25));
    CHECK(c3.strongest == OrderRelationKind::WeakLogMajorization);
    CHECK(c3.eig_entrywise.verdict == Verdict::fails);

    // no relation at all
    Matrix big{{10.0, 0.0}, {0.0, 10.0}};
    Classification c4 = classify(big, kI2);
    CHECK(c4.strongest == OrderRelationKind::NoRelation);
}

TEST_CASE("identical operands short-circuit every comparator") {
    Matrix a{{2.0, 0.7}, {0.7, 3.0}};
    for (auto* cmp : {&loewner_cmp, &near_cmp, &eig_entrywise_cmp,
                      &weak_log_majorize_cmp, &log_majorize_cmp}) {
        const OrderVerdict v = (*cmp)(a, a, Tolerance{});
        CHECK(v.verdict == Verdict::holds);
        CHECK(v.margin == 0.0);
    }
}
