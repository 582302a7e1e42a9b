#include <doctest.h>

#include "opmean/gen.hpp"
#include "opmean/linalg.hpp"
#include "opmean/orders.hpp"

using namespace opmean;

TEST_CASE("splitmix64 streams are deterministic and decorrelated") {
    SplitMix64 r1(42), r2(42);
    for (int i = 0; i < 100; ++i) CHECK(r1.next() == r2.next());

    CHECK(SplitMix64::mix(1, 0) != SplitMix64::mix(1, 1));
    CHECK(SplitMix64::mix(1, 0) != SplitMix64::mix(2, 0));

    SplitMix64 u(7);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.uniform01();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
}

TEST_CASE("gen spec validation") {
    GenSpec s;
    s.n = 1;
    CHECK_THROWS_AS(s.validate(), InvalidInput);
    s.n = 17;
    CHECK_THROWS_AS(s.validate(), InvalidInput);
    s.n = 4;
    s.kappa = 0.5;
    CHECK_THROWS_AS(s.validate(), InvalidInput);
    s.kappa = 10.0;
    CHECK_NOTHROW(s.validate());
}

TEST_CASE("random spd respects the condition number budget") {
    for (uint64_t seed : {1ULL, 2ULL, 99ULL}) {
        GenSpec s;
        s.n = 5;
        s.kappa = 50.0;
        s.seed = seed;
        const Matrix a = random_spd(s);
        CHECK(is_symmetric(a));
        const auto lam = eigh(a).eigenvalues;
        CHECK(lam.back() > 0.0);
        CHECK(lam.front() / lam.back() <= 50.0 * (1.0 + 1e-9));

        // same seed, same matrix
        CHECK(random_spd(s) == a);
    }

    GenSpec id;
    id.n = 3;
    id.kappa = 1.0;
    CHECK(random_spd(id) == Matrix::identity(3));
}

TEST_CASE("random orthogonal is orthogonal and deterministic") {
    SplitMix64 rng(5);
    const Matrix q = random_orthogonal(4, rng);
    CHECK(rel_frobenius_gap((q.transpose() * q).symmetrized(),
                            Matrix::identity(4)) < 1e-12);
    SplitMix64 rng2(5);
    CHECK(random_orthogonal(4, rng2) == q);
}

TEST_CASE("near ordered pair guarantees the requested margin") {
    GenSpec s;
    s.n = 4;
    s.kappa = 100.0;
    for (uint64_t seed : {3ULL, 17ULL, 1234ULL}) {
        s.seed = seed;
        const auto [a, b] = near_ordered_pair(s, 0.1);
        const OrderVerdict v = near_cmp(a, b);
        CHECK(v.verdict == Verdict::holds);
        CHECK(v.margin >= 0.1 * (1.0 - 1e-9));
    }
}

TEST_CASE("loewner ordered pair guarantees the requested gap") {
    GenSpec s;
    s.n = 3;
    s.kappa = 30.0;
    for (uint64_t seed : {8ULL, 21ULL}) {
        s.seed = seed;
        const auto [a, b] = loewner_ordered_pair(s, 0.2);
        const OrderVerdict v = loewner_cmp(a, b);
        CHECK(v.verdict == Verdict::holds);
        CHECK(v.margin >= 0.2 * (1.0 - 1e-9));
    }
}

TEST_CASE("commuting pair commutes") {
    GenSpec s;
    s.n = 4;
    s.kappa = 20.0;
    s.seed = 11;
    const auto [a, b] = commuting_pair(s);
    CHECK((a * b - b * a).frobenius_norm() <
          1e-10 * (a * b).frobenius_norm());
    CHECK(is_pd(a).verdict == Verdict::holds);
    CHECK(is_pd(b).verdict == Verdict::holds);
}
