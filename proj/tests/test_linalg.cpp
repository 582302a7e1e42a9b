#include <doctest.h>

#include <cmath>

#include "opmean/linalg.hpp"
#include "opmean/matrix.hpp"

using namespace opmean;

namespace {

// 2x2 characteristic-polynomial eigenvalues, independent of the Jacobi solver
std::pair<double, double> quadratic_eigs(const Matrix& m) {
    const double tr = m(0, 0) + m(1, 1);
    const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const double disc = std::sqrt(tr * tr / 4.0 - det);
    return {tr / 2.0 + disc, tr / 2.0 - disc};
}

}  // namespace

TEST_CASE("matrix basics") {
    Matrix a{{1.0, 2.0}, {2.0, 5.0}};
    CHECK(a.dim() == 2);
    CHECK(a.trace() == doctest::Approx(6.0));
    CHECK(a.transpose() == a);
    CHECK(Matrix::identity(3)(2, 2) == 1.0);
    CHECK(is_symmetric(a));

    Matrix ns{{1.0, 2.0}, {0.0, 5.0}};
    CHECK_FALSE(is_symmetric(ns));
    CHECK(is_symmetric(ns.symmetrized()));

    CHECK_THROWS_AS(require_same_dim(a, Matrix::identity(3)), InvalidInput);
    CHECK_THROWS_AS(Matrix(0), InvalidInput);
}

TEST_CASE("eigh reproduces 2x2 closed-form eigenvalues") {
    const Matrix m{{39.1195, 42.1116}, {42.1116, 61.1568}};
    const auto [hi, lo] = quadratic_eigs(m);
    CHECK(hi == doctest::Approx(93.66742179).epsilon(1e-9));
    CHECK(lo == doctest::Approx(6.60887821).epsilon(1e-9));

    const SpectralDecomposition d = eigh(m);
    CHECK(d.eigenvalues[0] == doctest::Approx(hi).epsilon(1e-12));
    CHECK(d.eigenvalues[1] == doctest::Approx(lo).epsilon(1e-12));
    CHECK(rel_frobenius_gap(d.reconstruct(), m) < 1e-13);

    // eigenvectors orthonormal
    const Matrix vtv = (d.eigenvectors.transpose() * d.eigenvectors).symmetrized();
    CHECK(rel_frobenius_gap(vtv, Matrix::identity(2)) < 1e-13);
}

TEST_CASE("eigh is deterministic and sorted descending") {
    Matrix m{{4.0, 1.0, 0.5}, {1.0, 3.0, 0.25}, {0.5, 0.25, 2.0}};
    const auto d1 = eigh(m);
    const auto d2 = eigh(m);
    CHECK(d1.eigenvalues == d2.eigenvalues);
    CHECK(d1.eigenvectors == d2.eigenvectors);
    for (size_t i = 0; i + 1 < d1.eigenvalues.size(); ++i)
        CHECK(d1.eigenvalues[i] >= d1.eigenvalues[i + 1]);
}

TEST_CASE("spd sqrt, inverse, log, exp, power") {
    Matrix a{{4.0, 1.0}, {1.0, 3.0}};

    const Matrix s = spd_sqrt(a);
    CHECK(rel_frobenius_gap((s * s).symmetrized(), a) < 1e-12);

    const Matrix ai = spd_inverse(a);
    CHECK(rel_frobenius_gap((a * ai).symmetrized(), Matrix::identity(2)) < 1e-12);

    CHECK(rel_frobenius_gap(matrix_exp(matrix_log(a)), a) < 1e-12);

    // power composition: (a^p)^q == a^{pq}
    const Matrix p1 = matrix_power(matrix_power(a, 0.7), 2.0);
    CHECK(rel_frobenius_gap(p1, matrix_power(a, 1.4)) < 1e-12);
    CHECK(matrix_power(a, 0.0) == Matrix::identity(2));
    CHECK(rel_frobenius_gap(matrix_power(a, -1.0), ai) < 1e-12);

    Matrix indef{{1.0, 0.0}, {0.0, -1.0}};
    CHECK_THROWS_AS(spd_sqrt(indef), NotPositiveDefinite);
    CHECK_THROWS_AS(matrix_log(indef), NotPositiveDefinite);
}

TEST_CASE("polar decomposition and matrix absolute value") {
    Matrix x{{3.0, 1.0}, {-1.0, 2.0}};

    const Matrix ax = abs_of(x);
    CHECK(rel_frobenius_gap((ax * ax).symmetrized(),
                            (x.transpose() * x).symmetrized()) < 1e-12);

    const Matrix u = polar_unitary(x);
    CHECK(rel_frobenius_gap((u.transpose() * u).symmetrized(),
                            Matrix::identity(2)) < 1e-12);
    CHECK(rel_frobenius_gap(u * ax, x) < 1e-12);

    Matrix singular{{1.0, 0.0}, {0.0, 0.0}};
    CHECK_THROWS_AS(polar_unitary(singular), NumericalFailure);
}

TEST_CASE("is_pd verdict band") {
    CHECK(is_pd(Matrix::identity(2)).verdict == Verdict::holds);

    Matrix neg{{1.0, 0.0}, {0.0, -0.5}};
    CHECK(is_pd(neg).verdict == Verdict::fails);

    // an eigenvalue inside the band is neither certified nor rejected
    Matrix edge{{1.0, 0.0}, {0.0, 1e-13}};
    CHECK(is_pd(edge).verdict == Verdict::indeterminate);
}
