#pragma once

#include "opmean/linalg.hpp"
#include "opmean/matrix.hpp"

namespace opmean {

enum class MeanKind {
    Arithmetic,
    Harmonic,
    MetricGeometric,
    SpectralGeometric,
    Wasserstein,
    LogEuclidean,
    Fidelity,
};

const char* to_string(MeanKind k);
/// Accepts the CLI spellings: arithmetic, harmonic, sharp, natural,
/// wasserstein, log-euclidean, fidelity.
MeanKind parse_mean_kind(const std::string& name);

/// Arithmetic mean (1-t)A + tB, valid for all real t (the result may leave
/// the PD cone outside [0,1]).
Matrix nabla(const Matrix& a, const Matrix& b, double t);

/// Metric geometric mean A^{1/2}(A^{-1/2} B A^{-1/2})^t A^{1/2}.
Matrix sharp(const Matrix& a, const Matrix& b, double t);

/// Spectral geometric mean X^t A X^t with X = A^{-1} # B; PD for all real t.
Matrix natural(const Matrix& a, const Matrix& b, double t);

/// Wasserstein mean, canonical evaluator: the congruence of A by
/// I nabla_t (A^{-1} # B). PSD for all real t, possibly singular outside
/// [0,1].
Matrix wasserstein(const Matrix& a, const Matrix& b, double t);

/// Secondary Wasserstein evaluators, kept for cross-validation (t in [0,1]).
Matrix wasserstein_direct(const Matrix& a, const Matrix& b, double t);
Matrix wasserstein_polar(const Matrix& a, const Matrix& b, double t);

Matrix harmonic(const Matrix& a, const Matrix& b, double t);
Matrix log_euclidean(const Matrix& a, const Matrix& b, double t);
Matrix fidelity(const Matrix& a, const Matrix& b, double t);

Matrix mean(MeanKind kind, const Matrix& a, const Matrix& b, double t);

struct CurveSample {
    double t = 0.0;
    Matrix value;
    std::vector<double> eigenvalues;  // descending
    double determinant = 0.0;
};

std::vector<CurveSample> sample_curve(MeanKind kind, const Matrix& a, const Matrix& b,
                                      const std::vector<double>& t_grid);

}  // namespace opmean
