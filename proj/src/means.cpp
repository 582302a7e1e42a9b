#include "opmean/means.hpp"

#include <sstream>

namespace opmean {

const char* to_string(MeanKind k) {
    switch (k) {
        case MeanKind::Arithmetic: return "arithmetic";
        case MeanKind::Harmonic: return "harmonic";
        case MeanKind::MetricGeometric: return "sharp";
        case MeanKind::SpectralGeometric: return "natural";
        case MeanKind::Wasserstein: return "wasserstein";
        case MeanKind::LogEuclidean: return "log-euclidean";
        default: return "fidelity";
    }
}

MeanKind parse_mean_kind(const std::string& name) {
    if (name == "arithmetic" || name == "nabla") return MeanKind::Arithmetic;
    if (name == "harmonic") return MeanKind::Harmonic;
    if (name == "sharp" || name == "geometric") return MeanKind::MetricGeometric;
    if (name == "natural" || name == "spectral") return MeanKind::SpectralGeometric;
    if (name == "wasserstein") return MeanKind::Wasserstein;
    if (name == "log-euclidean" || name == "logeuclidean") return MeanKind::LogEuclidean;
    if (name == "fidelity") return MeanKind::Fidelity;
    throw InvalidInput("unknown mean kind: " + name);
}

Matrix nabla(const Matrix& a, const Matrix& b, double t) {
    require_same_dim(a, b);
    return ((1.0 - t) * a + t * b).symmetrized();
}

Matrix sharp(const Matrix& a, const Matrix& b, double t) {
    require_same_dim(a, b);
    if (t == 0.0) return a;
    if (t == 1.0) return b;
    const Matrix a_half = spd_sqrt(a);
    const Matrix a_half_inv = matrix_power(a, -0.5);
    const Matrix inner = matrix_power((a_half_inv * b * a_half_inv).symmetrized(), t);
    return (a_half * inner * a_half).symmetrized();
}

namespace {

/// A^{-1} # B, the backbone of both extended means.
Matrix inv_sharp(const Matrix& a, const Matrix& b) {
    return sharp(spd_inverse(a), b, 0.5);
}

}  // namespace

Matrix natural(const Matrix& a, const Matrix& b, double t) {
    require_same_dim(a, b);
    if (t == 0.0) return a;
    if (t == 1.0) return b;
    const Matrix xt = matrix_power(inv_sharp(a, b), t);
    return (xt * a * xt).symmetrized();
}

Matrix wasserstein(const Matrix& a, const Matrix& b, double t) {
    require_same_dim(a, b);
    if (t == 0.0) return a;
    if (t == 1.0) return b;
    const Matrix m = nabla(Matrix::identity(a.dim()), inv_sharp(a, b), t);
    return (m * a * m).symmetrized();
}

Matrix wasserstein_direct(const Matrix& a, const Matrix& b, double t) {
    require_same_dim(a, b);
    // (AB)^{1/2} = A^{1/2} (A^{1/2} B A^{1/2})^{1/2} A^{-1/2}, exact for PD A, B.
    const Matrix a_half = spd_sqrt(a);
    const Matrix a_half_inv = matrix_power(a, -0.5);
    const Matrix core = spd_sqrt((a_half * b * a_half).symmetrized());
    const Matrix ab_sqrt = a_half * core * a_half_inv;
    const Matrix cross = (ab_sqrt + ab_sqrt.transpose());  // (AB)^{1/2} + (BA)^{1/2}
    return ((1.0 - t) * (1.0 - t) * a + t * t * b + (t * (1.0 - t)) * cross)
        .symmetrized();
}

Matrix wasserstein_polar(const Matrix& a, const Matrix& b, double t) {
    require_same_dim(a, b);
    const Matrix a_half = spd_sqrt(a);
    const Matrix b_half = spd_sqrt(b);
    const Matrix u = polar_unitary(b_half * a_half);
    const Matrix blend = (1.0 - t) * a_half + t * (u.transpose() * b_half);
    const Matrix av = abs_of(blend);
    return (av * av).symmetrized();
}

Matrix harmonic(const Matrix& a, const Matrix& b, double t) {
    require_same_dim(a, b);
    return spd_inverse(nabla(spd_inverse(a), spd_inverse(b), t));
}

Matrix log_euclidean(const Matrix& a, const Matrix& b, double t) {
    require_same_dim(a, b);
    return matrix_exp(nabla(matrix_log(a), matrix_log(b), t));
}

Matrix fidelity(const Matrix& a, const Matrix& b, double t) {
    require_same_dim(a, b);
    if (t == 0.0) return a;
    if (t == 1.0) return b;
    const Matrix bt = matrix_power(b, t / 2.0);
    return (bt * matrix_power(a, 1.0 - t) * bt).symmetrized();
}

Matrix mean(MeanKind kind, const Matrix& a, const Matrix& b, double t) {
    switch (kind) {
        case MeanKind::Arithmetic: return nabla(a, b, t);
        case MeanKind::Harmonic: return harmonic(a, b, t);
        case MeanKind::MetricGeometric: return sharp(a, b, t);
        case MeanKind::SpectralGeometric: return natural(a, b, t);
        case MeanKind::Wasserstein: return wasserstein(a, b, t);
        case MeanKind::LogEuclidean: return log_euclidean(a, b, t);
        default: return fidelity(a, b, t);
    }
}

std::vector<CurveSample> sample_curve(MeanKind kind, const Matrix& a, const Matrix& b,
                                      const std::vector<double>& t_grid) {
    std::vector<CurveSample> samples;
    samples.reserve(t_grid.size());
    for (double t : t_grid) {
        try {
            CurveSample s;
            s.t = t;
            s.value = mean(kind, a, b, t);
            SpectralDecomposition d = eigh(s.value);
            s.eigenvalues = d.eigenvalues;
            s.determinant = 1.0;
            for (double lam : d.eigenvalues) s.determinant *= lam;
            samples.push_back(std::move(s));
        } catch (const NotPositiveDefinite& e) {
            std::ostringstream msg;
            msg << "curve sample at t=" << t << ": " << e.what();
            throw NotPositiveDefinite(msg.str());
        } catch (const NumericalFailure& e) {
            std::ostringstream msg;
            msg << "curve sample at t=" << t << ": " << e.what();
            throw NumericalFailure(msg.str());
        } catch (const std::runtime_error& e) {
            std::ostringstream msg;
            msg << "curve sample at t=" << t << ": " << e.what();
            throw InvalidInput(msg.str());
        }
    }
    return samples;
}

}  // namespace opmean
