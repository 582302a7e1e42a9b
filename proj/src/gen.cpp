#include "opmean/gen.hpp"

#include <algorithm>
#include <cmath>

#include "opmean/linalg.hpp"

namespace opmean {

uint64_t SplitMix64::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

double SplitMix64::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

uint64_t SplitMix64::mix(uint64_t seed, uint64_t stream) {
    SplitMix64 m(seed ^ (0x517cc1b727220a95ULL * (stream + 1)));
    return m.next();
}

void GenSpec::validate() const {
    if (n < 2 || n > 16) throw InvalidInput("GenSpec: n must be in [2, 16]");
    if (!(kappa >= 1.0)) throw InvalidInput("GenSpec: kappa must be >= 1");
}

Matrix random_orthogonal(int n, SplitMix64& rng) {
    Matrix g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.normal();

    // Modified Gram-Schmidt QR; column sign fixed by the R diagonal.
    Matrix q(n);
    for (int k = 0; k < n; ++k) {
        std::vector<double> v(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = g(i, k);
        for (int j = 0; j < k; ++j) {
            double dot = 0.0;
            for (int i = 0; i < n; ++i) dot += q(i, j) * v[static_cast<size_t>(i)];
            for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] -= dot * q(i, j);
        }
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (norm < 1e-12) throw NumericalFailure("degenerate Gaussian draw in QR");
        // r_kk = norm > 0 already; fix the sign against the original column
        double proj = 0.0;
        for (int i = 0; i < n; ++i) proj += g(i, k) * v[static_cast<size_t>(i)];
        const double sign = proj >= 0.0 ? 1.0 : -1.0;
        for (int i = 0; i < n; ++i) q(i, k) = sign * v[static_cast<size_t>(i)] / norm;
    }
    return q;
}

namespace {

Matrix conjugate_diag(const Matrix& v, const std::vector<double>& lam) {
    const int n = v.dim();
    Matrix r(n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                r(i, j) += lam[static_cast<size_t>(k)] * v(i, k) * v(j, k);
    return r.symmetrized();
}

std::vector<double> log_uniform_eigenvalues(int n, double lo, double hi,
                                            SplitMix64& rng) {
    std::vector<double> lam(static_cast<size_t>(n));
    for (double& x : lam) x = std::exp(rng.uniform(std::log(lo), std::log(hi)));
    return lam;
}

Matrix structured_basis(const GenSpec& spec, SplitMix64& rng) {
    return spec.structure == GenStructure::diagonal ? Matrix::identity(spec.n)
                                                    : random_orthogonal(spec.n, rng);
}

}  // namespace

Matrix random_spd(const GenSpec& spec, SplitMix64& rng) {
    spec.validate();
    if (spec.kappa == 1.0) return Matrix::identity(spec.n);
    const double half = std::sqrt(spec.kappa);
    const Matrix v = structured_basis(spec, rng);
    return conjugate_diag(v, log_uniform_eigenvalues(spec.n, 1.0 / half, half, rng));
}

Matrix random_spd(const GenSpec& spec) {
    SplitMix64 rng(spec.seed);
    return random_spd(spec, rng);
}

std::pair<Matrix, Matrix> near_ordered_pair(const GenSpec& spec, double gap) {
    spec.validate();
    if (gap < 0.0) throw InvalidInput("near_ordered_pair: gap must be >= 0");
    SplitMix64 rng(spec.seed);
    const Matrix a = random_spd(spec, rng);
    const double lo = 1.0 + gap;
    const double hi = lo * std::sqrt(std::max(spec.kappa, 1.0 + 1e-12));
    const Matrix vs = structured_basis(spec, rng);
    const Matrix s = conjugate_diag(vs, log_uniform_eigenvalues(spec.n, lo, hi, rng));
    return {a, (s * a * s).symmetrized()};
}

std::pair<Matrix, Matrix> loewner_ordered_pair(const GenSpec& spec, double gap) {
    spec.validate();
    if (gap < 0.0) throw InvalidInput("loewner_ordered_pair: gap must be >= 0");
    SplitMix64 rng(spec.seed);
    const Matrix a = random_spd(spec, rng);
    const Matrix vp = structured_basis(spec, rng);
    std::vector<double> lam(static_cast<size_t>(spec.n));
    for (double& x : lam) x = gap + rng.uniform01();
    return {a, (a + conjugate_diag(vp, lam)).symmetrized()};
}

std::pair<Matrix, Matrix> commuting_pair(const GenSpec& spec) {
    spec.validate();
    SplitMix64 rng(spec.seed);
    const Matrix v = structured_basis(spec, rng);
    const double half = std::sqrt(spec.kappa);
    const auto d1 = log_uniform_eigenvalues(spec.n, 1.0 / half, half, rng);
    const auto d2 = log_uniform_eigenvalues(spec.n, 1.0 / half, half, rng);
    return {conjugate_diag(v, d1), conjugate_diag(v, d2)};
}

}  // namespace opmean
