#pragma once

#include <cstdint>
#include <utility>

#include "opmean/matrix.hpp"

namespace opmean {

/// Counter-based 64-bit PRNG (SplitMix64). Chosen for trivially reproducible
/// cross-language replay of suite failures; every suite logs its seeds.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next();
    /// Uniform in [0, 1).
    double uniform01();
    double uniform(double lo, double hi);
    /// Standard normal via Box-Muller.
    double normal();

    /// Derive an independent stream, e.g. per trial index.
    static uint64_t mix(uint64_t seed, uint64_t stream);

private:
    uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

enum class GenStructure { generic, commuting, diagonal };

struct GenSpec {
    int n = 2;               // 2..16
    double kappa = 100.0;    // condition-number cap, >= 1
    uint64_t seed = 0;
    GenStructure structure = GenStructure::generic;

    void validate() const;
};

/// Haar-distributed orthogonal matrix: QR of a Gaussian matrix with the R
/// diagonal sign fixed.
Matrix random_orthogonal(int n, SplitMix64& rng);

/// Random SPD matrix with eigenvalues log-uniform in [1/sqrt(kappa),
/// sqrt(kappa)]; kappa == 1 yields the identity exactly.
Matrix random_spd(const GenSpec& spec);
Matrix random_spd(const GenSpec& spec, SplitMix64& rng);

/// (A, B = SAS) with random PD S whose eigenvalues lie in
/// [1+gap, (1+gap)*sqrt(kappa)]; near_cmp(A, B) holds with margin >= gap
/// since A^{-1} # (SAS) = S.
std::pair<Matrix, Matrix> near_ordered_pair(const GenSpec& spec, double gap);

/// (A, B = A + P) with random PSD P, lambda_min(P) >= gap.
std::pair<Matrix, Matrix> loewner_ordered_pair(const GenSpec& spec, double gap);

/// Pair sharing an eigenvector basis; commutator norm at roundoff level.
std::pair<Matrix, Matrix> commuting_pair(const GenSpec& spec);

}  // namespace opmean
