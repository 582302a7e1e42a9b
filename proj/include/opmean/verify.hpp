#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "opmean/gen.hpp"
#include "opmean/matrix.hpp"
#include "opmean/means.hpp"
#include "opmean/orders.hpp"

namespace opmean {

struct SubCheck {
    std::string name;
    Verdict verdict = Verdict::holds;
    double margin = 0.0;
};

/// Per-theorem verification record. fails iff at least one sub-check fails;
/// worst_margin is the minimum sub-check margin.
struct PropertyReport {
    std::string property_id;
    uint64_t seed = 0;
    uint64_t instance_digest = 0;
    bool skipped = false;
    std::string skip_reason;
    std::vector<SubCheck> details;

    Verdict verdict() const;
    double worst_margin() const;
    int count(Verdict v) const;

    void add(std::string name, Verdict v, double margin);
    /// Identity sub-check: holds iff relative Frobenius gap <= tol;
    /// margin = tol - gap.
    void add_identity(std::string name, const Matrix& x, const Matrix& y,
                      double tol = 1e-8);
    void add_order(std::string name, const OrderVerdict& v);
    /// Scalar comparison lhs >= rhs - tol; margin = lhs - rhs.
    void add_scalar_ge(std::string name, double lhs, double rhs, double tol = 1e-9);

    /// One line: property-id seed verdict worst-margin.
    std::string to_line() const;
};

uint64_t digest_matrices(std::initializer_list<const Matrix*> ms, uint64_t seed);

// ---- per-theorem checks -------------------------------------------------

/// Algebraic mean axioms: parameter swap, inversion, scaling, composition,
/// congruence, the fixed-point identity, determinant identities, and the
/// harmonic <= sharp <= arithmetic / wasserstein <= arithmetic orderings.
/// When dominating matrices c >= a, d >= b are supplied, joint monotonicity
/// of the metric geometric mean is checked as well.
PropertyReport check_mean_axioms(const Matrix& a, const Matrix& b,
                                 const std::vector<double>& t_grid,
                                 const Matrix* c = nullptr, const Matrix* d = nullptr);

/// The full ordering chain between the seven means at parameter t, each link
/// at its stated strength (Loewner / log-majorization / near order).
PropertyReport check_chain(const Matrix& a, const Matrix& b, double t);

/// Near order between the spectral geometric and Wasserstein means:
/// natural precedes wasserstein on (0,1); reversed for t > 1 under A near B
/// and for t < 0 under B near A; equality only at A = B; entrywise corollary.
PropertyReport check_near_main(const Matrix& a, const Matrix& b, double t);

/// Monotonicity of both mean curves in the near order, the equivalence with
/// the near order of the endpoints, and the scaled-curve variants.
PropertyReport check_curve_monotone(const Matrix& a, const Matrix& b,
                                    const std::vector<double>& t_grid,
                                    std::optional<double> scale = std::nullopt);

/// Two-sided near-order sandwiches between curve points at parameters t < s,
/// with scalar factors built from the spectrum of A^{-1} # B.
PropertyReport check_sandwich(const Matrix& a, const Matrix& b, double t, double s);

/// Determinant identities and inequalities along all three mean curves,
/// including extended parameters.
PropertyReport check_det(const Matrix& a, const Matrix& b,
                         const std::vector<double>& t_grid);

/// Geodesic re-parameterization laws: exact for the spectral geometric mean,
/// conditional on the near order for the Wasserstein mean, plus the pinned
/// commuting counterexample where the unconditional law fails.
PropertyReport check_geodesic_laws(const Matrix& a, const Matrix& b, double s,
                                   double u, double t);

/// The five-term inverse-mean ordering sequence and the inverse-equality
/// characterization of the Wasserstein mean.
PropertyReport check_inverse_relations(const Matrix& a, const Matrix& b, double t);

enum class PowerHypothesis { near, loewner, log_loewner, bound_diamond, bound_natural };

/// Near order under matrix powers and monotone eigenvalue curves of the
/// powered means; bound modes verify the scalar ceiling corollaries.
PropertyReport check_power_curves(const Matrix& a, const Matrix& b, double p,
                                  const std::vector<double>& t_grid,
                                  PowerHypothesis mode);

/// Congruence characterization of the near order for commuting symmetric
/// P, Q: I <= P^{-1}Q iff PAP nears QAQ; PD specialization with P <= Q.
PropertyReport check_congruence_near(const Matrix& a, const Matrix& p,
                                     const Matrix& q);

/// Mixed sharp/mean identities, the Loewner comparisons between them, the
/// cancellation property, and the A <= B criteria.
PropertyReport check_cross_identities(const Matrix& a, const Matrix& b,
                                        const Matrix& c, double t, double s);

/// Pairwise agreement of the three Wasserstein evaluation forms.
PropertyReport check_wasserstein_forms(const Matrix& a, const Matrix& b, double t,
                                       double tol = 1e-9);

/// All fixed numeric instances, reproduced at reference precision.
PropertyReport check_golden_examples();

/// Pinned regression fixture: a triple where the near order fails to be
/// transitive.
PropertyReport check_non_transitivity();
const Matrix& non_transitive_a();
const Matrix& non_transitive_b();
const Matrix& non_transitive_c();

// ---- suite runner -------------------------------------------------------

struct SuiteConfig {
    int trials = 200;
    uint64_t seed = 1;
    int n = 3;
    double kappa = 100.0;
};

std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

/// Runs one registered suite (or every suite for "all"). Reports come back
/// sorted by property-id then seed; the parallel runner partitions trials
/// across threads and produces the identical sequence.
std::vector<PropertyReport> run_suite(const std::string& name, const SuiteConfig& cfg,
                                      bool parallel = true);

struct SuiteSummary {
    int total = 0;
    int holds = 0;
    int fails = 0;
    int indeterminate = 0;
    int skipped = 0;
    long sub_checks = 0;
    long sub_indeterminate = 0;
};

SuiteSummary summarize(const std::vector<PropertyReport>& reports);

}  // namespace opmean
