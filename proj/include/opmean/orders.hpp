#pragma once

#include "opmean/linalg.hpp"
#include "opmean/matrix.hpp"

namespace opmean {

/// The order relations, ranked by strength:
/// Loewner > Near > EigEntrywise > WeakLogMajorization.
enum class OrderRelationKind {
    Loewner,
    Near,
    EigEntrywise,
    WeakLogMajorization,
    LogMajorization,
    NoRelation,
};

const char* to_string(OrderRelationKind k);

/// A <= B iff B - A is PSD. margin = lambda_min(B - A).
OrderVerdict loewner_cmp(const Matrix& a, const Matrix& b, const Tolerance& tol = {});

/// A precedes B in the near order iff A^{-1} # B >= I.
/// margin = lambda_min(A^{-1} # B) - 1.
OrderVerdict near_cmp(const Matrix& a, const Matrix& b, const Tolerance& tol = {});

/// lambda_i(A) <= lambda_i(B) for every i (descending order).
/// margin = min_i(lambda_i(B) - lambda_i(A)), witness = argmin.
OrderVerdict eig_entrywise_cmp(const Matrix& a, const Matrix& b,
                               const Tolerance& tol = {});

/// Weak log-majorization: every prefix product of descending eigenvalues of A
/// is dominated by that of B. Compared in the log domain.
OrderVerdict weak_log_majorize_cmp(const Matrix& a, const Matrix& b,
                                   const Tolerance& tol = {});

/// Log-majorization: weak log-majorization plus equal total log-products.
OrderVerdict log_majorize_cmp(const Matrix& a, const Matrix& b,
                              const Tolerance& tol = {});

struct Classification {
    OrderRelationKind strongest = OrderRelationKind::NoRelation;
    /// Set when an indeterminate verdict capped the ascent; strongest then
    /// reports the last definite level.
    bool capped_by_indeterminate = false;
    OrderVerdict loewner, near, eig_entrywise, weak_log;
};

/// Strongest relation that holds, ascending the implication chain
/// weak-log -> entrywise -> near -> Loewner.
Classification classify(const Matrix& a, const Matrix& b, const Tolerance& tol = {});

}  // namespace opmean
