#include "opmean/orders.hpp"

#include <algorithm>
#include <limits>

#include "opmean/means.hpp"

namespace opmean {

const char* to_string(OrderRelationKind k) {
    switch (k) {
        case OrderRelationKind::Loewner: return "Loewner";
        case OrderRelationKind::Near: return "Near";
        case OrderRelationKind::EigEntrywise: return "EigEntrywise";
        case OrderRelationKind::WeakLogMajorization: return "WeakLogMajorization";
        case OrderRelationKind::LogMajorization: return "LogMajorization";
        default: return "NoRelation";
    }
}

namespace {

/// Identical inputs compare as an exact equality: holds with margin 0. This
/// keeps equality instances (the common case in theorem checks) out of the
/// indeterminate band.
bool bit_identical(const Matrix& a, const Matrix& b) {
    return a.dim() == b.dim() && a.data() == b.data();
}

OrderVerdict banded(double margin, double band, int witness = -1) {
    OrderVerdict v;
    v.margin = margin;
    v.witness = witness;
    if (margin == 0.0 || margin >= band)
        v.verdict = Verdict::holds;
    else if (margin < -band)
        v.verdict = Verdict::fails;
    else
        v.verdict = Verdict::indeterminate;
    return v;
}

std::vector<double> pd_eigenvalues(const Matrix& m) {
    SpectralDecomposition d = eigh(m);
    const double floor = kPdFloorRel * std::max(d.max_eigenvalue(), 0.0);
    if (d.max_eigenvalue() <= 0.0 || d.min_eigenvalue() <= floor)
        throw NotPositiveDefinite("order comparison requires positive definite inputs");
    return d.eigenvalues;
}

}  // namespace

OrderVerdict loewner_cmp(const Matrix& a, const Matrix& b, const Tolerance& tol) {
    require_same_dim(a, b);
    if (bit_identical(a, b)) return {Verdict::holds, 0.0, -1};
    return is_pd((b - a).symmetrized(), tol);
}

OrderVerdict near_cmp(const Matrix& a, const Matrix& b, const Tolerance& tol) {
    require_same_dim(a, b);
    if (bit_identical(a, b)) return {Verdict::holds, 0.0, -1};
    const Matrix x = sharp(spd_inverse(a), b, 0.5);
    SpectralDecomposition d = eigh(x);
    const double band = tol.abs + tol.rel * std::abs(d.max_eigenvalue());
    return banded(d.min_eigenvalue() - 1.0, band, x.dim() - 1);
}

OrderVerdict eig_entrywise_cmp(const Matrix& a, const Matrix& b, const Tolerance& tol) {
    require_same_dim(a, b);
    if (bit_identical(a, b)) return {Verdict::holds, 0.0, -1};
    const std::vector<double> la = eigh(a).eigenvalues;
    const std::vector<double> lb = eigh(b).eigenvalues;
    double margin = std::numeric_limits<double>::infinity();
    double scale = 0.0;
    int witness = -1;
    for (size_t i = 0; i < la.size(); ++i) {
        scale = std::max({scale, std::abs(la[i]), std::abs(lb[i])});
        const double gap = lb[i] - la[i];
        if (gap < margin) {
            margin = gap;
            witness = static_cast<int>(i);
        }
    }
    return banded(margin, tol.abs + tol.rel * scale, witness);
}

namespace {

OrderVerdict log_majorize_impl(const Matrix& a, const Matrix& b, const Tolerance& tol,
                               bool require_equal_det) {
    require_same_dim(a, b);
    if (bit_identical(a, b)) return {Verdict::holds, 0.0, -1};
    const std::vector<double> la = pd_eigenvalues(a);
    const std::vector<double> lb = pd_eigenvalues(b);
    const int n = a.dim();

    // Strict log-majorization constrains prefixes k = 1..n-1 and demands
    // equality at k = n; the weak form constrains every prefix. Keeping the
    // equality prefix out of the strict margin stops every strict comparison
    // from sitting on the verdict boundary.
    const int margin_prefixes = require_equal_det ? n - 1 : n;
    double sum_a = 0.0, sum_b = 0.0;
    double margin = std::numeric_limits<double>::infinity();
    double scale = 0.0;
    int witness = -1;
    for (int k = 0; k < n; ++k) {
        sum_a += std::log(la[static_cast<size_t>(k)]);
        sum_b += std::log(lb[static_cast<size_t>(k)]);
        scale = std::max({scale, std::abs(sum_a), std::abs(sum_b)});
        const double gap = sum_b - sum_a;
        if (k < margin_prefixes && gap < margin) {
            margin = gap;
            witness = k;
        }
    }
    const double band = tol.abs + tol.rel * scale;
    if (margin_prefixes == 0) margin = 0.0;
    OrderVerdict v = banded(margin, band, witness);
    if (require_equal_det && v.verdict != Verdict::fails &&
        std::abs(sum_b - sum_a) > band) {
        v.verdict = Verdict::fails;
        v.margin = -std::abs(sum_b - sum_a);
        v.witness = n - 1;
    }
    return v;
}

}  // namespace

OrderVerdict weak_log_majorize_cmp(const Matrix& a, const Matrix& b,
                                   const Tolerance& tol) {
    return log_majorize_impl(a, b, tol, false);
}

OrderVerdict log_majorize_cmp(const Matrix& a, const Matrix& b, const Tolerance& tol) {
    return log_majorize_impl(a, b, tol, true);
}

Classification classify(const Matrix& a, const Matrix& b, const Tolerance& tol) {
    Classification c;
    c.weak_log = weak_log_majorize_cmp(a, b, tol);
    c.eig_entrywise = eig_entrywise_cmp(a, b, tol);
    c.near = near_cmp(a, b, tol);
    c.loewner = loewner_cmp(a, b, tol);

    const std::pair<OrderRelationKind, const OrderVerdict*> ladder[] = {
        {OrderRelationKind::WeakLogMajorization, &c.weak_log},
        {OrderRelationKind::EigEntrywise, &c.eig_entrywise},
        {OrderRelationKind::Near, &c.near},
        {OrderRelationKind::Loewner, &c.loewner},
    };
    c.strongest = OrderRelationKind::NoRelation;
    for (const auto& [kind, verdict] : ladder) {
        if (verdict->verdict == Verdict::holds) {
            c.strongest = kind;
        } else if (verdict->verdict == Verdict::indeterminate) {
            c.capped_by_indeterminate = true;
            break;
        } else {
            break;
        }
    }
    return c;
}

}  // namespace opmean
