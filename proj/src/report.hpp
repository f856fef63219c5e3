#pragma once

#include <optional>

#include "tolerances.hpp"
#include "types.hpp"

namespace statdisc {

/// Invertibility certificate for a criterion matrix. For complex criteria
/// the `matrix` field holds the interleaved (Re, Im) realification and
/// `complex_matrix` the original; singular values and the verdict are those
/// of the criterion itself.
struct JacobianReport {
    rmat matrix;
    std::optional<cmat> complex_matrix;
    rvec singular_values;  // descending
    double sigma_min = 0.0;
    double condition_number = 0.0;  // +inf when singular
    double scale = 1.0;             // 1 + max-norm of the criterion matrix
    double threshold = 0.0;         // sigma_min must exceed this
    bool invertible = false;
};

JacobianReport make_report(const rmat& criterion, const Tolerances& tol = {});
JacobianReport make_report(const cmat& criterion, const Tolerances& tol = {});

} // namespace statdisc
