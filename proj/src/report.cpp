#include "report.hpp"

#include <limits>

#include "linalg.hpp"

namespace statdisc {

namespace {

JacobianReport finish(JacobianReport r, const rvec& sv, double scale,
                      const Tolerances& tol) {
    r.singular_values = sv;
    r.sigma_min = sv.size() > 0 ? sv(sv.size() - 1) : 0.0;
    r.scale = scale;
    r.threshold = tol.invertibility * scale;
    r.invertible = r.sigma_min > r.threshold;
    r.condition_number = r.sigma_min > 0.0
                             ? sv(0) / r.sigma_min
                             : std::numeric_limits<double>::infinity();
    return r;
}

} // namespace

JacobianReport make_report(const rmat& criterion, const Tolerances& tol) {
    JacobianReport r;
    r.matrix = criterion;
    return finish(std::move(r), singular_values(criterion),
                  scale_of({max_norm(criterion)}), tol);
}

JacobianReport make_report(const cmat& criterion, const Tolerances& tol) {
    JacobianReport r;
    r.matrix = realify_interleaved(criterion);
    r.complex_matrix = criterion;
    return finish(std::move(r), singular_values(criterion),
                  scale_of({max_norm(criterion)}), tol);
}

} // namespace statdisc
