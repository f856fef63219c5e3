#include "quadric.hpp"

#include <sstream>

#include "errors.hpp"
#include "linalg.hpp"
#include "rng.hpp"

namespace statdisc {

cmat Quadric::levi_combination(const rvec& b) const {
    if (b.size() != d) fail(errc::dimension_mismatch, "direction length != d");
    cmat sum = cmat::Zero(n, n);
    for (Eigen::Index j = 0; j < d; ++j) sum += b(j) * A[j];
    return sum;
}

Quadric validate_quadric(const std::vector<cmat>& matrices,
                         const Tolerances& tol) {
    if (matrices.empty()) {
        fail(errc::dimension_mismatch, "expected at least one matrix");
    }
    const Eigen::Index n = matrices.front().rows();
    if (n < 1) fail(errc::dimension_mismatch, "matrices must be nonempty");

    Quadric q;
    q.n = n;
    q.d = static_cast<Eigen::Index>(matrices.size());
    q.A.reserve(matrices.size());
    for (std::size_t j = 0; j < matrices.size(); ++j) {
        const cmat& m = matrices[j];
        if (m.rows() != n || m.cols() != n) {
            fail(errc::dimension_mismatch, "matrices must all be square of equal size");
        }
        const double scale = scale_of({max_norm(m)});
        const double deviation = max_norm(cmat(m - m.adjoint()));
        if (deviation > tol.hermitian * scale) {
            std::ostringstream msg;
            msg << "matrix " << j + 1 << " is not Hermitian (deviation " << deviation
                << " > " << tol.hermitian * scale << ")";
            fail(errc::non_hermitian_input, msg.str());
        }
        q.A.push_back(hermitian_part(m));
    }
    return q;
}

namespace {

double direction_quality(const Quadric& q, const rvec& b) {
    return sigma_min(q.levi_combination(b));
}

} // namespace

LeviDirection find_levi_direction(const Quadric& q, int trials,
                                  std::uint64_t seed, const Tolerances& tol) {
    rvec best;
    double best_sigma = -1.0;
    auto consider = [&](const rvec& candidate) {
        const double s = direction_quality(q, candidate);
        if (s > best_sigma) {
            best_sigma = s;
            best = candidate;
        }
    };

    for (Eigen::Index j = 0; j < q.d; ++j) {
        rvec axis = rvec::Zero(q.d);
        axis(j) = 1.0;
        consider(axis);
        axis(j) = -1.0;
        consider(axis);
    }
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        rvec candidate = rng.real_vector(q.d);
        const double norm = candidate.norm();
        if (norm == 0.0) continue;
        consider(rvec(candidate / norm));
    }

    const double scale = scale_of({max_norm(q.levi_combination(best))});
    if (best_sigma <= tol.invertibility * scale) {
        std::ostringstream msg;
        msg << "no direction with invertible Levi combination found after " << trials
            << " samples plus axes (best smallest singular value " << best_sigma
            << "); this is inconclusive, not a proof of degeneracy";
        fail(errc::no_direction_found, msg.str());
    }
    return LeviDirection{best, best_sigma};
}

namespace {

/// t(D0)bar A^{-1} D0 with D0 column j = A_j V; shared by both certificates.
cmat nondegeneracy_form(const Quadric& q, const rvec& b0, const cvec& V,
                        const Tolerances& tol) {
    if (b0.size() != q.d) fail(errc::dimension_mismatch, "b0 length != d");
    if (V.size() != q.n) fail(errc::dimension_mismatch, "V length != n");
    const cmat A = q.levi_combination(b0);
    const double scale = scale_of({max_norm(A)});
    if (sigma_min(A) <= tol.invertibility * scale) {
        fail(errc::singular_levi_direction,
             "sum b0_j A_j fails the invertibility tolerance");
    }
    cmat D0(q.n, q.d);
    for (Eigen::Index j = 0; j < q.d; ++j) D0.col(j) = q.A[j] * V;
    const cmat AinvD0 = A.partialPivLu().solve(D0);
    return D0.adjoint() * AinvD0;
}

} // namespace

JacobianReport is_d_nondegenerate(const Quadric& q, const rvec& b0,
                                  const cvec& V, const Tolerances& tol) {
    return make_report(rmat(nondegeneracy_form(q, b0, V, tol).real()), tol);
}

JacobianReport is_fully_nondegenerate(const Quadric& q, const rvec& b0,
                                      const cvec& V, const Tolerances& tol) {
    return make_report(nondegeneracy_form(q, b0, V, tol), tol);
}

rvec evaluate_rho(const Quadric& q, const cvec& z, const cvec& w) {
    if (z.size() != q.n) fail(errc::dimension_mismatch, "z length != n");
    if (w.size() != q.d) fail(errc::dimension_mismatch, "w length != d");
    rvec rho(q.d);
    for (Eigen::Index j = 0; j < q.d; ++j) {
        const cxd form = z.dot(q.A[j] * z);  // t(z)bar A_j z
        rho(j) = w(j).real() - form.real();
    }
    return rho;
}

} // namespace statdisc
