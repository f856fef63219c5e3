#include "minimality.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "errors.hpp"
#include "linalg.hpp"
#include "pencil.hpp"
#include "rng.hpp"

namespace statdisc {

namespace {

std::vector<cvec> orbit_vectors(const cmat& X, const cvec& V) {
    const Eigen::Index count = 2 * X.rows();
    std::vector<cvec> vectors;
    vectors.reserve(count);
    cvec current = V;
    for (Eigen::Index r = 0; r < count; ++r) {
        vectors.push_back(current);
        current = X * current;
    }
    return vectors;
}

/// Real (2n * 2n) x d matrix stacking Re/Im of D_r (columns A_s X^r V) over
/// r = 0..2n-1; its real kernel realizes statement ii of the equivalence.
rmat stacked_kernel_matrix(const Quadric& q, const std::vector<cvec>& orbit) {
    const Eigen::Index n = q.n;
    const Eigen::Index rows = static_cast<Eigen::Index>(orbit.size()) * 2 * n;
    rmat stacked(rows, q.d);
    Eigen::Index row = 0;
    for (const cvec& xv : orbit) {
        for (Eigen::Index s = 0; s < q.d; ++s) {
            const cvec col = q.A[s] * xv;
            stacked.block(row, s, n, 1) = col.real();
            stacked.block(row + n, s, n, 1) = col.imag();
        }
        row += 2 * n;
    }
    return stacked;
}

} // namespace

OrbitBasis orbit_basis(const cmat& X, const cvec& V, const Tolerances& tol) {
    if (op_norm(X) >= 1.0) {
        fail(errc::spectral_radius_too_large, "orbit basis requires ||X||_2 < 1");
    }
    OrbitBasis basis;
    basis.vectors = orbit_vectors(X, V);
    const Eigen::Index n = X.rows();
    rmat realified(2 * n, static_cast<Eigen::Index>(basis.vectors.size()));
    double scale_norm = 0.0;
    for (std::size_t r = 0; r < basis.vectors.size(); ++r) {
        realified.block(0, static_cast<Eigen::Index>(r), n, 1) = basis.vectors[r].real();
        realified.block(n, static_cast<Eigen::Index>(r), n, 1) = basis.vectors[r].imag();
        scale_norm = std::max(scale_norm, max_norm(basis.vectors[r]));
    }
    basis.real_dimension = rank_with_threshold(
        realified, tol.invertibility * scale_of({scale_norm}));
    return basis;
}

MinimalityCertificate is_stationary_minimal(const Quadric& q, const cmat& X,
                                            const cvec& V,
                                            const Tolerances& tol) {
    if (V.size() != q.n) fail(errc::dimension_mismatch, "V length != n");
    if (op_norm(X) >= 1.0) {
        fail(errc::spectral_radius_too_large, "minimality test requires ||X||_2 < 1");
    }

    MinimalityCertificate cert;

    // Gram criterion through the inverse Stein operator:
    // sum_r t(X)bar^r A_j A_s X^r = psi^{-1}(A_j A_s).
    rmat gram(q.d, q.d);
    for (Eigen::Index j = 0; j < q.d; ++j) {
        for (Eigen::Index s = 0; s < q.d; ++s) {
            const cmat S = stein_solve(cmat(q.A[j] * q.A[s]), X, tol);
            gram(j, s) = V.dot(S * V).real();
        }
    }
    cert.gram = 0.5 * (gram + gram.transpose());  // kill rounding asymmetry

    Eigen::SelfAdjointEigenSolver<rmat> eig(cert.gram);
    cert.gram_min_eigenvalue = eig.eigenvalues()(0);
    const double gram_scale = scale_of({max_norm(cert.gram)});
    const bool gram_verdict =
        cert.gram_min_eigenvalue > tol.invertibility * gram_scale;

    // Independent rank criterion on the stacked D_r matrices.
    const std::vector<cvec> orbit = orbit_vectors(X, V);
    const rmat stacked = stacked_kernel_matrix(q, orbit);
    Eigen::JacobiSVD<rmat> svd(stacked, Eigen::ComputeFullV);
    const rvec& sv = svd.singularValues();
    cert.stacked_sigma_min = sv(sv.size() - 1);
    const double stacked_scale = scale_of({max_norm(stacked)});
    const bool rank_verdict =
        cert.stacked_sigma_min > tol.invertibility * stacked_scale;

    if (gram_verdict != rank_verdict) {
        std::ostringstream msg;
        msg << "Gram and rank minimality criteria disagree (gram eigenvalue "
            << cert.gram_min_eigenvalue << ", stacked sigma_min "
            << cert.stacked_sigma_min << ")";
        fail(errc::internal_inconsistency, msg.str());
    }
    cert.minimal = gram_verdict;

    if (!cert.minimal) {
        rvec witness = svd.matrixV().col(svd.matrixV().cols() - 1);
        witness /= witness.norm();
        // The witness must annihilate every A_j-image of the orbit.
        for (const cvec& xv : orbit) {
            cvec combo = cvec::Zero(q.n);
            for (Eigen::Index j = 0; j < q.d; ++j) combo += witness(j) * (q.A[j] * xv);
            if (combo.norm() > tol.witness * stacked_scale) {
                fail(errc::internal_inconsistency,
                     "kernel witness fails to annihilate the orbit");
            }
        }
        cert.kernel_witness = witness;
    }
    return cert;
}

DefectReport is_defective(const StationaryDisc& disc, const Tolerances& tol) {
    DefectReport report;
    report.certificate =
        is_stationary_minimal(disc.q, disc.fact.X, disc.params.V, tol);
    report.defective = !report.certificate.minimal;
    if (!report.defective) return report;

    report.witness = report.certificate.kernel_witness;
    cmat combo = cmat::Zero(disc.q.n, disc.q.n);
    for (Eigen::Index j = 0; j < disc.q.d; ++j) {
        combo += (*report.witness)(j) * disc.q.A[j];
    }
    double worst = 0.0;
    for (int k = 0; k < 64; ++k) {
        const cxd zeta = std::polar(1.0, 6.28318530717958647692 * k / 64.0);
        const DiscValue f = eval_disc(disc, zeta);
        worst = std::max(worst, max_norm(cvec(combo * f.h)));
    }
    report.boundary_residual = worst;
    const double scale = scale_of({max_norm(combo), disc.params.V.norm()});
    if (worst > tol.witness * scale) {
        fail(errc::internal_inconsistency,
             "defect witness lift does not vanish on the boundary");
    }
    return report;
}

EquivalenceReport minimality_equivalences(const Quadric& q, const cvec& a,
                                          const rvec& b0, const cvec& V,
                                          const Tolerances& tol) {
    StationaryDisc disc = build_disc(q, DiscParameters{a, b0, V}, tol);
    const cmat I = cmat::Identity(q.n, q.n);
    const cmat ImX = I - disc.fact.X;

    EquivalenceReport report;
    report.nondefective = !is_defective(disc, tol).defective;
    report.minimal_at_center = is_stationary_minimal(q, disc.fact.X, V, tol).minimal;
    report.minimal_at_derivative0 =
        is_stationary_minimal(q, disc.fact.X, cvec(ImX * V), tol).minimal;
    report.minimal_at_derivative1 =
        is_stationary_minimal(q, disc.fact.X,
                              cvec(ImX.partialPivLu().solve(V)), tol).minimal;
    report.all_agree = report.nondefective == report.minimal_at_center &&
                       report.minimal_at_center == report.minimal_at_derivative0 &&
                       report.minimal_at_derivative0 == report.minimal_at_derivative1;
    if (!report.all_agree) {
        fail(errc::internal_inconsistency,
             "the equivalent minimality statements disagree");
    }
    return report;
}

OpennessReport openness_probe(const Quadric& q, const cvec& a, const rvec& b0,
                              const cvec& V, double radius, int probes,
                              std::uint64_t seed, const Tolerances& tol) {
    if (radius < 0.0) fail(errc::invalid_argument, "radius must be nonnegative");
    if (probes < 0) fail(errc::invalid_argument, "probes must be nonnegative");
    {
        const cmat X = solve_x(q, a, b0, tol);
        if (!is_stationary_minimal(q, X, V, tol).minimal) {
            fail(errc::invalid_argument,
                 "openness probe requires a stationary-minimal starting instance");
        }
    }

    OpennessReport report;
    report.probes = probes;
    const Eigen::Index dim = 3 * q.d;  // Re a, Im a, b0
    for (int p = 0; p < probes; ++p) {
        Rng rng(seed + static_cast<std::uint64_t>(p) + 1);
        rvec direction = rng.real_vector(dim);
        const double norm = direction.norm();
        if (norm > 0.0) direction /= norm;
        const double r =
            radius * std::pow(rng.uniform(), 1.0 / static_cast<double>(dim));
        cvec a_probe = a;
        rvec b0_probe = b0;
        for (Eigen::Index j = 0; j < q.d; ++j) {
            a_probe(j) += r * cxd(direction(j), direction(q.d + j));
            b0_probe(j) += r * direction(2 * q.d + j);
        }
        try {
            const cmat X = solve_x(q, a_probe, b0_probe, tol);
            if (is_stationary_minimal(q, X, V, tol).minimal) ++report.minimal_count;
        } catch (const error&) {
            ++report.solver_failures;
        }
    }
    const int solved = report.probes - report.solver_failures;
    report.fraction =
        solved > 0 ? static_cast<double>(report.minimal_count) / solved : 1.0;
    return report;
}

} // namespace statdisc
