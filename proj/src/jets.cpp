#include "jets.hpp"

#include <cmath>

#include "errors.hpp"
#include "linalg.hpp"

namespace statdisc {

Jet1 jet1(const StationaryDisc& disc) {
    const Eigen::Index n = disc.q.n;
    const cmat I = cmat::Identity(n, n);
    const cvec& V = disc.params.V;

    Jet1 jet;
    jet.h_prime = -(I - disc.fact.X).partialPivLu().solve(V);
    jet.g_prime = cvec(disc.q.d);
    for (Eigen::Index j = 0; j < disc.q.d; ++j) {
        jet.g_prime(j) = -2.0 * V.dot(disc.fact.K[j] * V);
    }
    const rvec b0 = disc.fact.b0();
    jet.gtilde_prime = cvec(disc.q.d);
    for (Eigen::Index j = 0; j < disc.q.d; ++j) {
        jet.gtilde_prime(j) = 0.5 * (b0(j) - cxd(0.0, 2.0 * disc.fact.a(j).imag()));
    }
    return jet;
}

Jet1 jet1_numeric(const StationaryDisc& disc, double step) {
    if (!(step > 0.0) || step > 0.25) {
        fail(errc::invalid_argument, "step must lie in (0, 0.25]");
    }
    const auto radial = [&](double t) {
        // one-sided difference (f(1) - f(1-t)) / t; f(1) = 0, gtilde(1) = b0/2
        const cxd zeta(1.0 - t, 0.0);
        const DiscValue f = eval_disc(disc, zeta);
        const cvec gt = eval_gtilde(disc, zeta);
        const cvec gt1 = 0.5 * disc.fact.b0().cast<cxd>();
        Jet1 diff;
        diff.h_prime = -f.h / t;
        diff.g_prime = -f.g / t;
        diff.gtilde_prime = (gt1 - gt) / t;
        return diff;
    };
    const Jet1 d1 = radial(step);
    const Jet1 d2 = radial(2.0 * step);
    Jet1 jet;  // Richardson: 2 D(t) - D(2t)
    jet.h_prime = 2.0 * d1.h_prime - d2.h_prime;
    jet.g_prime = 2.0 * d1.g_prime - d2.g_prime;
    jet.gtilde_prime = 2.0 * d1.gtilde_prime - d2.gtilde_prime;
    return jet;
}

cmat jet_block_derivative(const Quadric& q, const PencilFactorization& fact,
                          const cmat& dX_s, int j, const Tolerances& tol) {
    if (j < 0 || j >= q.d) fail(errc::invalid_argument, "index j out of range");
    const cmat I = cmat::Identity(q.n, q.n);
    const cmat inner = stein_solve(cmat(fact.K[j] * dX_s), fact.X, tol);
    const cmat ImXadj = I - fact.X.adjoint();
    return -2.0 * hermitian_part(cmat(ImXadj * ImXadj * inner));
}

cmat jet_block_derivative(const Quadric& q, const cvec& a, const rvec& b0,
                          int j, int s, const Tolerances& tol) {
    const PencilFactorization fact = factorize(q, a, b0, tol);
    const cmat dX = solve_dx(q, fact, s, tol);
    return jet_block_derivative(q, fact, dX, j, tol);
}

JacobianReport jet_map_jacobian(const Quadric& q, const cvec& a,
                                const rvec& b0, const cvec& V,
                                const Tolerances& tol) {
    if (V.size() != q.n) fail(errc::dimension_mismatch, "V length != n");
    rmat criterion(q.d, q.d);
    if (max_norm(a) == 0.0) {
        // 2 Re(t(V)bar A_j A_sum^{-1} A_s V)
        const cmat A_sum = q.levi_combination(b0);
        const auto lu = A_sum.partialPivLu();
        for (Eigen::Index s = 0; s < q.d; ++s) {
            const cvec column = lu.solve(q.A[s] * V);
            for (Eigen::Index j = 0; j < q.d; ++j) {
                criterion(j, s) = 2.0 * V.dot(q.A[j] * column).real();
            }
        }
    } else {
        const PencilFactorization fact = factorize(q, a, b0, tol);
        for (Eigen::Index s = 0; s < q.d; ++s) {
            const cmat dX = solve_dx(q, fact, static_cast<int>(s), tol);
            for (Eigen::Index j = 0; j < q.d; ++j) {
                const cmat block =
                    jet_block_derivative(q, fact, dX, static_cast<int>(j), tol);
                criterion(j, s) = V.dot(block * V).real();
            }
        }
    }
    return make_report(criterion, tol);
}

namespace {

/// t(V)bar (I - t(X)bar) K_j (I - X) V for all j; real-valued.
rvec jet_block_values(const Quadric& q, const cvec& a, const rvec& b0,
                      const cvec& V, const Tolerances& tol) {
    const PencilFactorization fact = factorize(q, a, b0, tol);
    const cmat I = cmat::Identity(q.n, q.n);
    const cvec W = (I - fact.X) * V;
    rvec values(q.d);
    for (Eigen::Index j = 0; j < q.d; ++j) {
        values(j) = W.dot(fact.K[j] * W).real();
    }
    return values;
}

/// t(V)bar K_j (I - X) V for all j; complex-valued.
cvec center_block_values(const Quadric& q, const cvec& a, const rvec& b0,
                         const cvec& V, const Tolerances& tol) {
    const PencilFactorization fact = factorize(q, a, b0, tol);
    const cmat I = cmat::Identity(q.n, q.n);
    const cvec W = (I - fact.X) * V;
    cvec values(q.d);
    for (Eigen::Index j = 0; j < q.d; ++j) values(j) = V.dot(fact.K[j] * W);
    return values;
}

} // namespace

rmat jet_map_jacobian_numeric(const Quadric& q, const cvec& a, const rvec& b0,
                              const cvec& V, double step,
                              const Tolerances& tol) {
    rmat jac(q.d, q.d);
    for (Eigen::Index s = 0; s < q.d; ++s) {
        const double h =
            step > 0.0 ? step : tol.fd_step * (1.0 + std::abs(a(s)));
        cvec forward = a, backward = a;
        forward(s) += h;
        backward(s) -= h;
        const rvec fp = jet_block_values(q, forward, b0, V, tol);
        const rvec fm = jet_block_values(q, backward, b0, V, tol);
        jac.col(s) = (fp - fm) / (2.0 * h);
    }
    return jac;
}

CenterValue center_map(const StationaryDisc& disc) {
    const cmat I = cmat::Identity(disc.q.n, disc.q.n);
    const cvec W = (I - disc.fact.X) * disc.params.V;
    CenterValue value;
    value.h0 = disc.params.V;
    value.g0 = cvec(disc.q.d);
    for (Eigen::Index j = 0; j < disc.q.d; ++j) {
        value.g0(j) = 2.0 * disc.params.V.dot(disc.fact.K[j] * W);
    }
    return value;
}

JacobianReport center_jacobian(const Quadric& q, const cvec& a,
                               const rvec& b0, const cvec& V,
                               const Tolerances& tol) {
    if (V.size() != q.n) fail(errc::dimension_mismatch, "V length != n");
    cmat criterion(q.d, q.d);
    if (max_norm(a) == 0.0) {
        // (t(V)bar A_j A_sum^{-1} A_s V)_{j,s}
        const cmat A_sum = q.levi_combination(b0);
        const auto lu = A_sum.partialPivLu();
        for (Eigen::Index s = 0; s < q.d; ++s) {
            const cvec column = lu.solve(q.A[s] * V);
            for (Eigen::Index j = 0; j < q.d; ++j) {
                criterion(j, s) = V.dot(q.A[j] * column);
            }
        }
    } else {
        for (Eigen::Index s = 0; s < q.d; ++s) {
            const double h = tol.fd_step * (1.0 + std::abs(a(s)));
            cvec forward = a, backward = a;
            forward(s) += h;
            backward(s) -= h;
            const cvec fp = center_block_values(q, forward, b0, V, tol);
            const cvec fm = center_block_values(q, backward, b0, V, tol);
            criterion.col(s) = (fp - fm) / (2.0 * h);
        }
    }
    return make_report(criterion, tol);
}

NecessityReport necessity_check(const Quadric& q, const cvec& a,
                                const rvec& b0, const cvec& V,
                                const Tolerances& tol) {
    NecessityReport report;
    report.jet_jacobian = jet_map_jacobian(q, a, b0, V, tol);
    const cmat X = solve_x(q, a, b0, tol);
    report.minimality = is_stationary_minimal(q, X, V, tol);
    report.consistent = !(report.jet_jacobian.invertible && !report.minimality.minimal);
    return report;
}

} // namespace statdisc
