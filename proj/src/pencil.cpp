#include "pencil.hpp"

#include <cmath>
#include <sstream>

#include "errors.hpp"
#include "log.hpp"

namespace statdisc {

namespace {

rvec effective_b(const cvec& a, const rvec& b0) {
    return b0 - 2.0 * a.real();
}

double equation_residual(const cmat& P, const cmat& A_sum, const cmat& X) {
    return (P * X * X + A_sum * X + P.adjoint()).norm();
}

double equation_scale(const cmat& P, const cmat& A_sum) {
    return scale_of({max_norm(P), max_norm(A_sum)});
}

} // namespace

cmat solve_x(const Quadric& q, const cvec& a, const rvec& b0,
             const Tolerances& tol) {
    if (a.size() != q.d) fail(errc::dimension_mismatch, "a length != d");
    if (b0.size() != q.d) fail(errc::dimension_mismatch, "b0 length != d");

    const rvec b = effective_b(a, b0);
    cmat P = cmat::Zero(q.n, q.n);
    for (Eigen::Index j = 0; j < q.d; ++j) P += a(j) * q.A[j];
    const cmat A_sum = q.levi_combination(b);

    const double scale = equation_scale(P, A_sum);
    if (sigma_min(A_sum) <= tol.invertibility * scale) {
        fail(errc::singular_levi_direction,
             "sum (b0 - a - conj(a))_j A_j fails the invertibility tolerance");
    }
    const auto lu = A_sum.partialPivLu();
    const cmat Pbar_t = P.adjoint();

    cmat X = cmat::Zero(q.n, q.n);
    bool converged = false;
    int iterations = 0;
    for (; iterations < tol.max_iterations; ++iterations) {
        const cmat next = -lu.solve(P * X * X + Pbar_t);
        const double step = (next - X).norm();
        X = next;
        if (step <= tol.fixed_point * scale) {
            converged = true;
            break;
        }
        if (!std::isfinite(step)) break;
    }
    if (!converged) {
        std::ostringstream msg;
        msg << "fixed-point iteration did not converge in " << tol.max_iterations
            << " steps (a outside the contraction regime)";
        fail(errc::not_converged, msg.str());
    }
    log_debug("solve_x: fixed point converged in " + std::to_string(iterations + 1) +
              " iterations");

    // Newton tightening: B dX + P dX X = -(P X^2 + A_sum X + t(P)bar).
    for (int k = 0; k < 2; ++k) {
        const cmat residual = P * X * X + A_sum * X + Pbar_t;
        if (residual.norm() <= 1e-2 * tol.residual * scale) break;
        const cmat B = A_sum + P * X;
        const cmat dX = solve_displacement(B, P, X, cmat(-residual), tol);
        const cmat candidate = X + dX;
        if (equation_residual(P, A_sum, candidate) < residual.norm()) X = candidate;
    }

    const double x_norm = op_norm(X);
    if (x_norm > 1.0 - tol.x_norm_margin) {
        std::ostringstream msg;
        msg << "||X||_2 = " << x_norm << " exceeds 1 - " << tol.x_norm_margin
            << " (outside the contractive regime)";
        fail(errc::norm_too_large, msg.str());
    }
    const double residual = equation_residual(P, A_sum, X);
    if (residual > tol.residual * scale) {
        std::ostringstream msg;
        msg << "quadratic matrix equation residual " << residual << " exceeds "
            << tol.residual * scale;
        fail(errc::not_converged, msg.str());
    }
    return X;
}

cmat stein_apply(const cmat& M, const cmat& X) {
    if (M.rows() != M.cols() || X.rows() != X.cols() || M.rows() != X.rows()) {
        fail(errc::dimension_mismatch, "stein_apply expects square matrices of equal size");
    }
    return M - X.adjoint() * M * X;
}

cmat stein_solve(const cmat& M, const cmat& X, const Tolerances& tol) {
    if (M.rows() != M.cols() || X.rows() != X.cols() || M.rows() != X.rows()) {
        fail(errc::dimension_mismatch, "stein_solve expects square matrices of equal size");
    }
    const double x_norm = op_norm(X);
    if (x_norm >= 1.0) {
        std::ostringstream msg;
        msg << "||X||_2 = " << x_norm << " >= 1: Stein operator not invertible by contraction";
        fail(errc::spectral_radius_too_large, msg.str());
    }
    const Eigen::Index n = M.rows();
    // vec(t(X)bar S X) = (t(X) kron t(X)bar) vec(S)
    const cmat system = cmat::Identity(n * n, n * n) -
                        kron(X.transpose(), X.adjoint());
    const cvec solution = system.partialPivLu().solve(vectorize(M));
    const cmat S = unvectorize(solution, n, n);
    const double scale = scale_of({max_norm(M), max_norm(S)});
    const double residual = max_norm(cmat(S - X.adjoint() * S * X - M));
    if (residual > tol.stein_residual * scale) {
        std::ostringstream msg;
        msg << "Stein solve residual " << residual << " exceeds "
            << tol.stein_residual * scale;
        fail(errc::singular_linear_system, msg.str());
    }
    return S;
}

cmat stein_solve_series(const cmat& M, const cmat& X, const Tolerances& tol) {
    const double x_norm = op_norm(X);
    if (x_norm >= 1.0) {
        fail(errc::spectral_radius_too_large,
             "||X||_2 >= 1: the Stein series does not converge");
    }
    const double scale = scale_of({max_norm(M)});
    cmat sum = M;
    cmat term = M;
    const cmat Xadj = X.adjoint();
    constexpr int max_terms = 200000;
    for (int r = 1; r < max_terms; ++r) {
        term = Xadj * term * X;
        sum += term;
        if (max_norm(term) < tol.series_term * scale) return sum;
    }
    fail(errc::not_converged, "Stein series did not converge within the term cap");
}

cmat solve_displacement(const cmat& B, const cmat& P, const cmat& X,
                        const cmat& rhs, const Tolerances& tol) {
    const Eigen::Index n = B.rows();
    // vec(B Y) = (I kron B) vec(Y); vec(P Y X) = (t(X) kron P) vec(Y)
    const cmat system = kron(cmat::Identity(n, n), B) + kron(X.transpose(), P);
    const cvec solution = system.partialPivLu().solve(vectorize(rhs));
    const cmat Y = unvectorize(solution, n, n);
    const double scale = scale_of({max_norm(rhs), max_norm(Y), max_norm(B)});
    const double residual = max_norm(cmat(B * Y + P * Y * X - rhs));
    if (residual > tol.stein_residual * scale) {
        std::ostringstream msg;
        msg << "displacement system residual " << residual << " exceeds "
            << tol.stein_residual * scale << " (singular system)";
        fail(errc::singular_linear_system, msg.str());
    }
    return Y;
}

PencilFactorization factorize(const Quadric& q, const cvec& a, const rvec& b0,
                              const Tolerances& tol) {
    PencilFactorization fact;
    fact.a = a;
    fact.b = effective_b(a, b0);
    fact.X = solve_x(q, a, b0, tol);
    fact.P = cmat::Zero(q.n, q.n);
    for (Eigen::Index j = 0; j < q.d; ++j) fact.P += a(j) * q.A[j];
    fact.A_sum = q.levi_combination(fact.b);
    fact.B = fact.A_sum + fact.P * fact.X;
    fact.x_norm = op_norm(fact.X);
    fact.residual = equation_residual(fact.P, fact.A_sum, fact.X);

    const double scale = equation_scale(fact.P, fact.A_sum);
    const double b_asym = max_norm(cmat(fact.B - fact.B.adjoint()));
    if (b_asym > tol.hermitian * scale_of({max_norm(fact.B)})) {
        std::ostringstream msg;
        msg << "B = A_sum + P X deviates from Hermitian by " << b_asym;
        fail(errc::factorization_residual, msg.str());
    }
    if (sigma_min(fact.B) <= tol.invertibility * scale_of({max_norm(fact.B)})) {
        fail(errc::factorization_residual, "B fails the invertibility tolerance");
    }

    fact.K.reserve(q.d);
    for (Eigen::Index j = 0; j < q.d; ++j) {
        cmat Kj = stein_solve(q.A[j], fact.X, tol);
        const double k_scale = scale_of({max_norm(Kj), max_norm(q.A[j])});
        if (max_norm(cmat(Kj - Kj.adjoint())) > tol.stein_residual * k_scale) {
            fail(errc::factorization_residual, "K_j deviates from Hermitian");
        }
        fact.K.push_back(hermitian_part(Kj));
    }

    // Pencil identity on 64 roots of unity.
    const cmat I = cmat::Identity(q.n, q.n);
    double worst = 0.0;
    for (int k = 0; k < 64; ++k) {
        const double angle = 6.28318530717958647692 * k / 64.0;
        const cxd zeta = std::polar(1.0, angle);
        cmat lhs = cmat::Zero(q.n, q.n);
        for (Eigen::Index j = 0; j < q.d; ++j) {
            lhs += (fact.a(j) * std::conj(zeta) + fact.b(j) +
                    std::conj(fact.a(j)) * zeta) *
                   q.A[j];
        }
        const cmat rhs = (I - std::conj(zeta) * fact.X.adjoint()) * fact.B *
                         (I - zeta * fact.X);
        worst = std::max(worst, max_norm(cmat(lhs - rhs)));
    }
    fact.boundary_error = worst;
    if (worst > tol.boundary_identity * scale) {
        std::ostringstream msg;
        msg << "pencil boundary identity error " << worst << " exceeds "
            << tol.boundary_identity * scale;
        fail(errc::factorization_residual, msg.str());
    }
    return fact;
}

cmat solve_dx(const Quadric& q, const PencilFactorization& fact, int s,
              const Tolerances& tol) {
    if (s < 0 || s >= q.d) fail(errc::invalid_argument, "derivative index out of range");
    const cmat I = cmat::Identity(q.n, q.n);
    const cmat rhs = -q.A[s] * (I - fact.X) * (I - fact.X);
    return solve_displacement(fact.B, fact.P, fact.X, rhs, tol);
}

} // namespace statdisc
