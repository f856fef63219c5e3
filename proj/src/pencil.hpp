#pragma once

#include <vector>

#include "linalg.hpp"  // hermitian_part
#include "quadric.hpp"
#include "tolerances.hpp"
#include "types.hpp"

namespace statdisc {

/// Factorization of the Hermitian pencil
///   sum_j (a_j conj(zeta) + b_j + conj(a_j) zeta) A_j
///     = (I - conj(zeta) t(X)bar) B (I - zeta X),  |zeta| = 1,
/// where X is the contractive solution of P X^2 + A_sum X + t(P)bar = 0,
/// B = A_sum + P X is Hermitian invertible, and K_j inverts the Stein
/// operator on A_j.
struct PencilFactorization {
    cvec a;              // complex parameter, length d
    rvec b;              // b = b0 - a - conj(a), real
    cmat X;              // ||X||_2 < 1
    cmat B;              // Hermitian, invertible
    cmat P;              // sum a_j A_j
    cmat A_sum;          // sum b_j A_j
    std::vector<cmat> K; // K_j with K_j - t(X)bar K_j X = A_j
    double x_norm = 0.0;
    double residual = 0.0;           // ||P X^2 + A_sum X + t(P)bar||_F
    double boundary_error = 0.0;     // max pencil mismatch on 64 roots of unity

    rvec b0() const { return b + 2.0 * a.real(); }
};

/// Contractive solution of P X^2 + A_sum X + t(P)bar = 0 with
/// b = b0 - a - conj(a). Fixed-point iteration from X = 0 followed by a
/// Newton tightening step.
cmat solve_x(const Quadric& q, const cvec& a, const rvec& b0,
             const Tolerances& tol = {});

/// Stein operator M -> M - t(X)bar M X.
cmat stein_apply(const cmat& M, const cmat& X);

/// Inverse Stein operator via a dense n^2 x n^2 linear solve.
cmat stein_solve(const cmat& M, const cmat& X, const Tolerances& tol = {});

/// Independent oracle for stein_solve: the truncated series
/// sum_r t(X)bar^r M X^r, stopped when a term drops below series_term*scale.
cmat stein_solve_series(const cmat& M, const cmat& X,
                        const Tolerances& tol = {});

PencilFactorization factorize(const Quadric& q, const cvec& a, const rvec& b0,
                              const Tolerances& tol = {});

/// d X / d Re a_s at the factorization's parameters (s is 0-based): solves
/// B dX + P dX X = -A_s (I - X)^2. At a = 0 this reduces to -A_sum^{-1} A_s.
cmat solve_dx(const Quadric& q, const PencilFactorization& fact, int s,
              const Tolerances& tol = {});

/// Solves B Y + P Y X = RHS by Kronecker vectorization (shared by the
/// Newton refinement and solve_dx).
cmat solve_displacement(const cmat& B, const cmat& P, const cmat& X,
                        const cmat& rhs, const Tolerances& tol = {});

} // namespace statdisc
