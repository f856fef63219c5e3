#pragma once

#include "disc.hpp"
#include "minimality.hpp"
#include "pencil.hpp"
#include "quadric.hpp"
#include "report.hpp"
#include "types.hpp"

namespace statdisc {

/// Derivative data of the lift at zeta = 1. htilde'(1) is omitted: it is
/// t(h'(1))bar (sum b0_j A_j), reconstructible from h'(1) by that formula.
struct Jet1 {
    cvec h_prime;       // -(I - X)^{-1} V
    cvec g_prime;       // (-2 t(V)bar K_j V)_j
    cvec gtilde_prime;  // (b0 - 2i Im a) / 2
};

Jet1 jet1(const StationaryDisc& disc);

/// One-sided radial differences along zeta = 1 - t for t in {step, 2 step},
/// Richardson-extrapolated. Accuracy contract: step in [1e-8, 1e-3] gives
/// 1e-6 relative agreement with jet1; larger steps are accepted to let
/// callers observe the error growth.
Jet1 jet1_numeric(const StationaryDisc& disc, double step);

/// d x d real criterion matrix of the normalized 1-jet map:
/// (d/d Re a_s of t(V)bar (I - t(X)bar) K_j (I - X) V)_{j,s}.
/// At a = 0 this is 2 Re(t(V)bar A_j A_sum^{-1} A_s V); otherwise assembled
/// from jet_block_derivative.
JacobianReport jet_map_jacobian(const Quadric& q, const cvec& a,
                                const rvec& b0, const cvec& V,
                                const Tolerances& tol = {});

/// Central finite-difference oracle for jet_map_jacobian.
rmat jet_map_jacobian_numeric(const Quadric& q, const cvec& a, const rvec& b0,
                              const cvec& V, double step = 0.0,
                              const Tolerances& tol = {});

/// d/d Re a_s of the block (I - t(X)bar) K_j (I - X):
/// -2 ((I - t(X)bar)^2 psi^{-1}(K_j X_{Re a_s}))_H, Hermitian by
/// construction. Indices j, s are 0-based.
cmat jet_block_derivative(const Quadric& q, const PencilFactorization& fact,
                          const cmat& dX_s, int j, const Tolerances& tol = {});
cmat jet_block_derivative(const Quadric& q, const cvec& a, const rvec& b0,
                          int j, int s, const Tolerances& tol = {});

/// Center evaluation f(0) = (V, t(V)bar 2 K_j (I - X) V).
struct CenterValue {
    cvec h0;
    cvec g0;
};

CenterValue center_map(const StationaryDisc& disc);

/// Complex d x d criterion of the center map's nontrivial block:
/// at a = 0 the matrix (t(V)bar A_j A_sum^{-1} A_s V)_{j,s}; at a != 0 the
/// central finite difference of t(V)bar K_j (I - X) V in Re a_s. The report
/// carries the complex matrix plus its interleaved realification.
JacobianReport center_jacobian(const Quadric& q, const cvec& a,
                               const rvec& b0, const cvec& V,
                               const Tolerances& tol = {});

/// Cross-check of the necessity theorem: an invertible 1-jet Jacobian with
/// failed stationary minimality contradicts the theory and therefore flags
/// an implementation bug.
struct NecessityReport {
    JacobianReport jet_jacobian;
    MinimalityCertificate minimality;
    bool consistent = false;
};

NecessityReport necessity_check(const Quadric& q, const cvec& a,
                                const rvec& b0, const cvec& V,
                                const Tolerances& tol = {});

} // namespace statdisc
