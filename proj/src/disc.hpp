#pragma once

#include "pencil.hpp"
#include "quadric.hpp"
#include "tolerances.hpp"
#include "types.hpp"

namespace statdisc {

struct DiscParameters {
    cvec a;   // complex, length d, small
    rvec b0;  // real, length d, Levi combination invertible
    cvec V;   // complex, length n, unrestricted
};

/// Stationary disc f = (h, g) with lift (htilde, gtilde), pinned to
/// (0, 0, 0, b0/2) at zeta = 1:
///   h(zeta)   = V - zeta (I - zeta X)^{-1} (I - X) V
///   g_j(zeta) = t(V)bar A_j V - 2 t(V)bar A_j zeta (I - zeta X)^{-1}(I - X)V
///             + t(V)bar (I - t(X)bar) K_j (I + 2 zeta X (I - zeta X)^{-1})(I - X)V
///             + iy_j
/// with iy_j = t(V)bar (t(X)bar K_j - K_j X) V purely imaginary.
struct StationaryDisc {
    Quadric q;
    DiscParameters params;
    PencilFactorization fact;
    cvec iy;  // length d, purely imaginary
};

struct DiscValue {
    cvec h;  // length n
    cvec g;  // length d
};

StationaryDisc build_disc(const Quadric& q, const DiscParameters& params,
                          const Tolerances& tol = {});

/// Closed-form evaluation anywhere on the closed unit disc.
DiscValue eval_disc(const StationaryDisc& disc, cxd zeta);

/// Lift components on the unit circle:
///   htilde(zeta) = -zeta t(h(zeta))bar sum_j (a_j conj(zeta) + b_j + conj(a_j) zeta) A_j
///   gtilde(zeta) = (a + b zeta + conj(a) zeta^2) / 2
/// htilde is returned as the column vector of the row's entries.
DiscValue eval_lift(const StationaryDisc& disc, cxd zeta);

/// gtilde is a polynomial; evaluable off the circle (used by jet oracles).
cvec eval_gtilde(const StationaryDisc& disc, cxd zeta);

/// Max over equally spaced boundary points and j of |Re g_j - t(h)bar A_j h|.
/// Requires samples >= 8.
double verify_attachment(const StationaryDisc& disc, int samples);

struct HolomorphyReport {
    double max_negative = 0.0;
    double max_coefficient = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

/// Checks that the twisted conormal boundary map (htilde, gtilde) has no
/// negative Fourier mass. samples must be a power of two >= 128.
HolomorphyReport verify_lift_holomorphic(const StationaryDisc& disc,
                                         int samples,
                                         const Tolerances& tol = {});

} // namespace statdisc
