#pragma once

#include <cstdint>
#include <optional>

#include "disc.hpp"
#include "quadric.hpp"
#include "tolerances.hpp"
#include "types.hpp"

namespace statdisc {

/// Real span data of the orbit {X^r V}. Truncation at r = 2n-1 is exact:
/// once a power falls into the real span of the lower ones, every higher
/// power does too (multiplication by X is real-linear), and the real
/// dimension is at most 2n.
struct OrbitBasis {
    std::vector<cvec> vectors;  // X^r V, r = 0..2n-1
    int real_dimension = 0;
};

OrbitBasis orbit_basis(const cmat& X, const cvec& V, const Tolerances& tol = {});

/// Stationary minimality certificate. The Gram criterion (positive
/// definiteness of Re(t(V)bar t(X)bar^r A_j A_s X^r V)_{j,s} summed over r,
/// evaluated exactly through the inverse Stein operator) and the rank
/// criterion (no real kernel of the stacked D_r = [A_s X^r V] matrices) are
/// computed independently and must agree.
struct MinimalityCertificate {
    bool minimal = false;
    rmat gram;  // d x d real symmetric
    double gram_min_eigenvalue = 0.0;
    double stacked_sigma_min = 0.0;
    std::optional<rvec> kernel_witness;  // unit lambda with sum lambda_j A_j X^r V = 0
};

MinimalityCertificate is_stationary_minimal(const Quadric& q, const cmat& X,
                                            const cvec& V,
                                            const Tolerances& tol = {});

/// Defect test: the disc is defective iff the quadric fails stationary
/// minimality at (a, b0 - a - conj(a), h(0)). When defective the kernel
/// witness materializes the extra lift (h, g, 0, zeta lambda_1/2, ...,
/// zeta lambda_d/2); `boundary_residual` is the max over 64 boundary points
/// of ||sum lambda_j A_j h(zeta)|| and must vanish within tolerance.
struct DefectReport {
    bool defective = false;
    std::optional<rvec> witness;
    double boundary_residual = 0.0;
    MinimalityCertificate certificate;
};

DefectReport is_defective(const StationaryDisc& disc, const Tolerances& tol = {});

/// The four equivalent statements: nondefectivity of the built disc and
/// stationary minimality at h(0) = V, at h'(0) ~ (I-X)V and at
/// h'(1) ~ (I-X)^{-1}V. They must coincide.
struct EquivalenceReport {
    bool nondefective = false;
    bool minimal_at_center = false;      // V
    bool minimal_at_derivative0 = false; // (I-X)V
    bool minimal_at_derivative1 = false; // (I-X)^{-1}V
    bool all_agree = false;
};

EquivalenceReport minimality_equivalences(const Quadric& q, const cvec& a,
                                          const rvec& b0, const cvec& V,
                                          const Tolerances& tol = {});

/// Perturbs (a, b0) uniformly in a ball, re-solves X and re-tests
/// minimality at V. Requires a minimal starting instance.
struct OpennessReport {
    int probes = 0;
    int minimal_count = 0;
    int solver_failures = 0;
    double fraction = 1.0;  // minimal among solved probes
};

OpennessReport openness_probe(const Quadric& q, const cvec& a, const rvec& b0,
                              const cvec& V, double radius, int probes,
                              std::uint64_t seed, const Tolerances& tol = {});

} // namespace statdisc
