#pragma once

#include <cstdint>
#include <vector>

#include "report.hpp"
#include "tolerances.hpp"
#include "types.hpp"

namespace statdisc {

/// Quadric submanifold of C^{n+d}: Re w_j = t(z)bar A_j z with Hermitian
/// coefficient matrices A_1..A_d of size n.
struct Quadric {
    Eigen::Index n = 0;  // CR dimension
    Eigen::Index d = 0;  // codimension
    std::vector<cmat> A;

    /// sum_j b_j A_j (b real, length d).
    cmat levi_combination(const rvec& b) const;
};

/// A direction b0 (unit norm) with sum_j b0_j A_j invertible.
struct LeviDirection {
    rvec b0;
    double smallest_singular_value = 0.0;
};

/// Validates Hermitian-ness and equal sizes; matrices within the tolerance
/// are symmetrized as (M + t(M)bar)/2, anything worse is rejected.
Quadric validate_quadric(const std::vector<cmat>& matrices,
                         const Tolerances& tol = {});

/// Randomized search over the 2d axis directions +-e_j plus `trials`
/// uniform sphere samples, maximizing the smallest singular value of the
/// combination. Deterministic given the seed. Failure to find a direction
/// is inconclusive, not a degeneracy proof.
LeviDirection find_levi_direction(const Quadric& q, int trials,
                                  std::uint64_t seed,
                                  const Tolerances& tol = {});

/// D-nondegeneracy certificate: the d x d real matrix
/// Re(t(D0)bar A^{-1} D0) with A = sum b0_j A_j and D0 column j = A_j V.
JacobianReport is_d_nondegenerate(const Quadric& q, const rvec& b0,
                                  const cvec& V, const Tolerances& tol = {});

/// Full nondegeneracy: same criterion without the real part (complex d x d).
JacobianReport is_fully_nondegenerate(const Quadric& q, const rvec& b0,
                                      const cvec& V,
                                      const Tolerances& tol = {});

/// Defining functions (Re w_j - t(z)bar A_j z)_{j=1..d}.
rvec evaluate_rho(const Quadric& q, const cvec& z, const cvec& w);

} // namespace statdisc
