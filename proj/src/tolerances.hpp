#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace statdisc {

/// Every threshold in the library, relative to a per-check scale
/// (1 + max operand max-norm) unless noted. The CLI can override any field
/// by name via --tol NAME=VALUE; reports echo the effective values.
struct Tolerances {
    double hermitian = 1e-12;          // input Hermitian deviation
    double invertibility = 1e-10;      // sigma_min threshold for verdicts
    double residual = 1e-12;           // quadratic matrix equation residual
    double x_norm_margin = 1e-6;       // require ||X||_2 <= 1 - margin
    double fixed_point = 1e-14;        // iteration stopping criterion
    double stein_residual = 1e-11;     // Stein solve residual
    double series_term = 1e-16;        // series truncation (term max-norm)
    double boundary_identity = 1e-10;  // pencil factorization on the circle
    double pinning = 1e-12;            // disc/lift values at zeta = 1
    double attachment = 1e-10;         // Re g_j = t(h)bar A_j h on the circle
    double fourier_rel = 1e-8;         // negative Fourier mass, relative
    double imaginary_part = 1e-12;     // iy_j purely imaginary check
    double witness = 1e-9;             // defect witness boundary residual
    double fd_step = 1e-5;             // central finite-difference step
    double fd_match = 1e-6;            // analytic vs finite-difference match
    int max_iterations = 10000;        // fixed-point iteration cap

    using field_list =
        std::vector<std::pair<const char*, double Tolerances::*>>;

    static const field_list& fields();

    /// Throws errc::invalid_argument on an unknown name.
    void set(const std::string& name, double value);
    double get(const std::string& name) const;
};

} // namespace statdisc
