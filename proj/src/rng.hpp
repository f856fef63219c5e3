#pragma once

#include <cstdint>
#include <random>

#include "types.hpp"

namespace statdisc {

/// Deterministic random source. Draws are produced from raw mt19937_64
/// output instead of std::*_distribution so that streams are identical on
/// every platform, which the byte-identical-report contract relies on.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() {  // [0, 1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() {  // Box-Muller
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.28318530717958647692 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    cxd complex_normal() { return cxd(normal(), normal()); }

    rvec real_vector(Eigen::Index n) {
        rvec v(n);
        for (Eigen::Index i = 0; i < n; ++i) v(i) = normal();
        return v;
    }

    cvec complex_vector(Eigen::Index n) {
        cvec v(n);
        for (Eigen::Index i = 0; i < n; ++i) v(i) = complex_normal();
        return v;
    }

    cmat complex_matrix(Eigen::Index rows, Eigen::Index cols) {
        cmat m(rows, cols);
        for (Eigen::Index j = 0; j < cols; ++j)
            for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = complex_normal();
        return m;
    }

    cmat hermitian_matrix(Eigen::Index n) {
        cmat m = complex_matrix(n, n);
        return 0.5 * (m + m.adjoint()).eval();
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace statdisc
