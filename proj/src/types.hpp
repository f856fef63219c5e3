#pragma once

#include <complex>
#include <initializer_list>

#include <Eigen/Dense>

namespace statdisc {

using cxd = std::complex<double>;
using cmat = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;
using rmat = Eigen::MatrixXd;
using rvec = Eigen::VectorXd;

inline constexpr const char* kVersion = "0.1.0";

/// Max-norm (largest entry modulus); 0 for empty objects.
template <typename Derived>
double max_norm(const Eigen::MatrixBase<Derived>& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

/// Relative-tolerance scale: 1 + max of the operands' max-norms.
inline double scale_of(std::initializer_list<double> norms) {
    double s = 0.0;
    for (double v : norms) s = std::max(s, v);
    return 1.0 + s;
}

} // namespace statdisc
