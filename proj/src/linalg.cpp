#include "linalg.hpp"

#include <Eigen/SVD>

namespace statdisc {

double op_norm(const cmat& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<cmat> svd(m);
    return svd.singularValues()(0);
}

double sigma_min(const cmat& m) {
    Eigen::JacobiSVD<cmat> svd(m);
    return svd.singularValues()(svd.singularValues().size() - 1);
}

rvec singular_values(const cmat& m) {
    Eigen::JacobiSVD<cmat> svd(m);
    return svd.singularValues();
}

rvec singular_values(const rmat& m) {
    Eigen::JacobiSVD<rmat> svd(m);
    return svd.singularValues();
}

cmat kron(const cmat& a, const cmat& b) {
    cmat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

cvec vectorize(const cmat& m) {
    return Eigen::Map<const cvec>(m.data(), m.size());
}

cmat unvectorize(const cvec& v, Eigen::Index rows, Eigen::Index cols) {
    return Eigen::Map<const cmat>(v.data(), rows, cols);
}

cmat hermitian_part(const cmat& m) {
    return 0.5 * (m + m.adjoint());
}

int rank_with_threshold(const rmat& m, double threshold) {
    Eigen::JacobiSVD<rmat> svd(m);
    const rvec& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > threshold) ++rank;
    return rank;
}

rmat realify_interleaved(const cmat& m) {
    rmat out(2 * m.rows(), 2 * m.cols());
    for (Eigen::Index j = 0; j < m.rows(); ++j) {
        for (Eigen::Index s = 0; s < m.cols(); ++s) {
            const double re = m(j, s).real();
            const double im = m(j, s).imag();
            out(2 * j, 2 * s) = re;
            out(2 * j, 2 * s + 1) = -im;
            out(2 * j + 1, 2 * s) = im;
            out(2 * j + 1, 2 * s + 1) = re;
        }
    }
    return out;
}

} // namespace statdisc
