#pragma once

#include "types.hpp"

namespace statdisc {

/// Largest singular value (operator 2-norm).
double op_norm(const cmat& m);

/// Smallest singular value.
double sigma_min(const cmat& m);

/// Singular values in descending order.
rvec singular_values(const cmat& m);
rvec singular_values(const rmat& m);

/// Kronecker product a (x) b.
cmat kron(const cmat& a, const cmat& b);

/// Column-major stacking of a matrix, and its inverse.
cvec vectorize(const cmat& m);
cmat unvectorize(const cvec& v, Eigen::Index rows, Eigen::Index cols);

/// (M + t(M)bar) / 2.
cmat hermitian_part(const cmat& m);

/// Number of singular values strictly above `threshold` (absolute).
int rank_with_threshold(const rmat& m, double threshold);

/// Standard realification of a complex square matrix with coordinates split
/// as (Re, Im) interleaved per component: block (j,s) maps to
/// [[Re c, -Im c], [Im c, Re c]].
rmat realify_interleaved(const cmat& m);

} // namespace statdisc
