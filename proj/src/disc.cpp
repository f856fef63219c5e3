#include "disc.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "errors.hpp"
#include "fourier.hpp"
#include "linalg.hpp"

namespace statdisc {

namespace {

constexpr double two_pi = 6.28318530717958647692;

cxd boundary_point(int k, int samples) {
    return std::polar(1.0, two_pi * k / samples);
}

/// Pencil value sum_j (a_j conj(zeta) + b_j + conj(a_j) zeta) A_j; real
/// coefficients on the circle, so the value is Hermitian there.
cmat pencil_value(const StationaryDisc& disc, cxd zeta) {
    cmat sum = cmat::Zero(disc.q.n, disc.q.n);
    for (Eigen::Index j = 0; j < disc.q.d; ++j) {
        sum += (disc.fact.a(j) * std::conj(zeta) + disc.fact.b(j) +
                std::conj(disc.fact.a(j)) * zeta) *
               disc.q.A[j];
    }
    return sum;
}

} // namespace

StationaryDisc build_disc(const Quadric& q, const DiscParameters& params,
                          const Tolerances& tol) {
    if (params.V.size() != q.n) fail(errc::dimension_mismatch, "V length != n");
    StationaryDisc disc;
    disc.q = q;
    disc.params = params;
    disc.fact = factorize(q, params.a, params.b0, tol);

    disc.iy = cvec(q.d);
    const cmat Xadj = disc.fact.X.adjoint();
    for (Eigen::Index j = 0; j < q.d; ++j) {
        const cmat twist = Xadj * disc.fact.K[j] - disc.fact.K[j] * disc.fact.X;
        disc.iy(j) = params.V.dot(twist * params.V);
        const double scale = scale_of({max_norm(twist), params.V.norm()});
        if (std::abs(disc.iy(j).real()) > tol.imaginary_part * scale) {
            std::ostringstream msg;
            msg << "iy_" << j + 1 << " = " << disc.iy(j)
                << " is not purely imaginary within tolerance";
            fail(errc::internal_inconsistency, msg.str());
        }
    }

    // Pinning: f(1) = 0 and lift(1) = (0, 0, 0, b0/2).
    const DiscValue f1 = eval_disc(disc, cxd(1.0, 0.0));
    const DiscValue lift1 = eval_lift(disc, cxd(1.0, 0.0));
    const double scale = scale_of({params.V.norm(), max_norm(disc.fact.A_sum)});
    const cvec half_b0 = 0.5 * params.b0.cast<cxd>();
    const double pin_err =
        std::max({max_norm(f1.h), max_norm(f1.g), max_norm(lift1.h),
                  max_norm(cvec(lift1.g - half_b0))});
    if (pin_err > tol.pinning * scale) {
        std::ostringstream msg;
        msg << "disc fails the zeta = 1 pinning by " << pin_err;
        fail(errc::internal_inconsistency, msg.str());
    }
    return disc;
}

DiscValue eval_disc(const StationaryDisc& disc, cxd zeta) {
    if (std::abs(zeta) > 1.0 + 1e-12) {
        fail(errc::outside_closed_disc, "disc evaluation requires |zeta| <= 1");
    }
    const Eigen::Index n = disc.q.n;
    const cmat I = cmat::Identity(n, n);
    const cvec& V = disc.params.V;
    const cvec W = (I - disc.fact.X) * V;
    const cvec R = (I - zeta * disc.fact.X).partialPivLu().solve(W);

    DiscValue value;
    value.h = V - zeta * R;
    value.g = cvec(disc.q.d);
    // t(V)bar (I - t(X)bar) = W^H, so the K_j term is W.dot(...).
    for (Eigen::Index j = 0; j < disc.q.d; ++j) {
        const cxd quad = V.dot(disc.q.A[j] * V);
        const cxd cross = V.dot(disc.q.A[j] * R);
        const cxd kpart = W.dot(disc.fact.K[j] * (W + 2.0 * zeta * (disc.fact.X * R)));
        value.g(j) = quad - 2.0 * zeta * cross + kpart + disc.iy(j);
    }
    return value;
}

DiscValue eval_lift(const StationaryDisc& disc, cxd zeta) {
    if (std::abs(std::abs(zeta) - 1.0) > 1e-12) {
        fail(errc::not_on_boundary, "lift evaluation requires |zeta| = 1");
    }
    const DiscValue f = eval_disc(disc, zeta);
    const cmat S = pencil_value(disc, zeta);
    DiscValue lift;
    // row vector -zeta t(h)bar S returned as its entry column; S Hermitian on
    // the circle gives t(h)bar S = t(conj(S h)).
    lift.h = -zeta * (S * f.h).conjugate();
    lift.g = eval_gtilde(disc, zeta);
    return lift;
}

cvec eval_gtilde(const StationaryDisc& disc, cxd zeta) {
    const cvec& a = disc.fact.a;
    return 0.5 * (a + zeta * disc.fact.b.cast<cxd>() +
                  (zeta * zeta) * a.conjugate());
}

double verify_attachment(const StationaryDisc& disc, int samples) {
    if (samples < 8) {
        fail(errc::invalid_argument, "attachment check requires samples >= 8");
    }
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const cxd zeta = boundary_point(k, samples);
        const DiscValue f = eval_disc(disc, zeta);
        for (Eigen::Index j = 0; j < disc.q.d; ++j) {
            const cxd form = f.h.dot(disc.q.A[j] * f.h);
            worst = std::max(worst, std::abs(f.g(j).real() - form.real()));
        }
    }
    return worst;
}

HolomorphyReport verify_lift_holomorphic(const StationaryDisc& disc,
                                         int samples, const Tolerances& tol) {
    if (!is_power_of_two(samples) || samples < 128) {
        fail(errc::invalid_argument,
             "holomorphy check requires a power-of-two sample count >= 128");
    }
    const Eigen::Index n = disc.q.n;
    const Eigen::Index d = disc.q.d;
    std::vector<std::vector<cxd>> components(
        static_cast<std::size_t>(n + d),
        std::vector<cxd>(static_cast<std::size_t>(samples)));
    for (int k = 0; k < samples; ++k) {
        const DiscValue lift = eval_lift(disc, boundary_point(k, samples));
        for (Eigen::Index i = 0; i < n; ++i)
            components[static_cast<std::size_t>(i)][k] = lift.h(i);
        for (Eigen::Index j = 0; j < d; ++j)
            components[static_cast<std::size_t>(n + j)][k] = lift.g(j);
    }
    const NegativeCoefficientReport coeffs = analyze_negative_coefficients(components);
    HolomorphyReport report;
    report.max_negative = coeffs.max_negative;
    report.max_coefficient = coeffs.max_coefficient;
    report.threshold = tol.fourier_rel * coeffs.max_coefficient;
    report.pass = report.max_negative <= report.threshold;
    return report;
}

} // namespace statdisc
