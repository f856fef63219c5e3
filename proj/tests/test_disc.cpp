#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "disc.hpp"
#include "errors.hpp"
#include "fourier.hpp"
#include "linalg.hpp"
#include "test_util.hpp"

using namespace statdisc;
using namespace statdisc::testing;

namespace {

constexpr double two_pi = 6.28318530717958647692;

Quadric scalar_quadric() {
    cmat m(1, 1);
    m(0, 0) = 1.0;
    return validate_quadric({m});
}

Quadric pauli_pair() {
    cmat sx = cmat::Zero(2, 2);
    sx(0, 1) = 1.0;
    sx(1, 0) = 1.0;
    cmat sz = cmat::Zero(2, 2);
    sz(0, 0) = 1.0;
    sz(1, 1) = -1.0;
    return validate_quadric({sx, sz});
}

StationaryDisc scalar_disc(double a_re) {
    const Quadric q = scalar_quadric();
    DiscParameters p;
    p.a = cvec(1);
    p.a << cxd(a_re, 0.0);
    p.b0 = rvec(1);
    p.b0 << 1.0;
    p.V = cvec(1);
    p.V << cxd(1.0, 0.0);
    return build_disc(q, p);
}

const double kRoot = -4.0 + std::sqrt(15.0);

} // namespace

TEST_CASE("a = 0 reduces to the special polynomial family") {
    const StationaryDisc disc = scalar_disc(0.0);
    for (int k = 0; k < 16; ++k) {
        const cxd z = std::polar(1.0, two_pi * k / 16.0);
        const DiscValue f = eval_disc(disc, z);
        CHECK(std::abs(f.h(0) - (1.0 - z)) < 1e-14);
        CHECK(std::abs(f.g(0) - 2.0 * (1.0 - z)) < 1e-14);
    }
    const DiscValue at_i = eval_disc(disc, cxd(0.0, 1.0));
    CHECK(std::abs(at_i.h(0) - cxd(1.0, -1.0)) < 1e-14);
    CHECK(std::abs(at_i.g(0) - cxd(2.0, -2.0)) < 1e-14);
}

TEST_CASE("V = 0 collapses the disc") {
    const Quadric q = scalar_quadric();
    DiscParameters p;
    p.a = cvec::Zero(1);
    p.b0 = rvec(1);
    p.b0 << 1.0;
    p.V = cvec::Zero(1);
    const StationaryDisc disc = build_disc(q, p);
    const DiscValue f = eval_disc(disc, cxd(0.3, 0.2));
    CHECK(max_norm(f.h) == 0.0);
    CHECK(max_norm(f.g) == 0.0);
}

TEST_CASE("curved disc hits the hand-evaluated point") {
    const StationaryDisc disc = scalar_disc(0.1);
    CHECK(std::abs(disc.fact.X(0, 0) - kRoot) < 1e-13);
    const DiscValue at0 = eval_disc(disc, cxd(0.0, 0.0));
    CHECK(std::abs(at0.h(0) - 1.0) < 1e-13);
    const DiscValue atm1 = eval_disc(disc, cxd(-1.0, 0.0));
    CHECK(std::abs(atm1.h(0).real() - 2.2910520) < 1e-7);
    CHECK(std::abs(atm1.h(0) - (1.0 + (1.0 - kRoot) / (1.0 + kRoot))) < 1e-12);
}

TEST_CASE("pinning at zeta = 1") {
    for (double a : {0.0, 0.1, 0.2}) {
        const StationaryDisc disc = scalar_disc(a);
        const DiscValue f1 = eval_disc(disc, cxd(1.0, 0.0));
        const DiscValue lift1 = eval_lift(disc, cxd(1.0, 0.0));
        CHECK(max_norm(f1.h) < 1e-13);
        CHECK(max_norm(f1.g) < 1e-13);
        CHECK(max_norm(lift1.h) < 1e-13);
        CHECK(std::abs(lift1.g(0) - 0.5) < 1e-13);
    }
}

TEST_CASE("center value equals the closed form") {
    const StationaryDisc disc = scalar_disc(0.1);
    const DiscValue at0 = eval_disc(disc, cxd(0.0, 0.0));
    // t(V)bar 2 K (I - X) V = 2 (1 - x) / (1 - x^2) = 2 / (1 + x)
    CHECK(std::abs(at0.g(0) - 2.0 / (1.0 + kRoot)) < 1e-12);
    CHECK(std::abs(at0.g(0).real() - 2.2910520) < 1e-7);
}

TEST_CASE("lift values on the boundary") {
    const StationaryDisc special = scalar_disc(0.0);
    const DiscValue at_m1 = eval_lift(special, cxd(-1.0, 0.0));
    CHECK(std::abs(at_m1.h(0) - 2.0) < 1e-14);

    const StationaryDisc curved = scalar_disc(0.1);
    const DiscValue at_i = eval_lift(curved, cxd(0.0, 1.0));
    CHECK(std::abs(at_i.g(0) - cxd(0.0, 0.4)) < 1e-14);
}

TEST_CASE("domain guards") {
    const StationaryDisc disc = scalar_disc(0.1);
    try {
        eval_disc(disc, cxd(1.5, 0.0));
        FAIL("expected OutsideClosedDisc");
    } catch (const error& e) {
        CHECK(e.code() == errc::outside_closed_disc);
    }
    try {
        eval_lift(disc, cxd(0.5, 0.0));
        FAIL("expected NotOnBoundary");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_on_boundary);
    }
    CHECK_THROWS_AS(verify_attachment(disc, 4), error);
    CHECK_THROWS_AS(verify_lift_holomorphic(disc, 100), error);
    CHECK_THROWS_AS(verify_lift_holomorphic(disc, 96), error);
}

TEST_CASE("attachment residuals") {
    const StationaryDisc special = scalar_disc(0.0);
    CHECK(verify_attachment(special, 64) <= 1e-14);

    const StationaryDisc curved = scalar_disc(0.1);
    CHECK(verify_attachment(curved, 256) <= 1e-10);
}

TEST_CASE("attachment only sees the real part of g") {
    StationaryDisc corrupted = scalar_disc(0.1);
    corrupted.iy(0) += cxd(0.0, 0.1);  // keeps Re g, breaks g(1) = 0
    CHECK(verify_attachment(corrupted, 64) <= 1e-10);
    const DiscValue f1 = eval_disc(corrupted, cxd(1.0, 0.0));
    CHECK(std::abs(f1.g(0)) > 1e-3);
}

TEST_CASE("lift holomorphy passes for genuine discs") {
    const StationaryDisc special = scalar_disc(0.0);
    CHECK(verify_lift_holomorphic(special, 128).pass);

    const StationaryDisc curved = scalar_disc(0.1);
    const HolomorphyReport report = verify_lift_holomorphic(curved, 512);
    CHECK(report.pass);
    CHECK(report.max_negative <= 1e-8 * report.max_coefficient);
}

TEST_CASE("lift holomorphy detects a transposed X") {
    const Quadric q = pauli_pair();
    DiscParameters p;
    p.a = cvec(2);
    p.a << cxd(0.15, 0.0), cxd(0.0, 0.1);
    p.b0 = rvec(2);
    p.b0 << 1.0, 1.0;
    p.V = cvec(2);
    p.V << cxd(1.0, 0.0), cxd(0.5, -0.25);
    const StationaryDisc disc = build_disc(q, p);
    REQUIRE(max_norm(cmat(disc.fact.X - disc.fact.X.transpose())) > 1e-3);
    CHECK(verify_lift_holomorphic(disc, 512).pass);

    StationaryDisc corrupted = disc;
    corrupted.fact.X = disc.fact.X.transpose();
    const HolomorphyReport report = verify_lift_holomorphic(corrupted, 512);
    CHECK_FALSE(report.pass);
    CHECK(report.max_negative > 1e-4 * report.max_coefficient);
}

TEST_CASE("boundary identity Re(g) restatement on random instances") {
    Rng rng(606);
    for (int trial = 0; trial < 8; ++trial) {
        const Instance inst = random_instance(rng, 1 + trial % 3, 1 + trial % 3);
        const StationaryDisc disc =
            build_disc(inst.q, DiscParameters{inst.a, inst.b0, inst.V});
        for (int k = 0; k < 32; ++k) {
            const cxd z = std::polar(1.0, two_pi * k / 32.0);
            const DiscValue f = eval_disc(disc, z);
            const double scale = scale_of({f.h.norm(), max_norm(f.g)});
            for (Eigen::Index j = 0; j < inst.q.d; ++j) {
                const cxd form = f.h.dot(inst.q.A[j] * f.h);
                CHECK(std::abs(f.g(j) + std::conj(f.g(j)) - 2.0 * form) <=
                      1e-10 * scale);
            }
        }
    }
}

TEST_CASE("Taylor coefficients of h follow the orbit recursion") {
    Rng rng(777);
    const Instance inst = random_instance(rng, 3, 2);
    const StationaryDisc disc =
        build_disc(inst.q, DiscParameters{inst.a, inst.b0, inst.V});
    const int samples = 256;
    std::vector<std::vector<cxd>> h_samples(
        3, std::vector<cxd>(static_cast<std::size_t>(samples)));
    for (int k = 0; k < samples; ++k) {
        const DiscValue f = eval_disc(disc, std::polar(1.0, two_pi * k / samples));
        for (int i = 0; i < 3; ++i) h_samples[i][k] = f.h(i);
    }
    std::vector<std::vector<cxd>> coeffs;
    for (const auto& seq : h_samples) coeffs.push_back(fourier_coefficients(seq));

    auto alpha = [&](int k) {
        cvec v(3);
        for (int i = 0; i < 3; ++i) v(i) = coeffs[i][static_cast<std::size_t>(k)];
        return v;
    };
    const cvec alpha1 = alpha(1);
    cvec predicted = alpha1;
    for (int k = 2; k < 12; ++k) {
        predicted = disc.fact.X * predicted;  // X^{k-1} alpha_1
        CHECK(max_norm(cvec(alpha(k) - predicted)) <= 1e-9);
    }
}

TEST_CASE("special family coincidence including the lift") {
    Rng rng(909);
    const Quadric q = random_quadric(rng, 3, 2);
    const rvec b0 = find_levi_direction(q, 32, 13).b0;
    const cvec V = rng.complex_vector(3);
    const StationaryDisc disc = build_disc(q, DiscParameters{cvec::Zero(2), b0, V});
    const cmat A_sum = q.levi_combination(b0);
    double worst = 0.0;
    for (int k = 0; k < 64; ++k) {
        const cxd z = std::polar(1.0, two_pi * k / 64.0);
        const DiscValue f = eval_disc(disc, z);
        const DiscValue lift = eval_lift(disc, z);
        worst = std::max(worst, max_norm(cvec(f.h - (1.0 - z) * V)));
        for (Eigen::Index j = 0; j < q.d; ++j) {
            const cxd expected = 2.0 * (1.0 - z) * V.dot(q.A[j] * V);
            worst = std::max(worst, std::abs(f.g(j) - expected));
        }
        worst = std::max(worst,
                         max_norm(cvec(lift.h - (1.0 - z) * (A_sum * V).conjugate())));
        worst = std::max(worst,
                         max_norm(cvec(lift.g - 0.5 * z * b0.cast<cxd>())));
    }
    CHECK(worst <= 1e-12 * scale_of({V.norm(), max_norm(A_sum)}));
}
