#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "linalg.hpp"
#include "quadric.hpp"
#include "test_util.hpp"

using namespace statdisc;
using statdisc::testing::random_quadric;

namespace {

cmat mat1(cxd v) {
    cmat m(1, 1);
    m(0, 0) = v;
    return m;
}

Quadric levi_pair() {
    cmat a1 = cmat::Identity(2, 2);
    cmat a2 = cmat::Zero(2, 2);
    a2(0, 0) = 1.0;
    a2(1, 1) = -1.0;
    return validate_quadric({a1, a2});
}

} // namespace

TEST_CASE("validate_quadric accepts Hermitian input") {
    const Quadric q1 = validate_quadric({mat1(1.0)});
    CHECK(q1.n == 1);
    CHECK(q1.d == 1);

    const Quadric q2 = levi_pair();
    CHECK(q2.n == 2);
    CHECK(q2.d == 2);
}

TEST_CASE("validate_quadric rejects bad input") {
    cmat upper = cmat::Zero(2, 2);
    upper(0, 1) = 1.0;  // strictly upper triangular, not Hermitian
    try {
        validate_quadric({upper});
        FAIL("expected NonHermitianInput");
    } catch (const error& e) {
        CHECK(e.code() == errc::non_hermitian_input);
    }

    CHECK_THROWS_AS(validate_quadric({}), error);
    CHECK_THROWS_AS(validate_quadric({cmat::Identity(2, 2), cmat::Identity(3, 3)}),
                    error);
    CHECK_THROWS_AS(validate_quadric({cmat::Zero(2, 3)}), error);
}

TEST_CASE("validate_quadric symmetrizes tiny deviations") {
    cmat nearly = cmat::Identity(2, 2);
    nearly(0, 1) = cxd(0.0, 1e-14);
    const Quadric q = validate_quadric({nearly});
    CHECK(max_norm(cmat(q.A[0] - q.A[0].adjoint())) == 0.0);
}

TEST_CASE("find_levi_direction on the scalar quadric") {
    const Quadric q = validate_quadric({mat1(1.0)});
    const LeviDirection dir = find_levi_direction(q, 16, 1);
    CHECK(dir.b0(0) == doctest::Approx(1.0));
    CHECK(dir.smallest_singular_value == doctest::Approx(1.0));
}

TEST_CASE("find_levi_direction on the curated pair") {
    const Quadric q = levi_pair();
    const LeviDirection dir = find_levi_direction(q, 64, 3);
    // optimum is attained on the axes with smallest singular value 1
    CHECK(dir.smallest_singular_value == doctest::Approx(1.0));
    CHECK(sigma_min(q.levi_combination(dir.b0)) > 0.5);
}

TEST_CASE("find_levi_direction reports failure on a rank-deficient family") {
    cmat a1 = cmat::Zero(2, 2);
    a1(0, 0) = 1.0;
    const cmat a2 = cmat::Zero(2, 2);
    const Quadric q = validate_quadric({a1, a2});
    try {
        find_levi_direction(q, 64, 5);
        FAIL("expected NoDirectionFound");
    } catch (const error& e) {
        CHECK(e.code() == errc::no_direction_found);
    }
}

TEST_CASE("D-nondegeneracy certificates") {
    const Quadric q1 = validate_quadric({mat1(1.0)});
    rvec b0(1);
    b0 << 1.0;
    cvec v(1);
    v << cxd(1.0, 0.0);
    const JacobianReport r1 = is_d_nondegenerate(q1, b0, v, {});
    CHECK(r1.matrix(0, 0) == doctest::Approx(1.0));
    CHECK(r1.invertible);

    const Quadric q2 = levi_pair();
    rvec b2(2);
    b2 << 1.0, 0.0;
    cvec aligned(2);
    aligned << cxd(1.0, 0.0), cxd(0.0, 0.0);
    const JacobianReport singular = is_d_nondegenerate(q2, b2, aligned, {});
    CHECK(singular.matrix(0, 0) == doctest::Approx(1.0));
    CHECK(singular.matrix(0, 1) == doctest::Approx(1.0));
    CHECK(singular.matrix(1, 0) == doctest::Approx(1.0));
    CHECK(singular.matrix(1, 1) == doctest::Approx(1.0));
    CHECK_FALSE(singular.invertible);

    cvec generic(2);
    generic << cxd(1.0, 0.0), cxd(1.0, 0.0);
    const JacobianReport good = is_d_nondegenerate(q2, b2, generic, {});
    CHECK(good.matrix(0, 0) == doctest::Approx(2.0));
    CHECK(good.matrix(0, 1) == doctest::Approx(0.0));
    CHECK(good.matrix(1, 1) == doctest::Approx(2.0));
    CHECK(good.invertible);
    CHECK(good.sigma_min == doctest::Approx(2.0));
}

TEST_CASE("full nondegeneracy certificates") {
    const Quadric q1 = validate_quadric({mat1(1.0)});
    rvec b0(1);
    b0 << 1.0;
    cvec v(1);
    v << cxd(1.0, 0.0);
    CHECK(is_fully_nondegenerate(q1, b0, v, {}).invertible);

    const Quadric q2 = levi_pair();
    rvec b2(2);
    b2 << 1.0, 0.0;
    cvec generic(2);
    generic << cxd(1.0, 0.0), cxd(1.0, 0.0);
    const JacobianReport good = is_fully_nondegenerate(q2, b2, generic, {});
    REQUIRE(good.complex_matrix.has_value());
    CHECK(std::abs((*good.complex_matrix)(0, 0) - cxd(2.0, 0.0)) < 1e-12);
    CHECK(std::abs((*good.complex_matrix)(0, 1)) < 1e-12);
    CHECK(std::abs((*good.complex_matrix)(1, 1) - cxd(2.0, 0.0)) < 1e-12);
    CHECK(good.invertible);

    cvec aligned(2);
    aligned << cxd(1.0, 0.0), cxd(0.0, 0.0);
    CHECK_FALSE(is_fully_nondegenerate(q2, b2, aligned, {}).invertible);
}

TEST_CASE("nondegeneracy requires an invertible Levi combination") {
    const Quadric q = levi_pair();
    rvec bad(2);
    bad << 1.0, 1.0;  // diag(2, 0)
    cvec v(2);
    v << cxd(1.0, 0.0), cxd(1.0, 0.0);
    try {
        is_d_nondegenerate(q, bad, v, {});
        FAIL("expected SingularLeviDirection");
    } catch (const error& e) {
        CHECK(e.code() == errc::singular_levi_direction);
    }
}

TEST_CASE("evaluate_rho examples") {
    const Quadric q1 = validate_quadric({mat1(1.0)});
    cvec z0(1), w0(1);
    z0 << cxd(0.0, 0.0);
    w0 << cxd(0.0, 0.0);
    CHECK(evaluate_rho(q1, z0, w0)(0) == doctest::Approx(0.0));

    cvec z1(1), w1(1);
    z1 << cxd(1.0, 0.0);
    w1 << cxd(2.0, 0.0);
    CHECK(evaluate_rho(q1, z1, w1)(0) == doctest::Approx(1.0));

    const Quadric q2 = levi_pair();
    cvec z2(2), w2(2);
    z2 << cxd(1.0, 0.0), cxd(1.0, 0.0);
    w2 << cxd(2.0, 0.0), cxd(0.0, 0.0);
    const rvec rho = evaluate_rho(q2, z2, w2);
    CHECK(rho(0) == doctest::Approx(0.0));
    CHECK(rho(1) == doctest::Approx(0.0));

    CHECK_THROWS_AS(evaluate_rho(q2, z1, w2), error);
}

TEST_CASE("Hermitian forms are real on validated quadrics") {
    Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const Quadric q = random_quadric(rng, 1 + trial % 4, 1 + trial % 3);
        const cvec z = rng.complex_vector(q.n);
        for (const cmat& A : q.A) {
            const cxd form = z.dot(A * z);
            CHECK(std::abs(form.imag()) <= 1e-12 * (1.0 + std::abs(form)));
        }
    }
}

TEST_CASE("verdicts are invariant under rescaling the direction") {
    const Quadric q = levi_pair();
    rvec b0(2);
    b0 << 1.0, 0.0;
    cvec v(2);
    v << cxd(1.0, 0.5), cxd(-0.3, 1.0);
    const JacobianReport base = is_d_nondegenerate(q, b0, v, {});
    for (double lambda : {0.5, 2.0, -1.0, 5.0}) {
        const JacobianReport scaled =
            is_d_nondegenerate(q, rvec(lambda * b0), v, {});
        CHECK(scaled.invertible == base.invertible);
        CHECK(max_norm(rmat(scaled.matrix - base.matrix / lambda)) < 1e-12);
        CHECK(scaled.sigma_min ==
              doctest::Approx(base.sigma_min / std::abs(lambda)));
    }
}

TEST_CASE("the D-matrix is the real part of the full matrix") {
    Rng rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        const Quadric q = random_quadric(rng, 2 + trial % 3, 1 + trial % 3);
        const LeviDirection dir = find_levi_direction(q, 32, 11);
        const cvec v = rng.complex_vector(q.n);
        const JacobianReport real_part = is_d_nondegenerate(q, dir.b0, v, {});
        const JacobianReport full = is_fully_nondegenerate(q, dir.b0, v, {});
        REQUIRE(full.complex_matrix.has_value());
        CHECK(max_norm(rmat(real_part.matrix - full.complex_matrix->real())) <
              1e-12 * full.scale);
    }
}
