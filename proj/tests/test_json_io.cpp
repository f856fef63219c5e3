#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "errors.hpp"
#include "json_io.hpp"
#include "test_util.hpp"

using namespace statdisc;
using statdisc::testing::random_quadric;

namespace {

json good_doc() {
    return json::parse(R"({
      "n": 2, "d": 2,
      "matrices": [
        [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]],
        [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [-1.0, 0.0]]]
      ]
    })");
}

errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code();
    }
    return errc::ok;
}

} // namespace

TEST_CASE("parse_quadric accepts the schema") {
    const Quadric q = parse_quadric(good_doc());
    CHECK(q.n == 2);
    CHECK(q.d == 2);
    CHECK(q.A[1](1, 1).real() == doctest::Approx(-1.0));
}

TEST_CASE("parse_quadric rejects malformed documents") {
    json missing = good_doc();
    missing.erase("matrices");
    CHECK(code_of([&] { parse_quadric(missing); }) == errc::input_error);

    json wrong_count = good_doc();
    wrong_count["d"] = 3;
    CHECK(code_of([&] { parse_quadric(wrong_count); }) == errc::dimension_mismatch);

    json wrong_size = good_doc();
    wrong_size["n"] = 3;
    CHECK(code_of([&] { parse_quadric(wrong_size); }) == errc::dimension_mismatch);

    json bad_scalar = good_doc();
    bad_scalar["matrices"][0][0][0] = json::array({1.0});
    CHECK(code_of([&] { parse_quadric(bad_scalar); }) == errc::input_error);

    json negative_dims = good_doc();
    negative_dims["n"] = 0;
    CHECK(code_of([&] { parse_quadric(negative_dims); }) == errc::input_error);
}

TEST_CASE("parse_quadric rejects NaN and Inf") {
    json doc = good_doc();
    doc["matrices"][0][0][0][0] = std::nan("");
    CHECK(code_of([&] { parse_quadric(doc); }) == errc::input_error);

    json doc2 = good_doc();
    doc2["matrices"][0][0][0][0] = std::numeric_limits<double>::infinity();
    CHECK(code_of([&] { parse_quadric(doc2); }) == errc::input_error);
}

TEST_CASE("parse_quadric rejects non-Hermitian matrices") {
    json doc = good_doc();
    doc["matrices"][0][0][1] = json::array({0.5, 0.0});  // breaks symmetry
    CHECK(code_of([&] { parse_quadric(doc); }) == errc::non_hermitian_input);
}

TEST_CASE("quadric round-trips through JSON") {
    Rng rng(616);
    for (int trial = 0; trial < 6; ++trial) {
        const Quadric q = random_quadric(rng, 1 + trial % 4, 1 + trial % 3);
        const Quadric back = parse_quadric(quadric_to_json(q));
        REQUIRE(back.n == q.n);
        REQUIRE(back.d == q.d);
        for (Eigen::Index j = 0; j < q.d; ++j) {
            CHECK(max_norm(cmat(back.A[j] - q.A[j])) == 0.0);
        }
    }
}

TEST_CASE("complex vector serialization conventions") {
    cvec v(2);
    v << cxd(1.5, -2.0), cxd(0.0, 3.0);
    const json out = cvec_to_json(v);
    CHECK(out[0][0] == 1.5);
    CHECK(out[0][1] == -2.0);
    CHECK(out[1][1] == 3.0);
    const cvec back = parse_cvec(out, "test");
    CHECK(max_norm(cvec(back - v)) == 0.0);
}

TEST_CASE("report serialization carries verdict and spectrum") {
    rmat m(2, 2);
    m << 3.0, 0.0, 0.0, 1.0;
    const json doc = report_to_json(make_report(m));
    CHECK(doc["verdict"] == "invertible");
    CHECK(doc["singular_values"][0] == doctest::Approx(3.0));
    CHECK(doc["singular_values"][1] == doctest::Approx(1.0));
    CHECK(doc["condition_number"] == doctest::Approx(3.0));

    const json zero = report_to_json(make_report(rmat(rmat::Zero(2, 2))));
    CHECK(zero["verdict"] == "singular");
    CHECK(zero["condition_number"].is_null());
}

TEST_CASE("tolerances round-trip by name") {
    Tolerances tol;
    tol.set("attachment", 5e-9);
    tol.set("max_iterations", 123);
    CHECK(tol.attachment == doctest::Approx(5e-9));
    CHECK(tol.max_iterations == 123);
    CHECK(tol.get("attachment") == doctest::Approx(5e-9));
    CHECK_THROWS_AS(tol.set("unknown_name", 1.0), error);
    const json doc = tolerances_to_json(tol);
    CHECK(doc["attachment"] == doctest::Approx(5e-9));
    CHECK(doc["max_iterations"] == 123);
}
