#include "json_io.hpp"

#include <cmath>
#include <fstream>

#include "errors.hpp"

namespace statdisc {

json complex_to_json(cxd value) {
    return json::array({value.real(), value.imag()});
}

json cvec_to_json(const cvec& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(complex_to_json(v(i)));
    return arr;
}

json cmat_to_json(const cmat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json rvec_to_json(const rvec& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
    return arr;
}

json rmat_to_json(const rmat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

double parse_finite(const json& node, const std::string& where) {
    if (!node.is_number()) {
        fail(errc::input_error, where + ": expected a number");
    }
    const double value = node.get<double>();
    if (!std::isfinite(value)) {
        fail(errc::input_error, where + ": NaN/Inf rejected");
    }
    return value;
}

cxd parse_complex(const json& node, const std::string& where) {
    if (!node.is_array() || node.size() != 2) {
        fail(errc::input_error, where + ": complex scalars are [re, im] pairs");
    }
    return cxd(parse_finite(node[0], where + "[re]"),
               parse_finite(node[1], where + "[im]"));
}

cvec parse_cvec(const json& node, const std::string& where) {
    if (!node.is_array()) fail(errc::input_error, where + ": expected an array");
    cvec v(static_cast<Eigen::Index>(node.size()));
    for (std::size_t i = 0; i < node.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) =
            parse_complex(node[i], where + "[" + std::to_string(i) + "]");
    }
    return v;
}

rvec parse_rvec(const json& node, const std::string& where) {
    if (!node.is_array()) fail(errc::input_error, where + ": expected an array");
    rvec v(static_cast<Eigen::Index>(node.size()));
    for (std::size_t i = 0; i < node.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) =
            parse_finite(node[i], where + "[" + std::to_string(i) + "]");
    }
    return v;
}

cmat parse_cmat(const json& node, const std::string& where) {
    if (!node.is_array() || node.empty()) {
        fail(errc::input_error, where + ": expected a nonempty array of rows");
    }
    const std::size_t rows = node.size();
    const json& first = node[0];
    if (!first.is_array()) fail(errc::input_error, where + ": rows must be arrays");
    const std::size_t cols = first.size();
    cmat m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = node[i];
        if (!row.is_array() || row.size() != cols) {
            fail(errc::input_error, where + ": ragged rows");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                parse_complex(row[j], where + "[" + std::to_string(i) + "][" +
                                          std::to_string(j) + "]");
        }
    }
    return m;
}

Quadric parse_quadric(const json& doc, const Tolerances& tol) {
    if (!doc.is_object()) fail(errc::input_error, "quadric: expected an object");
    for (const char* key : {"n", "d", "matrices"}) {
        if (!doc.contains(key)) {
            fail(errc::input_error, std::string("quadric: missing field '") + key + "'");
        }
    }
    if (!doc["n"].is_number_integer() || !doc["d"].is_number_integer()) {
        fail(errc::input_error, "quadric: n and d must be integers");
    }
    const auto n = doc["n"].get<Eigen::Index>();
    const auto d = doc["d"].get<Eigen::Index>();
    if (n < 1 || d < 1) fail(errc::input_error, "quadric: n and d must be positive");
    if (!doc["matrices"].is_array() ||
        doc["matrices"].size() != static_cast<std::size_t>(d)) {
        fail(errc::dimension_mismatch, "quadric: expected exactly d matrices");
    }
    std::vector<cmat> matrices;
    matrices.reserve(static_cast<std::size_t>(d));
    for (std::size_t j = 0; j < doc["matrices"].size(); ++j) {
        cmat m = parse_cmat(doc["matrices"][j],
                            "quadric.matrices[" + std::to_string(j) + "]");
        if (m.rows() != n || m.cols() != n) {
            fail(errc::dimension_mismatch,
                 "quadric: matrix " + std::to_string(j + 1) + " is not n x n");
        }
        matrices.push_back(std::move(m));
    }
    return validate_quadric(matrices, tol);
}

Quadric load_quadric(const std::string& path, const Tolerances& tol) {
    std::ifstream in(path);
    if (!in) fail(errc::input_error, "cannot open '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        fail(errc::input_error, "cannot parse '" + path + "': " + e.what());
    }
    return parse_quadric(doc, tol);
}

json quadric_to_json(const Quadric& q) {
    json matrices = json::array();
    for (const cmat& m : q.A) matrices.push_back(cmat_to_json(m));
    return json{{"n", q.n}, {"d", q.d}, {"matrices", matrices}};
}

json tolerances_to_json(const Tolerances& tol) {
    json doc;
    for (const auto& [key, member] : Tolerances::fields()) doc[key] = tol.*member;
    doc["max_iterations"] = tol.max_iterations;
    return doc;
}

namespace {

json finite_or_null(double value) {
    if (!std::isfinite(value)) return nullptr;
    return value;
}

} // namespace

json report_to_json(const JacobianReport& report) {
    json doc{{"matrix", rmat_to_json(report.matrix)},
             {"realification", "interleaved_re_im"},
             {"singular_values", rvec_to_json(report.singular_values)},
             {"sigma_min", report.sigma_min},
             {"condition_number", finite_or_null(report.condition_number)},
             {"scale", report.scale},
             {"threshold", report.threshold},
             {"invertible", report.invertible},
             {"verdict", report.invertible ? "invertible" : "singular"}};
    if (report.complex_matrix) {
        doc["complex_matrix"] = cmat_to_json(*report.complex_matrix);
    }
    return doc;
}

json factorization_to_json(const PencilFactorization& fact) {
    json k = json::array();
    for (const cmat& kj : fact.K) k.push_back(cmat_to_json(kj));
    return json{{"a", cvec_to_json(fact.a)},
                {"b", rvec_to_json(fact.b)},
                {"b0", rvec_to_json(fact.b0())},
                {"X", cmat_to_json(fact.X)},
                {"B", cmat_to_json(fact.B)},
                {"P", cmat_to_json(fact.P)},
                {"A_sum", cmat_to_json(fact.A_sum)},
                {"K", k},
                {"x_norm", fact.x_norm},
                {"residual", fact.residual},
                {"boundary_error", fact.boundary_error}};
}

json certificate_to_json(const MinimalityCertificate& cert) {
    json doc{{"minimal", cert.minimal},
             {"gram", rmat_to_json(cert.gram)},
             {"gram_min_eigenvalue", cert.gram_min_eigenvalue},
             {"stacked_sigma_min", cert.stacked_sigma_min}};
    if (cert.kernel_witness) {
        doc["kernel_witness"] = rvec_to_json(*cert.kernel_witness);
    }
    return doc;
}

} // namespace statdisc
