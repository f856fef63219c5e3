#pragma once

#include <string>

#include <json.hpp>

#include "disc.hpp"
#include "minimality.hpp"
#include "pencil.hpp"
#include "quadric.hpp"
#include "report.hpp"
#include "tolerances.hpp"
#include "types.hpp"

namespace statdisc {

using json = nlohmann::json;

// Complex scalars are always [re, im] pairs; vectors are arrays of pairs;
// matrices are arrays of rows of pairs. Parsing rejects NaN/Inf everywhere.

json complex_to_json(cxd value);
json cvec_to_json(const cvec& v);
json cmat_to_json(const cmat& m);
json rvec_to_json(const rvec& v);
json rmat_to_json(const rmat& m);

double parse_finite(const json& node, const std::string& where);
cxd parse_complex(const json& node, const std::string& where);
cvec parse_cvec(const json& node, const std::string& where);
rvec parse_rvec(const json& node, const std::string& where);
cmat parse_cmat(const json& node, const std::string& where);

/// Quadric schema: {"n": int, "d": int, "matrices": [d complex n x n]}.
Quadric parse_quadric(const json& doc, const Tolerances& tol = {});
Quadric load_quadric(const std::string& path, const Tolerances& tol = {});
json quadric_to_json(const Quadric& q);

json tolerances_to_json(const Tolerances& tol);
json report_to_json(const JacobianReport& report);
json factorization_to_json(const PencilFactorization& fact);
json certificate_to_json(const MinimalityCertificate& cert);

} // namespace statdisc
