#include "run.hpp"

#include <cmath>
#include <sstream>

#include "disc.hpp"
#include "errors.hpp"
#include "fourier.hpp"
#include "jets.hpp"
#include "linalg.hpp"
#include "log.hpp"
#include "minimality.hpp"
#include "pencil.hpp"
#include "quadric.hpp"
#include "report.hpp"

namespace statdisc {

namespace {

constexpr double two_pi = 6.28318530717958647692;

const std::vector<std::string>& known_commands() {
    static const std::vector<std::string> commands = {
        "check", "solve-x", "disc", "verify", "jet",
        "jacobian", "center", "minimal", "defect", "scan"};
    return commands;
}

int next_power_of_two(int n) {
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

struct Context {
    RunConfig config;
    Tolerances tol;
    Quadric q;
    cvec a;
    rvec b0;
    double b0_sigma_min = 0.0;
    std::string b0_source;
};

Context make_context(const RunConfig& config, bool needs_parameters) {
    Context ctx;
    ctx.config = config;
    for (const auto& [name, value] : config.tolerance_overrides) {
        ctx.tol.set(name, value);
    }
    if (config.quadric_inline) {
        ctx.q = parse_quadric(*config.quadric_inline, ctx.tol);
    } else if (!config.input_path.empty()) {
        ctx.q = load_quadric(config.input_path, ctx.tol);
    } else {
        fail(errc::input_error, "no quadric input (input_path or inline quadric)");
    }
    if (!needs_parameters) return ctx;

    ctx.a = config.a.value_or(cvec::Zero(ctx.q.d));
    if (ctx.a.size() != ctx.q.d) {
        fail(errc::dimension_mismatch, "parameter a must have d components");
    }
    if (config.b0) {
        ctx.b0 = *config.b0;
        if (ctx.b0.size() != ctx.q.d) {
            fail(errc::dimension_mismatch, "parameter b0 must have d components");
        }
        ctx.b0_sigma_min = sigma_min(ctx.q.levi_combination(ctx.b0));
        ctx.b0_source = "provided";
    } else {
        const LeviDirection dir =
            find_levi_direction(ctx.q, config.trials, config.seed, ctx.tol);
        ctx.b0 = dir.b0;
        ctx.b0_sigma_min = dir.smallest_singular_value;
        ctx.b0_source = "search";
    }
    return ctx;
}

cvec require_v(const Context& ctx) {
    if (!ctx.config.V) {
        fail(errc::invalid_argument,
             "command '" + ctx.config.command + "' requires the parameter V");
    }
    if (ctx.config.V->size() != ctx.q.n) {
        fail(errc::dimension_mismatch, "parameter V must have n components");
    }
    return *ctx.config.V;
}

json echo_config(const Context& ctx, bool with_parameters) {
    json doc;
    doc["command"] = ctx.config.command;
    doc["input"] = ctx.config.quadric_inline ? "(inline)" : ctx.config.input_path;
    doc["seed"] = ctx.config.seed;
    doc["trials"] = ctx.config.trials;
    if (ctx.config.samples > 0) doc["samples"] = ctx.config.samples;
    if (ctx.config.step > 0.0) doc["step"] = ctx.config.step;
    if (ctx.config.radius > 0.0) doc["radius"] = ctx.config.radius;
    if (ctx.config.probes > 0) doc["probes"] = ctx.config.probes;
    doc["dump"] = ctx.config.dump;
    doc["fourier"] = ctx.config.fourier;
    if (with_parameters) {
        doc["a"] = cvec_to_json(ctx.a);
        doc["b0"] = rvec_to_json(ctx.b0);
        doc["b0_source"] = ctx.b0_source;
    }
    if (ctx.config.V) doc["V"] = cvec_to_json(*ctx.config.V);
    if (!ctx.config.grid.empty()) {
        json axes = json::array();
        for (const GridAxis& axis : ctx.config.grid) {
            axes.push_back(json{{"param", axis.param},
                                {"index", axis.index},
                                {"part", axis.imag ? "im" : "re"},
                                {"min", axis.lo},
                                {"max", axis.hi},
                                {"count", axis.count}});
        }
        doc["grid"] = axes;
    }
    return doc;
}

// ---------------------------------------------------------------------------
// command bodies: fill results, return "ok"/"fail" plus an optional error code

struct Outcome {
    std::string status = "ok";
    errc code = errc::ok;
    std::string message;
};

Outcome cmd_check(const Context& ctx, json& results) {
    results["n"] = ctx.q.n;
    results["d"] = ctx.q.d;
    results["b0"] = rvec_to_json(ctx.b0);
    results["b0_sigma_min"] = ctx.b0_sigma_min;
    results["b0_source"] = ctx.b0_source;
    if (ctx.config.V) {
        const cvec V = require_v(ctx);
        results["d_nondegenerate"] =
            report_to_json(is_d_nondegenerate(ctx.q, ctx.b0, V, ctx.tol));
        results["fully_nondegenerate"] =
            report_to_json(is_fully_nondegenerate(ctx.q, ctx.b0, V, ctx.tol));
    }
    return {};
}

Outcome cmd_solve_x(const Context& ctx, json& results) {
    const PencilFactorization fact = factorize(ctx.q, ctx.a, ctx.b0, ctx.tol);
    results["X"] = cmat_to_json(fact.X);
    results["x_norm"] = fact.x_norm;
    results["residual"] = fact.residual;
    results["boundary_error"] = fact.boundary_error;
    results["B"] = cmat_to_json(fact.B);
    results["b"] = rvec_to_json(fact.b);
    if (ctx.config.dump) results["factorization"] = factorization_to_json(fact);
    return {};
}

Outcome cmd_disc(const Context& ctx, json& results) {
    const cvec V = require_v(ctx);
    const StationaryDisc disc =
        build_disc(ctx.q, DiscParameters{ctx.a, ctx.b0, V}, ctx.tol);
    const int samples = ctx.config.samples > 0 ? ctx.config.samples : 64;
    if (samples < 1) fail(errc::invalid_argument, "samples must be positive");

    json zeta = json::array(), h = json::array(), g = json::array();
    json htilde = json::array(), gtilde = json::array();
    for (int k = 0; k < samples; ++k) {
        const cxd z = std::polar(1.0, two_pi * k / samples);
        const DiscValue f = eval_disc(disc, z);
        const DiscValue lift = eval_lift(disc, z);
        zeta.push_back(complex_to_json(z));
        h.push_back(cvec_to_json(f.h));
        g.push_back(cvec_to_json(f.g));
        htilde.push_back(cvec_to_json(lift.h));
        gtilde.push_back(cvec_to_json(lift.g));
    }
    results["samples"] = samples;
    results["zeta"] = zeta;
    results["h"] = h;
    results["g"] = g;
    results["htilde"] = htilde;
    results["gtilde"] = gtilde;
    results["iy"] = cvec_to_json(disc.iy);
    results["x_norm"] = disc.fact.x_norm;
    if (ctx.config.dump) {
        results["factorization"] = factorization_to_json(disc.fact);
    }

    if (ctx.config.fourier) {
        const int m = next_power_of_two(std::max(128, samples));
        std::vector<std::string> labels;
        std::vector<std::vector<cxd>> sequences;
        for (Eigen::Index i = 0; i < ctx.q.n + ctx.q.d; ++i) {
            const bool is_h = i < ctx.q.n;
            labels.push_back((is_h ? "h" : "g") +
                             std::to_string(is_h ? i + 1 : i - ctx.q.n + 1));
            sequences.emplace_back(static_cast<std::size_t>(m));
        }
        for (int k = 0; k < m; ++k) {
            const DiscValue f = eval_disc(disc, std::polar(1.0, two_pi * k / m));
            for (Eigen::Index i = 0; i < ctx.q.n; ++i) sequences[i][k] = f.h(i);
            for (Eigen::Index j = 0; j < ctx.q.d; ++j)
                sequences[ctx.q.n + j][k] = f.g(j);
        }
        json table;
        for (std::size_t i = 0; i < sequences.size(); ++i) {
            json coeffs = json::array();
            for (const cxd& c : fourier_coefficients(sequences[i])) {
                coeffs.push_back(complex_to_json(c));
            }
            table[labels[i]] = coeffs;
        }
        results["fourier"] = json{{"samples", m}, {"coefficients", table}};
    }
    return {};
}

Outcome cmd_verify(const Context& ctx, json& results) {
    const cvec V = require_v(ctx);
    const StationaryDisc disc =
        build_disc(ctx.q, DiscParameters{ctx.a, ctx.b0, V}, ctx.tol);
    const int att_samples = ctx.config.samples > 0 ? ctx.config.samples : 256;
    const int fourier_samples = next_power_of_two(std::max(128, att_samples));

    const double scale =
        scale_of({V.norm(), max_norm(disc.fact.A_sum), max_norm(disc.fact.B)});

    const DiscValue f1 = eval_disc(disc, cxd(1.0, 0.0));
    const DiscValue lift1 = eval_lift(disc, cxd(1.0, 0.0));
    const cvec half_b0 = 0.5 * ctx.b0.cast<cxd>();
    const double pinning_error =
        std::max({max_norm(f1.h), max_norm(f1.g), max_norm(lift1.h),
                  max_norm(cvec(lift1.g - half_b0))});
    const bool pinning_pass = pinning_error <= ctx.tol.pinning * scale;

    const double attachment = verify_attachment(disc, att_samples);
    const bool attachment_pass = attachment <= ctx.tol.attachment * scale;

    const HolomorphyReport holo =
        verify_lift_holomorphic(disc, fourier_samples, ctx.tol);

    results["pinning"] = json{{"error", pinning_error},
                              {"threshold", ctx.tol.pinning * scale},
                              {"pass", pinning_pass}};
    results["attachment"] = json{{"samples", att_samples},
                                 {"max_residual", attachment},
                                 {"threshold", ctx.tol.attachment * scale},
                                 {"pass", attachment_pass}};
    results["lift_holomorphic"] = json{{"samples", fourier_samples},
                                       {"max_negative", holo.max_negative},
                                       {"max_coefficient", holo.max_coefficient},
                                       {"threshold", holo.threshold},
                                       {"pass", holo.pass}};

    bool all = pinning_pass && attachment_pass && holo.pass;
    if (max_norm(ctx.a) == 0.0) {
        // a = 0 reduces to the special polynomial family; compare pointwise.
        double worst = 0.0;
        for (int k = 0; k < 64; ++k) {
            const cxd z = std::polar(1.0, two_pi * k / 64.0);
            const DiscValue f = eval_disc(disc, z);
            const DiscValue lift = eval_lift(disc, z);
            const cvec h_ref = (1.0 - z) * V;
            worst = std::max(worst, max_norm(cvec(f.h - h_ref)));
            for (Eigen::Index j = 0; j < ctx.q.d; ++j) {
                const cxd g_ref = 2.0 * (1.0 - z) * V.dot(ctx.q.A[j] * V);
                worst = std::max(worst, std::abs(f.g(j) - g_ref));
            }
            const cvec ht_ref = (1.0 - z) * (disc.fact.A_sum * V).conjugate();
            const cvec gt_ref = 0.5 * z * ctx.b0.cast<cxd>();
            worst = std::max({worst, max_norm(cvec(lift.h - ht_ref)),
                              max_norm(cvec(lift.g - gt_ref))});
        }
        const bool special_pass = worst <= ctx.tol.pinning * scale;
        results["special_family"] = json{{"max_error", worst},
                                         {"threshold", ctx.tol.pinning * scale},
                                         {"pass", special_pass}};
        all = all && special_pass;
    }
    results["pass"] = all;
    if (!all) {
        return Outcome{"fail", errc::tolerance_fail,
                       "one or more disc verifications exceeded tolerance"};
    }
    return {};
}

Outcome cmd_jet(const Context& ctx, json& results) {
    const cvec V = require_v(ctx);
    const StationaryDisc disc =
        build_disc(ctx.q, DiscParameters{ctx.a, ctx.b0, V}, ctx.tol);
    const double step = ctx.config.step > 0.0 ? ctx.config.step : ctx.tol.fd_step;
    const Jet1 analytic = jet1(disc);
    const Jet1 numeric = jet1_numeric(disc, step);

    auto rel_error = [](const cvec& x, const cvec& y) {
        double worst = 0.0;
        for (Eigen::Index i = 0; i < x.size(); ++i) {
            worst = std::max(worst,
                             std::abs(x(i) - y(i)) / (1.0 + std::abs(x(i))));
        }
        return worst;
    };
    const double deviation = std::max({rel_error(analytic.h_prime, numeric.h_prime),
                                       rel_error(analytic.g_prime, numeric.g_prime),
                                       rel_error(analytic.gtilde_prime,
                                                 numeric.gtilde_prime)});
    const bool pass = deviation <= ctx.tol.fd_match;
    results["h_prime"] = cvec_to_json(analytic.h_prime);
    results["g_prime"] = cvec_to_json(analytic.g_prime);
    results["gtilde_prime"] = cvec_to_json(analytic.gtilde_prime);
    results["numeric"] = json{{"step", step},
                              {"h_prime", cvec_to_json(numeric.h_prime)},
                              {"g_prime", cvec_to_json(numeric.g_prime)},
                              {"gtilde_prime", cvec_to_json(numeric.gtilde_prime)}};
    results["max_relative_error"] = deviation;
    results["pass"] = pass;
    if (!pass) {
        return Outcome{"fail", errc::tolerance_fail,
                       "closed-form and numeric 1-jets disagree beyond tolerance"};
    }
    return {};
}

Outcome cmd_jacobian(const Context& ctx, json& results) {
    const cvec V = require_v(ctx);
    const JacobianReport report =
        jet_map_jacobian(ctx.q, ctx.a, ctx.b0, V, ctx.tol);
    const rmat numeric =
        jet_map_jacobian_numeric(ctx.q, ctx.a, ctx.b0, V, ctx.config.step, ctx.tol);
    const double deviation = max_norm(rmat(report.matrix - numeric));
    const double fd_scale = scale_of({max_norm(report.matrix)});
    const bool fd_pass = deviation <= ctx.tol.fd_match * fd_scale;

    results["jacobian"] = report_to_json(report);
    results["numeric_matrix"] = rmat_to_json(numeric);
    results["numeric_deviation"] = deviation;
    results["numeric_pass"] = fd_pass;

    const NecessityReport necessity =
        necessity_check(ctx.q, ctx.a, ctx.b0, V, ctx.tol);
    results["necessity"] = json{{"minimal", necessity.minimality.minimal},
                                {"jet_invertible", necessity.jet_jacobian.invertible},
                                {"consistent", necessity.consistent},
                                {"verdict", necessity.consistent ? "CONSISTENT"
                                                                 : "CONTRADICTION"}};
    if (!necessity.consistent) {
        return Outcome{"fail", errc::internal_inconsistency,
                       "invertible 1-jet Jacobian with failed stationary minimality"};
    }
    if (!fd_pass) {
        return Outcome{"fail", errc::tolerance_fail,
                       "analytic and finite-difference Jacobians disagree"};
    }
    return {};
}

Outcome cmd_center(const Context& ctx, json& results) {
    const cvec V = require_v(ctx);
    const StationaryDisc disc =
        build_disc(ctx.q, DiscParameters{ctx.a, ctx.b0, V}, ctx.tol);
    const CenterValue value = center_map(disc);
    const DiscValue at_zero = eval_disc(disc, cxd(0.0, 0.0));
    const double scale = scale_of({V.norm(), max_norm(value.g0)});
    const double deviation = std::max(max_norm(cvec(value.h0 - at_zero.h)),
                                      max_norm(cvec(value.g0 - at_zero.g)));
    results["center"] = json{{"h0", cvec_to_json(value.h0)},
                             {"g0", cvec_to_json(value.g0)},
                             {"eval_deviation", deviation}};
    results["jacobian"] =
        report_to_json(center_jacobian(ctx.q, ctx.a, ctx.b0, V, ctx.tol));
    if (deviation > ctx.tol.pinning * scale) {
        return Outcome{"fail", errc::internal_inconsistency,
                       "center map disagrees with the disc evaluation at 0"};
    }
    return {};
}

Outcome cmd_minimal(const Context& ctx, json& results) {
    const cvec V = require_v(ctx);
    const PencilFactorization fact = factorize(ctx.q, ctx.a, ctx.b0, ctx.tol);
    const MinimalityCertificate cert =
        is_stationary_minimal(ctx.q, fact.X, V, ctx.tol);
    results["certificate"] = certificate_to_json(cert);

    const OrbitBasis basis = orbit_basis(fact.X, V, ctx.tol);
    const cmat I = cmat::Identity(ctx.q.n, ctx.q.n);
    const OrbitBasis shifted =
        orbit_basis(fact.X, cvec((I - fact.X) * V), ctx.tol);
    results["orbit"] = json{{"dimension", basis.real_dimension},
                            {"dimension_shifted", shifted.real_dimension}};

    const EquivalenceReport equiv =
        minimality_equivalences(ctx.q, ctx.a, ctx.b0, V, ctx.tol);
    results["equivalences"] = json{
        {"nondefective", equiv.nondefective},
        {"minimal_at_center", equiv.minimal_at_center},
        {"minimal_at_derivative0", equiv.minimal_at_derivative0},
        {"minimal_at_derivative1", equiv.minimal_at_derivative1},
        {"all_agree", equiv.all_agree}};

    if (ctx.config.radius > 0.0 && ctx.config.probes > 0) {
        const OpennessReport probe =
            openness_probe(ctx.q, ctx.a, ctx.b0, V, ctx.config.radius,
                           ctx.config.probes, ctx.config.seed, ctx.tol);
        results["openness"] = json{{"probes", probe.probes},
                                   {"minimal_count", probe.minimal_count},
                                   {"solver_failures", probe.solver_failures},
                                   {"fraction", probe.fraction}};
    }
    return {};
}

Outcome cmd_defect(const Context& ctx, json& results) {
    const cvec V = require_v(ctx);
    const StationaryDisc disc =
        build_disc(ctx.q, DiscParameters{ctx.a, ctx.b0, V}, ctx.tol);
    const DefectReport report = is_defective(disc, ctx.tol);
    results["defective"] = report.defective;
    results["certificate"] = certificate_to_json(report.certificate);
    if (report.witness) {
        results["witness"] = rvec_to_json(*report.witness);
        results["boundary_residual"] = report.boundary_residual;
    }
    return {};
}

Outcome cmd_scan(const Context& ctx, json& results) {
    const cvec base_v = require_v(ctx);
    std::size_t points = ctx.config.grid.empty() ? 0 : 1;
    for (const GridAxis& axis : ctx.config.grid) {
        if (axis.count <= 0) {
            points = 0;
            break;
        }
        points *= static_cast<std::size_t>(axis.count);
        if (axis.param != "a" && axis.param != "V") {
            fail(errc::invalid_argument, "grid parameter must be 'a' or 'V'");
        }
        const Eigen::Index limit = axis.param == "a" ? ctx.q.d : ctx.q.n;
        if (axis.index < 1 || axis.index > limit) {
            fail(errc::invalid_argument, "grid component index out of range");
        }
    }

    json records = json::array();
    std::size_t solved = 0, failures = 0, nondefective = 0;
    std::size_t jet_invertible = 0, center_invertible = 0;

    for (std::size_t flat = 0; flat < points; ++flat) {
        cvec a_pt = ctx.a;
        cvec v_pt = base_v;
        std::size_t rest = flat;
        // row-major: last axis fastest
        for (std::size_t ax = ctx.config.grid.size(); ax-- > 0;) {
            const GridAxis& axis = ctx.config.grid[ax];
            const std::size_t i = rest % static_cast<std::size_t>(axis.count);
            rest /= static_cast<std::size_t>(axis.count);
            const double value =
                axis.count == 1
                    ? axis.lo
                    : axis.lo + (axis.hi - axis.lo) * static_cast<double>(i) /
                                    (axis.count - 1);
            cxd& slot = axis.param == "a" ? a_pt(axis.index - 1)
                                          : v_pt(axis.index - 1);
            slot = axis.imag ? cxd(slot.real(), value) : cxd(value, slot.imag());
        }

        json record{{"index", flat},
                    {"a", cvec_to_json(a_pt)},
                    {"V", cvec_to_json(v_pt)}};
        try {
            const PencilFactorization fact = factorize(ctx.q, a_pt, ctx.b0, ctx.tol);
            const JacobianReport jet =
                jet_map_jacobian(ctx.q, a_pt, ctx.b0, v_pt, ctx.tol);
            const JacobianReport center =
                center_jacobian(ctx.q, a_pt, ctx.b0, v_pt, ctx.tol);
            const MinimalityCertificate cert =
                is_stationary_minimal(ctx.q, fact.X, v_pt, ctx.tol);
            const StationaryDisc disc =
                build_disc(ctx.q, DiscParameters{a_pt, ctx.b0, v_pt}, ctx.tol);
            const DefectReport defect = is_defective(disc, ctx.tol);

            record["jet_sigma_min"] = jet.sigma_min;
            record["jet_invertible"] = jet.invertible;
            record["center_sigma_min"] = center.sigma_min;
            record["center_invertible"] = center.invertible;
            record["minimal"] = cert.minimal;
            record["defective"] = defect.defective;

            if (defect.defective == cert.minimal) {
                fail(errc::internal_inconsistency,
                     "defect dichotomy violated at scan point " + std::to_string(flat));
            }
            if (jet.invertible && !cert.minimal) {
                fail(errc::internal_inconsistency,
                     "necessity violated at scan point " + std::to_string(flat) +
                         ": invertible 1-jet Jacobian without stationary minimality; " +
                         record.dump());
            }
            ++solved;
            if (!defect.defective) ++nondefective;
            if (jet.invertible) ++jet_invertible;
            if (center.invertible) ++center_invertible;
        } catch (const error& e) {
            if (e.code() == errc::internal_inconsistency) throw;
            ++failures;
            record["error"] = json{{"code", errc_name(e.code())},
                                   {"message", e.what()}};
        }
        records.push_back(std::move(record));
    }

    results["points"] = records;
    results["summary"] = json{{"points", points},
                              {"solved", solved},
                              {"solver_failures", failures},
                              {"nondefective", nondefective},
                              {"jet_diffeomorphism_points", jet_invertible},
                              {"center_diffeomorphism_points", center_invertible},
                              {"necessity_violations", 0}};
    return {};
}

} // namespace

RunConfig parse_config(const json& doc) {
    if (!doc.is_object()) fail(errc::input_error, "config: expected an object");
    RunConfig config;
    if (!doc.contains("command") || !doc["command"].is_string()) {
        fail(errc::input_error, "config: missing command");
    }
    config.command = doc["command"].get<std::string>();
    bool known = false;
    for (const std::string& c : known_commands()) known = known || c == config.command;
    if (!known) fail(errc::input_error, "unknown command '" + config.command + "'");

    if (doc.contains("input_path")) {
        config.input_path = doc["input_path"].get<std::string>();
    }
    if (doc.contains("quadric")) config.quadric_inline = doc["quadric"];
    if (doc.contains("a")) config.a = parse_cvec(doc["a"], "config.a");
    if (doc.contains("b0")) config.b0 = parse_rvec(doc["b0"], "config.b0");
    if (doc.contains("V")) config.V = parse_cvec(doc["V"], "config.V");
    if (doc.contains("samples")) config.samples = doc["samples"].get<int>();
    if (doc.contains("seed")) config.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("trials")) config.trials = doc["trials"].get<int>();
    if (doc.contains("step")) config.step = parse_finite(doc["step"], "config.step");
    if (doc.contains("radius")) {
        config.radius = parse_finite(doc["radius"], "config.radius");
    }
    if (doc.contains("probes")) config.probes = doc["probes"].get<int>();
    if (doc.contains("dump")) config.dump = doc["dump"].get<bool>();
    if (doc.contains("fourier")) config.fourier = doc["fourier"].get<bool>();
    if (doc.contains("tolerances")) {
        if (!doc["tolerances"].is_object()) {
            fail(errc::input_error, "config.tolerances: expected an object");
        }
        for (const auto& [key, value] : doc["tolerances"].items()) {
            config.tolerance_overrides[key] =
                parse_finite(value, "config.tolerances." + key);
        }
    }
    if (doc.contains("grid")) {
        if (!doc["grid"].is_array()) {
            fail(errc::input_error, "config.grid: expected an array");
        }
        for (const json& node : doc["grid"]) {
            GridAxis axis;
            axis.param = node.at("param").get<std::string>();
            axis.index = node.at("index").get<int>();
            const std::string part = node.at("part").get<std::string>();
            if (part != "re" && part != "im") {
                fail(errc::input_error, "config.grid: part must be 're' or 'im'");
            }
            axis.imag = part == "im";
            axis.lo = parse_finite(node.at("min"), "config.grid.min");
            axis.hi = parse_finite(node.at("max"), "config.grid.max");
            axis.count = node.at("count").get<int>();
            config.grid.push_back(axis);
        }
    }
    return config;
}

RunResult run(const RunConfig& config) {
    json report;
    report["library_version"] = kVersion;
    report["command"] = config.command;

    Tolerances tol;
    try {
        for (const auto& [name, value] : config.tolerance_overrides) {
            tol.set(name, value);
        }
        report["tolerances"] = tolerances_to_json(tol);

        Context ctx = make_context(config, /*needs_parameters=*/true);
        report["config"] = echo_config(ctx, /*with_parameters=*/true);

        json results;
        Outcome outcome;
        if (config.command == "check") outcome = cmd_check(ctx, results);
        else if (config.command == "solve-x") outcome = cmd_solve_x(ctx, results);
        else if (config.command == "disc") outcome = cmd_disc(ctx, results);
        else if (config.command == "verify") outcome = cmd_verify(ctx, results);
        else if (config.command == "jet") outcome = cmd_jet(ctx, results);
        else if (config.command == "jacobian") outcome = cmd_jacobian(ctx, results);
        else if (config.command == "center") outcome = cmd_center(ctx, results);
        else if (config.command == "minimal") outcome = cmd_minimal(ctx, results);
        else if (config.command == "defect") outcome = cmd_defect(ctx, results);
        else if (config.command == "scan") outcome = cmd_scan(ctx, results);
        else fail(errc::input_error, "unknown command '" + config.command + "'");

        report["results"] = results;
        report["status"] = outcome.status;
        if (outcome.status != "ok") {
            report["error"] = json{{"code", errc_name(outcome.code)},
                                   {"message", outcome.message}};
            return RunResult{report, 1};
        }
        return RunResult{report, 0};
    } catch (const error& e) {
        log_error(std::string("command failed: ") + e.what());
        report["status"] = "error";
        report["error"] = json{{"code", errc_name(e.code())},
                               {"message", e.what()}};
        return RunResult{report, is_input_error(e.code()) ? 2 : 1};
    } catch (const std::exception& e) {
        log_error(std::string("unexpected exception: ") + e.what());
        report["status"] = "error";
        report["error"] = json{{"code", "UnhandledException"},
                               {"message", e.what()}};
        return RunResult{report, 1};
    }
}

RunResult run_json(const std::string& config_text) {
    json doc;
    try {
        doc = json::parse(config_text);
    } catch (const json::exception& e) {
        json report{{"library_version", kVersion},
                    {"status", "error"},
                    {"error", json{{"code", errc_name(errc::input_error)},
                                   {"message", std::string("config parse: ") + e.what()}}}};
        return RunResult{report, 2};
    }
    try {
        return run(parse_config(doc));
    } catch (const error& e) {
        json report{{"library_version", kVersion},
                    {"status", "error"},
                    {"error", json{{"code", errc_name(e.code())},
                                   {"message", e.what()}}}};
        return RunResult{report, is_input_error(e.code()) ? 2 : 1};
    } catch (const std::exception& e) {
        json report{{"library_version", kVersion},
                    {"status", "error"},
                    {"error", json{{"code", "UnhandledException"},
                                   {"message", e.what()}}}};
        return RunResult{report, 1};
    }
}

} // namespace statdisc
