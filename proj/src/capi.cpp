#include "statdisc/statdisc.h"

#include <cstring>
#include <new>
#include <string>

#include "disc.hpp"
#include "errors.hpp"
#include "json_io.hpp"
#include "quadric.hpp"
#include "run.hpp"
#include "types.hpp"

namespace {

using namespace statdisc;

thread_local std::string t_last_error;

statdisc_status map_code(errc code) {
    switch (code) {
        case errc::ok: return STATDISC_OK;
        case errc::non_hermitian_input: return STATDISC_ERR_NON_HERMITIAN;
        case errc::dimension_mismatch: return STATDISC_ERR_DIMENSION;
        case errc::no_direction_found: return STATDISC_ERR_NO_DIRECTION;
        case errc::singular_levi_direction: return STATDISC_ERR_SINGULAR_LEVI;
        case errc::not_converged: return STATDISC_ERR_NOT_CONVERGED;
        case errc::norm_too_large: return STATDISC_ERR_NORM_TOO_LARGE;
        case errc::spectral_radius_too_large: return STATDISC_ERR_SPECTRAL_RADIUS;
        case errc::factorization_residual: return STATDISC_ERR_FACTORIZATION;
        case errc::singular_linear_system: return STATDISC_ERR_SINGULAR_SYSTEM;
        case errc::outside_closed_disc: return STATDISC_ERR_OUTSIDE_DISC;
        case errc::not_on_boundary: return STATDISC_ERR_NOT_ON_BOUNDARY;
        case errc::internal_inconsistency: return STATDISC_ERR_INCONSISTENT;
        case errc::input_error: return STATDISC_ERR_INPUT;
        case errc::tolerance_fail: return STATDISC_ERR_TOLERANCE;
        case errc::solver_fail: return STATDISC_ERR_SOLVER;
        case errc::invalid_argument: return STATDISC_ERR_ARGUMENT;
    }
    return STATDISC_ERR_INTERNAL;
}

template <typename Fn>
statdisc_status guarded(Fn&& fn) {
    try {
        fn();
        t_last_error.clear();
        return STATDISC_OK;
    } catch (const error& e) {
        t_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return STATDISC_ERR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown error";
        return STATDISC_ERR_INTERNAL;
    }
}

cvec from_reim(const double* data, Eigen::Index count) {
    cvec v(count);
    for (Eigen::Index i = 0; i < count; ++i) v(i) = cxd(data[2 * i], data[2 * i + 1]);
    return v;
}

void to_reim(const cvec& v, double* out) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out[2 * i] = v(i).real();
        out[2 * i + 1] = v(i).imag();
    }
}

} // namespace

struct statdisc_quadric {
    statdisc::Quadric value;
};

struct statdisc_disc {
    statdisc::StationaryDisc value;
};

extern "C" {

const char* statdisc_version(void) { return statdisc::kVersion; }

const char* statdisc_last_error(void) { return t_last_error.c_str(); }

statdisc_status statdisc_quadric_parse(const char* json_text,
                                       statdisc_quadric** out) {
    if (json_text == nullptr || out == nullptr) {
        t_last_error = "null argument";
        return STATDISC_ERR_ARGUMENT;
    }
    return guarded([&] {
        json doc;
        try {
            doc = json::parse(json_text);
        } catch (const json::exception& e) {
            fail(errc::input_error, std::string("quadric parse: ") + e.what());
        }
        *out = new statdisc_quadric{parse_quadric(doc)};
    });
}

statdisc_status statdisc_quadric_load(const char* path, statdisc_quadric** out) {
    if (path == nullptr || out == nullptr) {
        t_last_error = "null argument";
        return STATDISC_ERR_ARGUMENT;
    }
    return guarded([&] { *out = new statdisc_quadric{load_quadric(path)}; });
}

void statdisc_quadric_free(statdisc_quadric* q) { delete q; }

int statdisc_quadric_cr_dim(const statdisc_quadric* q) {
    return q == nullptr ? 0 : static_cast<int>(q->value.n);
}

int statdisc_quadric_codim(const statdisc_quadric* q) {
    return q == nullptr ? 0 : static_cast<int>(q->value.d);
}

statdisc_status statdisc_find_levi_direction(const statdisc_quadric* q,
                                             int trials,
                                             unsigned long long seed,
                                             double* b0_out,
                                             double* sigma_min_out) {
    if (q == nullptr || b0_out == nullptr) {
        t_last_error = "null argument";
        return STATDISC_ERR_ARGUMENT;
    }
    return guarded([&] {
        const LeviDirection dir = find_levi_direction(q->value, trials, seed);
        for (Eigen::Index j = 0; j < dir.b0.size(); ++j) b0_out[j] = dir.b0(j);
        if (sigma_min_out != nullptr) *sigma_min_out = dir.smallest_singular_value;
    });
}

statdisc_status statdisc_disc_build(const statdisc_quadric* q,
                                    const double* a_reim, const double* b0,
                                    const double* v_reim,
                                    statdisc_disc** out) {
    if (q == nullptr || a_reim == nullptr || b0 == nullptr || v_reim == nullptr ||
        out == nullptr) {
        t_last_error = "null argument";
        return STATDISC_ERR_ARGUMENT;
    }
    return guarded([&] {
        DiscParameters params;
        params.a = from_reim(a_reim, q->value.d);
        params.b0 = Eigen::Map<const rvec>(b0, q->value.d);
        params.V = from_reim(v_reim, q->value.n);
        *out = new statdisc_disc{build_disc(q->value, params)};
    });
}

void statdisc_disc_free(statdisc_disc* disc) { delete disc; }

statdisc_status statdisc_disc_x_norm(const statdisc_disc* disc, double* out) {
    if (disc == nullptr || out == nullptr) {
        t_last_error = "null argument";
        return STATDISC_ERR_ARGUMENT;
    }
    *out = disc->value.fact.x_norm;
    return STATDISC_OK;
}

statdisc_status statdisc_disc_eval(const statdisc_disc* disc, double zeta_re,
                                   double zeta_im, double* h_reim,
                                   double* g_reim) {
    if (disc == nullptr || h_reim == nullptr || g_reim == nullptr) {
        t_last_error = "null argument";
        return STATDISC_ERR_ARGUMENT;
    }
    return guarded([&] {
        const DiscValue f = eval_disc(disc->value, cxd(zeta_re, zeta_im));
        to_reim(f.h, h_reim);
        to_reim(f.g, g_reim);
    });
}

statdisc_status statdisc_disc_eval_lift(const statdisc_disc* disc,
                                        double zeta_re, double zeta_im,
                                        double* htilde_reim,
                                        double* gtilde_reim) {
    if (disc == nullptr || htilde_reim == nullptr || gtilde_reim == nullptr) {
        t_last_error = "null argument";
        return STATDISC_ERR_ARGUMENT;
    }
    return guarded([&] {
        const DiscValue lift = eval_lift(disc->value, cxd(zeta_re, zeta_im));
        to_reim(lift.h, htilde_reim);
        to_reim(lift.g, gtilde_reim);
    });
}

statdisc_status statdisc_disc_verify(const statdisc_disc* disc,
                                     int attachment_samples,
                                     int fourier_samples,
                                     double* attachment_residual,
                                     double* fourier_negative_max, int* pass) {
    if (disc == nullptr) {
        t_last_error = "null argument";
        return STATDISC_ERR_ARGUMENT;
    }
    return guarded([&] {
        const Tolerances tol;
        const double residual = verify_attachment(disc->value, attachment_samples);
        const HolomorphyReport holo =
            verify_lift_holomorphic(disc->value, fourier_samples, tol);
        const double scale = scale_of({disc->value.params.V.norm(),
                                       max_norm(disc->value.fact.A_sum)});
        const bool ok = residual <= tol.attachment * scale && holo.pass;
        if (attachment_residual != nullptr) *attachment_residual = residual;
        if (fourier_negative_max != nullptr) *fourier_negative_max = holo.max_negative;
        if (pass != nullptr) *pass = ok ? 1 : 0;
    });
}

statdisc_status statdisc_run(const char* config_json, char** report_json_out,
                             int* exit_code_out) {
    if (config_json == nullptr || report_json_out == nullptr ||
        exit_code_out == nullptr) {
        t_last_error = "null argument";
        return STATDISC_ERR_ARGUMENT;
    }
    return guarded([&] {
        const RunResult result = run_json(config_json);
        const std::string text = result.report.dump(2) + "\n";
        char* buffer = new char[text.size() + 1];
        std::memcpy(buffer, text.c_str(), text.size() + 1);
        *report_json_out = buffer;
        *exit_code_out = result.exit_code;
    });
}

void statdisc_string_free(char* text) { delete[] text; }

} // extern "C"
