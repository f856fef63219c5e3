#include "tolerances.hpp"

#include <cmath>

#include "errors.hpp"

namespace statdisc {

const Tolerances::field_list& Tolerances::fields() {
    static const field_list list = {
        {"hermitian", &Tolerances::hermitian},
        {"invertibility", &Tolerances::invertibility},
        {"residual", &Tolerances::residual},
        {"x_norm_margin", &Tolerances::x_norm_margin},
        {"fixed_point", &Tolerances::fixed_point},
        {"stein_residual", &Tolerances::stein_residual},
        {"series_term", &Tolerances::series_term},
        {"boundary_identity", &Tolerances::boundary_identity},
        {"pinning", &Tolerances::pinning},
        {"attachment", &Tolerances::attachment},
        {"fourier_rel", &Tolerances::fourier_rel},
        {"imaginary_part", &Tolerances::imaginary_part},
        {"witness", &Tolerances::witness},
        {"fd_step", &Tolerances::fd_step},
        {"fd_match", &Tolerances::fd_match},
    };
    return list;
}

void Tolerances::set(const std::string& name, double value) {
    if (!std::isfinite(value)) {
        fail(errc::invalid_argument, "tolerance '" + name + "' must be finite");
    }
    if (name == "max_iterations") {
        if (value < 1) fail(errc::invalid_argument, "max_iterations must be >= 1");
        max_iterations = static_cast<int>(value);
        return;
    }
    for (const auto& [key, member] : fields()) {
        if (name == key) {
            this->*member = value;
            return;
        }
    }
    fail(errc::invalid_argument, "unknown tolerance '" + name + "'");
}

double Tolerances::get(const std::string& name) const {
    if (name == "max_iterations") return static_cast<double>(max_iterations);
    for (const auto& [key, member] : fields()) {
        if (name == key) return this->*member;
    }
    fail(errc::invalid_argument, "unknown tolerance '" + name + "'");
}

} // namespace statdisc
