#pragma once

#include <stdexcept>
#include <string>

namespace statdisc {

/// Failure categories surfaced through the C API and the CLI exit-code
/// contract (input errors exit 2, mathematical failures exit 1).
enum class errc {
    ok = 0,
    non_hermitian_input,
    dimension_mismatch,
    no_direction_found,
    singular_levi_direction,
    not_converged,
    norm_too_large,
    spectral_radius_too_large,
    factorization_residual,
    singular_linear_system,
    outside_closed_disc,
    not_on_boundary,
    internal_inconsistency,
    input_error,
    tolerance_fail,
    solver_fail,
    invalid_argument,
};

const char* errc_name(errc code);

/// True for errors caused by malformed input (CLI exit 2); everything else
/// is a mathematical/solver failure (CLI exit 1).
bool is_input_error(errc code);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw error(code, message);
}

} // namespace statdisc
