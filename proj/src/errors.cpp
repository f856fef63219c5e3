#include "errors.hpp"

namespace statdisc {

const char* errc_name(errc code) {
    switch (code) {
        case errc::ok: return "Ok";
        case errc::non_hermitian_input: return "NonHermitianInput";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::no_direction_found: return "NoDirectionFound";
        case errc::singular_levi_direction: return "SingularLeviDirection";
        case errc::not_converged: return "NotConverged";
        case errc::norm_too_large: return "NormTooLarge";
        case errc::spectral_radius_too_large: return "SpectralRadiusTooLarge";
        case errc::factorization_residual: return "FactorizationResidual";
        case errc::singular_linear_system: return "SingularLinearSystem";
        case errc::outside_closed_disc: return "OutsideClosedDisc";
        case errc::not_on_boundary: return "NotOnBoundary";
        case errc::internal_inconsistency: return "InternalInconsistency";
        case errc::input_error: return "InputError";
        case errc::tolerance_fail: return "ToleranceFail";
        case errc::solver_fail: return "SolverFail";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

bool is_input_error(errc code) {
    switch (code) {
        case errc::non_hermitian_input:
        case errc::dimension_mismatch:
        case errc::input_error:
        case errc::invalid_argument:
            return true;
        default:
            return false;
    }
}

} // namespace statdisc
