#pragma once

#include <vector>

#include "types.hpp"

namespace statdisc {

bool is_power_of_two(int n);

/// In-place forward DFT, radix-2 Cooley-Tukey. data.size() must be a power
/// of two. Output bin m holds sum_k data[k] * exp(-2*pi*i*k*m/N).
void fft_inplace(std::vector<cxd>& data);

/// Fourier coefficients c_m = (1/N) sum_k f(zeta_k) zeta_k^{-m} of a map
/// sampled at the N-th roots of unity zeta_k = exp(2*pi*i*k/N).
/// Bin m in [0, N/2] is frequency +m; bin m in (N/2, N) aliases m - N < 0.
std::vector<cxd> fourier_coefficients(std::vector<cxd> boundary_samples);

struct NegativeCoefficientReport {
    double max_negative = 0.0;     // max |c_m| over m in [-N/2, -1]
    double max_coefficient = 0.0;  // max |c_m| over all m and components
};

/// Aggregates the negative-frequency mass of a vector-valued boundary map;
/// one sample sequence per component, all of the same power-of-two length.
NegativeCoefficientReport analyze_negative_coefficients(
    const std::vector<std::vector<cxd>>& per_component_samples);

} // namespace statdisc
