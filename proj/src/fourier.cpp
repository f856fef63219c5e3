#include "fourier.hpp"

#include <cmath>

#include "errors.hpp"

namespace statdisc {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void fft_inplace(std::vector<cxd>& data) {
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        fail(errc::invalid_argument, "fft size must be a power of two");
    }
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    const double two_pi = 6.28318530717958647692;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = -two_pi / static_cast<double>(len);
        const cxd wlen(std::cos(angle), std::sin(angle));
        for (std::size_t i = 0; i < n; i += len) {
            cxd w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cxd u = data[i + k];
                const cxd v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

std::vector<cxd> fourier_coefficients(std::vector<cxd> boundary_samples) {
    const double n = static_cast<double>(boundary_samples.size());
    fft_inplace(boundary_samples);
    for (cxd& c : boundary_samples) c /= n;
    return boundary_samples;
}

NegativeCoefficientReport analyze_negative_coefficients(
    const std::vector<std::vector<cxd>>& per_component_samples) {
    NegativeCoefficientReport report;
    for (const auto& samples : per_component_samples) {
        const std::size_t n = samples.size();
        const auto coeffs = fourier_coefficients(samples);
        for (std::size_t m = 0; m < n; ++m) {
            const double mag = std::abs(coeffs[m]);
            report.max_coefficient = std::max(report.max_coefficient, mag);
            if (m >= n / 2 && m != 0) {  // frequencies -N/2 .. -1
                report.max_negative = std::max(report.max_negative, mag);
            }
        }
    }
    return report;
}

} // namespace statdisc
