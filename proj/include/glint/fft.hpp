#pragma once

#include <complex>
#include <vector>

namespace glint::detail {

/// In-place 2-D complex FFT (row-major, height rows of width columns).
/// Inverse transforms are scaled by 1/(w*h).
void fft2d(std::vector<std::complex<double>>& data, int width, int height, bool inverse);

} // namespace glint::detail
