#include "glint/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace glint::detail {

namespace {
std::mutex plan_mutex;  // FFTW planning is not thread-safe
}

void fft2d(std::vector<std::complex<double>>& data, int width, int height, bool inverse) {
    if (static_cast<size_t>(width) * height != data.size())
        throw std::invalid_argument("fft2d: buffer/shape mismatch");
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        plan = fftw_plan_dft_2d(height, width, buf, buf,
                                inverse ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        fftw_destroy_plan(plan);
    }
    if (inverse) {
        const double norm = 1.0 / (static_cast<double>(width) * height);
        for (auto& v : data) v *= norm;
    }
}

} // namespace glint::detail
