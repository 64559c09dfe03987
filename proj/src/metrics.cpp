#include "glint/metrics.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "glint/fft.hpp"

namespace glint::metrics {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kLevels = 4;
constexpr int kOrientations = 6;

// ---------------------------------------------------------------------------
// Complex steerable pyramid built in the frequency domain. Oriented angular
// windows cover one half-plane each, so subbands come out complex (analytic).
// Subbands are kept at full resolution; shift tolerance then rests purely on
// the phase behaviour of the coefficients.
// ---------------------------------------------------------------------------

// raised-cosine octave crossfade: hi(rc)=1, hi(rc/2)=0; lo = complement
inline double radial_hi(double r, double rc) {
    if (r >= rc) return 1.0;
    if (r <= rc / 2) return 0.0;
    return std::cos(kPi / 2 * std::log2(rc / r));
}

inline double radial_lo(double r, double rc) {
    if (r >= rc) return 0.0;
    if (r <= rc / 2) return 1.0;
    return std::cos(kPi / 2 * std::log2(2.0 * r / rc));
}

inline double angular_window(double theta, double center) {
    double d = std::fmod(theta - center, 2.0 * kPi);
    if (d < -kPi) d += 2.0 * kPi;
    if (d > kPi) d -= 2.0 * kPi;
    if (std::abs(d) >= kPi / 2) return 0.0;
    return std::pow(std::cos(d), kOrientations - 1);
}

using Subband = std::vector<std::complex<double>>;

// pyramid[level][orientation], all at full image resolution
std::vector<std::vector<Subband>> complex_pyramid(const Image& img) {
    const int w = img.width, h = img.height;
    std::vector<std::complex<double>> spectrum(img.px.size());
    for (size_t i = 0; i < img.px.size(); ++i) spectrum[i] = img.px[i];
    detail::fft2d(spectrum, w, h, false);

    std::vector<std::vector<Subband>> pyr(kLevels);
    std::vector<std::complex<double>> band(spectrum.size());
    for (int level = 0; level < kLevels; ++level) {
        const double rc = kPi / std::pow(2.0, level);
        pyr[level].resize(kOrientations);
        for (int k = 0; k < kOrientations; ++k) {
            const double center = kPi * k / kOrientations;
            for (int y = 0; y < h; ++y) {
                const double wy = 2.0 * kPi * (y <= h / 2 ? y : y - h) / h;
                for (int x = 0; x < w; ++x) {
                    const double wx = 2.0 * kPi * (x <= w / 2 ? x : x - w) / w;
                    const double r = std::hypot(wx, wy);
                    double g = radial_hi(r, rc);
                    if (level > 0) g *= radial_lo(r, rc * 2.0);
                    if (g > 0 && r > 0) g *= angular_window(std::atan2(wy, wx), center);
                    else if (r == 0) g = 0.0;
                    band[static_cast<size_t>(y) * w + x] = spectrum[static_cast<size_t>(y) * w + x] * g;
                }
            }
            detail::fft2d(band, w, h, true);
            pyr[level][k] = band;
        }
    }
    return pyr;
}

} // namespace

SimilarityScore cwssim(const Image& a, const Image& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("cwssim: image dimensions differ");
    if (a.empty()) throw std::invalid_argument("cwssim: empty image");

    const Image pa = pad_reflect(a, 32, 32);
    const Image pb = pad_reflect(b, 32, 32);
    const auto pyr_a = complex_pyramid(pa);
    const auto pyr_b = complex_pyramid(pb);

    SimilarityScore out;
    out.level_scores.assign(kLevels, 0.0);
    double total = 0.0;
    for (int level = 0; level < kLevels; ++level) {
        double level_sum = 0.0;
        for (int k = 0; k < kOrientations; ++k) {
            const Subband& ca = pyr_a[level][k];
            const Subband& cb = pyr_b[level][k];
            std::complex<double> cross(0.0, 0.0);
            double ea = 0.0, eb = 0.0;
            for (size_t i = 0; i < ca.size(); ++i) {
                cross += ca[i] * std::conj(cb[i]);
                ea += std::norm(ca[i]);
                eb += std::norm(cb[i]);
            }
            const double den = ea + eb;
            // stabilizer: 1% of the mean subband energy
            const double K = 0.01 * den / 2.0 + 1e-12;
            const double s = (2.0 * std::abs(cross) + K) / (den + K);
            level_sum += s;
        }
        out.level_scores[level] = level_sum / kOrientations;
        total += level_sum;
    }
    out.value = total / (kLevels * kOrientations);
    return out;
}

PixelStats pixel_stats(const Image& img) {
    if (img.empty()) throw std::invalid_argument("pixel_stats: empty image");
    return {mean(img), stddev(img)};
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("pearson: length mismatch");
    if (xs.size() < 3) throw std::invalid_argument("pearson: need at least 3 samples");
    const double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, syy = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx, dy = ys[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx <= 0 || syy <= 0)
        throw std::invalid_argument("pearson: zero variance argument, correlation undefined");
    return sxy / std::sqrt(sxx * syy);
}

double attack_score(const std::vector<double>& accuracies, double w, bool weight_smaller_more) {
    if (accuracies.size() != 6) throw std::invalid_argument("attack_score: expected 6 accuracies");
    if (w <= 0) throw std::invalid_argument("attack_score: weight must be positive");
    double sum = 0.0;
    for (size_t i = 0; i < 6; ++i) {
        const int expo = weight_smaller_more ? static_cast<int>(6 - i) : static_cast<int>(i + 1);
        sum += std::pow(w, expo) * accuracies[i];
    }
    return std::max(0.0, sum);
}

} // namespace glint::metrics
