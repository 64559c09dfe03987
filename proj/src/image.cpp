#include "glint/image.hpp"

#include <algorithm>
#include <cmath>

namespace glint {

double sample_clamped(const Image& img, int x, int y) {
    x = std::clamp(x, 0, img.width - 1);
    y = std::clamp(y, 0, img.height - 1);
    return img.at(x, y);
}

double sample_bilinear(const Image& img, double x, double y) {
    const int x0 = static_cast<int>(std::floor(x));
    const int y0 = static_cast<int>(std::floor(y));
    const double fx = x - x0;
    const double fy = y - y0;
    const double v00 = sample_clamped(img, x0, y0);
    const double v10 = sample_clamped(img, x0 + 1, y0);
    const double v01 = sample_clamped(img, x0, y0 + 1);
    const double v11 = sample_clamped(img, x0 + 1, y0 + 1);
    return (1 - fy) * ((1 - fx) * v00 + fx * v10) + fy * ((1 - fx) * v01 + fx * v11);
}

namespace {
// Keys cubic convolution kernel, a = -0.5 (Catmull-Rom). Weights sum to 1.
inline double cubic_w(double t) {
    t = std::abs(t);
    if (t < 1.0) return 1.0 + t * t * (1.5 * t - 2.5);
    if (t < 2.0) return 2.0 - t * (4.0 - t * (2.5 - 0.5 * t));
    return 0.0;
}
} // namespace

double sample_bicubic(const Image& img, double x, double y) {
    const int x0 = static_cast<int>(std::floor(x));
    const int y0 = static_cast<int>(std::floor(y));
    const double fx = x - x0;
    const double fy = y - y0;
    double acc = 0.0;
    for (int j = -1; j <= 2; ++j) {
        const double wy = cubic_w(j - fy);
        if (wy == 0.0) continue;
        double row = 0.0;
        for (int i = -1; i <= 2; ++i) {
            const double wx = cubic_w(i - fx);
            if (wx == 0.0) continue;
            row += wx * sample_clamped(img, x0 + i, y0 + j);
        }
        acc += wy * row;
    }
    return acc;
}

Image shift_bilinear(const Image& img, double dx, double dy) {
    Image out(img.width, img.height);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            out.at(x, y) = sample_bilinear(img, x - dx, y - dy);
    return out;
}

Image resize_bilinear(const Image& img, int out_w, int out_h) {
    Image out(out_w, out_h);
    const double sx = static_cast<double>(img.width) / out_w;
    const double sy = static_cast<double>(img.height) / out_h;
    for (int y = 0; y < out_h; ++y)
        for (int x = 0; x < out_w; ++x)
            out.at(x, y) = sample_bilinear(img, (x + 0.5) * sx - 0.5, (y + 0.5) * sy - 0.5);
    return out;
}

Image resize_area(const Image& img, int out_w, int out_h) {
    Image out(out_w, out_h);
    const double sx = static_cast<double>(img.width) / out_w;
    const double sy = static_cast<double>(img.height) / out_h;
    for (int y = 0; y < out_h; ++y) {
        const double y0 = y * sy, y1 = (y + 1) * sy;
        for (int x = 0; x < out_w; ++x) {
            const double x0 = x * sx, x1 = (x + 1) * sx;
            double acc = 0.0, area = 0.0;
            for (int yy = static_cast<int>(std::floor(y0)); yy < static_cast<int>(std::ceil(y1)); ++yy) {
                const double hy = std::min<double>(y1, yy + 1) - std::max<double>(y0, yy);
                if (hy <= 0) continue;
                for (int xx = static_cast<int>(std::floor(x0)); xx < static_cast<int>(std::ceil(x1)); ++xx) {
                    const double hx = std::min<double>(x1, xx + 1) - std::max<double>(x0, xx);
                    if (hx <= 0) continue;
                    acc += hx * hy * sample_clamped(img, xx, yy);
                    area += hx * hy;
                }
            }
            out.at(x, y) = area > 0 ? acc / area : 0.0;
        }
    }
    return out;
}

namespace {
inline int reflect_idx(int i, int n) {
    if (n == 1) return 0;
    const int period = 2 * n - 2;
    i = ((i % period) + period) % period;
    return i < n ? i : period - i;
}
} // namespace

Image gaussian_blur(const Image& img, double sigma) {
    if (sigma <= 0.0 || img.empty()) return img;
    const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
    std::vector<double> k(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        k[i + radius] = std::exp(-0.5 * i * i / (sigma * sigma));
        sum += k[i + radius];
    }
    for (double& v : k) v /= sum;

    Image tmp(img.width, img.height), out(img.width, img.height);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i)
                acc += k[i + radius] * img.at(reflect_idx(x + i, img.width), y);
            tmp.at(x, y) = acc;
        }
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i)
                acc += k[i + radius] * tmp.at(x, reflect_idx(y + i, img.height));
            out.at(x, y) = acc;
        }
    return out;
}

namespace {
// 1-D box kernel of fractional length len (>1), normalized.
std::vector<double> box_kernel(double len) {
    const int radius = static_cast<int>(std::ceil((len - 1.0) / 2.0));
    std::vector<double> k(2 * radius + 1, 0.0);
    const double half = len / 2.0;
    for (int i = -radius; i <= radius; ++i) {
        const double lo = std::max(-half, i - 0.5);
        const double hi = std::min(half, i + 0.5);
        k[i + radius] = std::max(0.0, hi - lo);
    }
    double sum = 0.0;
    for (double v : k) sum += v;
    for (double& v : k) v /= sum;
    return k;
}
} // namespace

Image box_blur(const Image& img, double len_x, double len_y) {
    Image out = img;
    if (len_x > 1.0) {
        const auto k = box_kernel(len_x);
        const int radius = (static_cast<int>(k.size()) - 1) / 2;
        Image tmp(out.width, out.height);
        for (int y = 0; y < out.height; ++y)
            for (int x = 0; x < out.width; ++x) {
                double acc = 0.0;
                for (int i = -radius; i <= radius; ++i)
                    acc += k[i + radius] * out.at(reflect_idx(x + i, out.width), y);
                tmp.at(x, y) = acc;
            }
        out = tmp;
    }
    if (len_y > 1.0) {
        const auto k = box_kernel(len_y);
        const int radius = (static_cast<int>(k.size()) - 1) / 2;
        Image tmp(out.width, out.height);
        for (int y = 0; y < out.height; ++y)
            for (int x = 0; x < out.width; ++x) {
                double acc = 0.0;
                for (int i = -radius; i <= radius; ++i)
                    acc += k[i + radius] * out.at(x, reflect_idx(y + i, out.height));
                tmp.at(x, y) = acc;
            }
        out = tmp;
    }
    return out;
}

Image pad_reflect(const Image& img, int min_w, int min_h) {
    if (img.width >= min_w && img.height >= min_h) return img;
    const int out_w = std::max(img.width, min_w);
    const int out_h = std::max(img.height, min_h);
    const int off_x = (out_w - img.width) / 2;
    const int off_y = (out_h - img.height) / 2;
    Image out(out_w, out_h);
    for (int y = 0; y < out_h; ++y)
        for (int x = 0; x < out_w; ++x)
            out.at(x, y) = img.at(reflect_idx(x - off_x, img.width), reflect_idx(y - off_y, img.height));
    return out;
}

Image crop(const Image& img, int x0, int y0, int w, int h) {
    if (x0 < 0 || y0 < 0 || x0 + w > img.width || y0 + h > img.height)
        throw std::invalid_argument("crop: region out of bounds");
    Image out(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            out.at(x, y) = img.at(x0 + x, y0 + y);
    return out;
}

void clip01(Image& img) {
    for (double& v : img.px) v = std::clamp(v, 0.0, 1.0);
}

void quantize8(Image& img) {
    for (double& v : img.px)
        v = std::round(std::clamp(v, 0.0, 1.0) * 255.0) / 255.0;
}

double mean(const Image& img) {
    if (img.empty()) throw std::invalid_argument("mean: empty image");
    double acc = 0.0;
    for (double v : img.px) acc += v;
    return acc / img.px.size();
}

double stddev(const Image& img) {
    const double m = mean(img);
    double acc = 0.0;
    for (double v : img.px) acc += (v - m) * (v - m);
    return std::sqrt(acc / img.px.size());
}

std::vector<uint8_t> to_u8(const Image& img) {
    std::vector<uint8_t> out(img.px.size());
    for (size_t i = 0; i < img.px.size(); ++i)
        out[i] = static_cast<uint8_t>(std::round(std::clamp(img.px[i], 0.0, 1.0) * 255.0));
    return out;
}

Image from_u8(const std::vector<uint8_t>& data, int w, int h) {
    if (data.size() != static_cast<size_t>(w) * h)
        throw std::invalid_argument("from_u8: size mismatch");
    Image out(w, h);
    for (size_t i = 0; i < data.size(); ++i) out.px[i] = data[i] / 255.0;
    return out;
}

} // namespace glint
