#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace glint {

/// Grayscale image, row-major, values nominally in [0,1].
struct Image {
    int width = 0;
    int height = 0;
    std::vector<double> px;

    Image() = default;
    Image(int w, int h, double fill = 0.0)
        : width(w), height(h), px(static_cast<size_t>(w) * h, fill) {
        if (w < 0 || h < 0) throw std::invalid_argument("Image: negative dimensions");
    }

    bool empty() const { return width == 0 || height == 0; }
    size_t size() const { return px.size(); }

    double& at(int x, int y) { return px[static_cast<size_t>(y) * width + x]; }
    double at(int x, int y) const { return px[static_cast<size_t>(y) * width + x]; }

    bool same_shape(const Image& o) const { return width == o.width && height == o.height; }
};

/// Clamped pixel fetch (clamp-to-edge).
double sample_clamped(const Image& img, int x, int y);

/// Bilinear sample at continuous coordinates (pixel centers at integers), clamp-to-edge.
double sample_bilinear(const Image& img, double x, double y);

/// Catmull-Rom cubic convolution sample, clamp-to-edge.
double sample_bicubic(const Image& img, double x, double y);

/// Translate by (dx, dy) pixels: out(x,y) = in(x-dx, y-dy), bilinear, clamp-to-edge.
Image shift_bilinear(const Image& img, double dx, double dy);

Image resize_bilinear(const Image& img, int out_w, int out_h);

/// Box (area-average) resize; the right choice for downscaling.
Image resize_area(const Image& img, int out_w, int out_h);

/// Separable Gaussian blur, reflect boundary. sigma <= 0 returns a copy.
Image gaussian_blur(const Image& img, double sigma);

/// Separable box blur with fractional window lengths (in pixels) per axis.
/// Length <= 1 leaves the axis untouched.
Image box_blur(const Image& img, double len_x, double len_y);

/// Reflect-pad to at least (min_w, min_h), content centered.
Image pad_reflect(const Image& img, int min_w, int min_h);

Image crop(const Image& img, int x0, int y0, int w, int h);

void clip01(Image& img);

/// Quantize in place to 8-bit levels (round to k/255), clipping first.
void quantize8(Image& img);

double mean(const Image& img);
double stddev(const Image& img);   // population

std::vector<uint8_t> to_u8(const Image& img);
Image from_u8(const std::vector<uint8_t>& data, int w, int h);

} // namespace glint
