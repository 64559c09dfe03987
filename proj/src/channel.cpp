#include "glint/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace glint::channel {

namespace {

constexpr double kPi = 3.14159265358979323846;

// quantization step for block coefficient (u,v): flat base plus a ramp
// toward high frequencies, both scaled by (1 - quality)
constexpr double kQuantBase = 0.05;
constexpr double kQuantRamp = 0.035;

void dct8(const double in[8], double out[8], bool inverse) {
    static double table[8][8];
    static bool init = false;
    if (!init) {
        for (int k = 0; k < 8; ++k)
            for (int n = 0; n < 8; ++n)
                table[k][n] = std::sqrt((k == 0 ? 1.0 : 2.0) / 8.0) *
                              std::cos(kPi * (2 * n + 1) * k / 16.0);
        init = true;
    }
    for (int i = 0; i < 8; ++i) {
        double acc = 0.0;
        for (int j = 0; j < 8; ++j) acc += inverse ? table[j][i] * in[j] : table[i][j] * in[j];
        out[i] = acc;
    }
}

Image block_quantize(const Image& img, double quality) {
    const int bw = (img.width + 7) / 8 * 8;
    const int bh = (img.height + 7) / 8 * 8;
    // edge-replicated working canvas
    Image work(bw, bh);
    for (int y = 0; y < bh; ++y)
        for (int x = 0; x < bw; ++x) work.at(x, y) = sample_clamped(img, x, y);

    const double strength = 1.0 - quality;
    double block[8][8], tmp[8][8];
    for (int by = 0; by < bh; by += 8) {
        for (int bx = 0; bx < bw; bx += 8) {
            for (int y = 0; y < 8; ++y)
                for (int x = 0; x < 8; ++x) block[y][x] = work.at(bx + x, by + y);
            // 2-D DCT
            for (int y = 0; y < 8; ++y) dct8(block[y], tmp[y], false);
            for (int x = 0; x < 8; ++x) {
                double col[8], res[8];
                for (int y = 0; y < 8; ++y) col[y] = tmp[y][x];
                dct8(col, res, false);
                for (int y = 0; y < 8; ++y) block[y][x] = res[y];
            }
            // quantize
            for (int v = 0; v < 8; ++v)
                for (int u = 0; u < 8; ++u) {
                    const double q = strength * (kQuantBase + kQuantRamp * (u + v));
                    if (q > 0) block[v][u] = std::round(block[v][u] / q) * q;
                }
            // inverse
            for (int x = 0; x < 8; ++x) {
                double col[8], res[8];
                for (int y = 0; y < 8; ++y) col[y] = block[y][x];
                dct8(col, res, true);
                for (int y = 0; y < 8; ++y) tmp[y][x] = res[y];
            }
            for (int y = 0; y < 8; ++y) {
                double row[8];
                dct8(tmp[y], row, true);
                for (int x = 0; x < 8; ++x) work.at(bx + x, by + y) = row[x];
            }
        }
    }
    Image out(img.width, img.height);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) out.at(x, y) = work.at(x, y);
    return out;
}

} // namespace

void ChannelProfile::validate() const {
    if (upload_kbps <= 0) throw std::invalid_argument("channel: bandwidth must be positive");
    if (output_height != 1080 && output_height != 720 && output_height != 360 &&
        output_height != 180)
        throw std::invalid_argument("channel: resolution must be one of 1080/720/360/180");
    if (output_fps <= 0) throw std::invalid_argument("channel: fps must be positive");
    if (quality < 0 || quality > 1) throw std::invalid_argument("channel: quality must be in [0,1]");
}

std::vector<Tier> default_tiers() {
    return {{1500, 720, 30, 0.9}, {1000, 360, 30, 0.7}, {500, 360, 15, 0.5}, {0, 180, 10, 0.3}};
}

std::vector<Tier> skype_tiers() {
    // holds quality down to lower bandwidths than the default service
    return {{1200, 720, 30, 0.9}, {800, 360, 30, 0.7}, {400, 360, 15, 0.5}, {0, 180, 10, 0.3}};
}

std::vector<Tier> meet_tiers() {
    return {{2000, 720, 30, 0.8}, {1200, 360, 30, 0.6}, {600, 360, 15, 0.4}, {0, 180, 10, 0.25}};
}

ChannelProfile profile_for_bandwidth(double kbps, const std::vector<Tier>& tiers) {
    if (kbps <= 0) throw std::invalid_argument("profile_for_bandwidth: bandwidth must be positive");
    for (const auto& t : tiers) {
        if (kbps >= t.min_kbps) {
            ChannelProfile p;
            p.upload_kbps = kbps;
            p.output_height = t.height;
            p.output_fps = t.fps;
            p.quality = t.quality;
            p.validate();
            return p;
        }
    }
    throw std::invalid_argument("profile_for_bandwidth: no tier matched");
}

sim::FrameStack apply_profile(const sim::FrameStack& stack, const ChannelProfile& profile,
                              double source_height) {
    profile.validate();
    stack.validate();

    sim::FrameStack out;
    out.seed = stack.seed;
    out.cap_height_px = stack.cap_height_px;
    out.unresolvable = stack.unresolvable;
    out.exposure = stack.exposure;

    const double out_fps = std::min(profile.output_fps, stack.frame_rate);
    out.frame_rate = out_fps;
    const double stride = stack.frame_rate / out_fps;
    const int n_out = static_cast<int>(std::ceil(stack.frames.size() / stride));

    const double ratio = std::min(1.0, profile.output_height / source_height);
    for (int j = 0; j < n_out; ++j) {
        const int src = std::min(static_cast<int>(std::floor(j * stride)),
                                 static_cast<int>(stack.frames.size()) - 1);
        Image f = stack.frames[src];
        if (ratio < 1.0) {
            const int dw = std::max(1, static_cast<int>(std::round(f.width * ratio)));
            const int dh = std::max(1, static_cast<int>(std::round(f.height * ratio)));
            f = resize_bilinear(resize_area(f, dw, dh), stack.frames[src].width,
                                stack.frames[src].height);
        }
        if (profile.quality < 1.0) f = block_quantize(f, profile.quality);
        quantize8(f);
        out.frames.push_back(std::move(f));
        if (src < static_cast<int>(stack.true_offsets.size()))
            out.true_offsets.push_back(stack.true_offsets[src]);
    }
    return out;
}

} // namespace glint::channel
