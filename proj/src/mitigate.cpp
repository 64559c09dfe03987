#include "glint/mitigate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace glint::mitigate {

void BlurConfig::validate(int frame_w, int frame_h) const {
    if (sigma < 0) throw std::invalid_argument("blur: sigma must be >= 0");
    if (feather_px < 0) throw std::invalid_argument("blur: feather must be >= 0");
    if (x0 < 0 || y0 < 0 || width <= 0 || height <= 0 || x0 + width > frame_w ||
        y0 + height > frame_h)
        throw std::invalid_argument("blur: region outside frame bounds");
}

Image blur_region(const Image& frame, const BlurConfig& cfg) {
    cfg.validate(frame.width, frame.height);
    if (cfg.sigma == 0.0) return frame;

    const Image blurred = gaussian_blur(frame, cfg.sigma);
    Image out = frame;
    const double cx = cfg.x0 + cfg.width / 2.0;
    const double cy = cfg.y0 + cfg.height / 2.0;
    const double rx = cfg.width / 2.0;
    const double ry = cfg.height / 2.0;
    const double feather = std::max(cfg.feather_px, 1e-9);

    for (int y = cfg.y0; y < cfg.y0 + cfg.height; ++y) {
        for (int x = cfg.x0; x < cfg.x0 + cfg.width; ++x) {
            double inside;  // distance to the region edge, px (>= 0 inside)
            if (cfg.ellipse) {
                const double nx = (x + 0.5 - cx) / rx, ny = (y + 0.5 - cy) / ry;
                const double rho = std::sqrt(nx * nx + ny * ny);
                if (rho > 1.0) continue;
                inside = (1.0 - rho) * std::min(rx, ry);
            } else {
                inside = std::min(std::min(x - cfg.x0 + 0.5, cfg.x0 + cfg.width - x - 0.5),
                                  std::min(y - cfg.y0 + 0.5, cfg.y0 + cfg.height - y - 0.5));
            }
            const double m = std::clamp(inside / feather, 0.0, 1.0);
            out.at(x, y) = m * blurred.at(x, y) + (1.0 - m) * frame.at(x, y);
        }
    }
    return out;
}

std::vector<metrics::SimilarityScore> residual_leakage(const sim::SceneConfig& scene,
                                                       const std::vector<double>& sigma_grid,
                                                       const mfsr::MfsrParams& params) {
    if (sigma_grid.empty()) throw std::invalid_argument("residual_leakage: empty sigma grid");
    for (size_t i = 0; i < sigma_grid.size(); ++i) {
        if (sigma_grid[i] < 0) throw std::invalid_argument("residual_leakage: sigma must be >= 0");
        if (i > 0 && sigma_grid[i] <= sigma_grid[i - 1])
            throw std::invalid_argument("residual_leakage: grid must be increasing");
    }

    const sim::FrameStack stack = sim::synthesize_frames(scene, params.n_frames);
    const Image reference = sim::scene_template(scene, params.scale_factor);

    std::vector<metrics::SimilarityScore> out;
    for (double sigma : sigma_grid) {
        sim::FrameStack filtered = stack;
        if (sigma > 0) {
            BlurConfig cfg;
            cfg.x0 = 0;
            cfg.y0 = 0;
            cfg.width = stack.frames[0].width;
            cfg.height = stack.frames[0].height;
            cfg.sigma = sigma;
            for (auto& f : filtered.frames) f = blur_region(f, cfg);
        }
        const auto recon = mfsr::reconstruct(filtered, params);
        out.push_back(metrics::cwssim(recon.image, reference));
    }
    return out;
}

} // namespace glint::mitigate
